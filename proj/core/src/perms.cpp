/*
 * Copyright 2026 The permsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "permsum/perms.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "permsum/errors.hpp"

namespace permsum {

namespace {

void require_same_degree(std::uint32_t a, std::uint32_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

Tuple::Tuple(std::uint32_t n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0 || n > kMaxDegree) {
    throw std::invalid_argument("degree must lie in [1, 255], got " +
                                std::to_string(n));
  }
  if (entries_.size() != n) {
    throw std::invalid_argument("tuple length " +
                                std::to_string(entries_.size()) +
                                " does not match n = " + std::to_string(n));
  }
  for (Entry e : entries_) {
    if (e >= n) {
      throw std::invalid_argument("entry " + std::to_string(e) +
                                  " out of range for n = " + std::to_string(n));
    }
  }
}

bool Tuple::is_permutation() const {
  return permsum::is_permutation(entries_, n_);
}

bool is_permutation(std::span<const Entry> entries, std::uint32_t n) {
  if (entries.size() != n) return false;
  std::bitset<256> seen;
  for (Entry e : entries) {
    if (e >= n || seen[e]) return false;
    seen.set(e);
  }
  return true;
}

Perm Perm::from(Tuple t) {
  if (!t.is_permutation()) {
    throw std::invalid_argument("not a permutation: " + format_perm(t));
  }
  return Perm(std::move(t));
}

std::optional<Perm> Perm::try_from(Tuple t) {
  if (!t.is_permutation()) return std::nullopt;
  return Perm(std::move(t));
}

Perm Perm::from_entries(std::uint32_t n, std::vector<Entry> entries) {
  return from(Tuple(n, std::move(entries)));
}

Perm Perm::identity(std::uint32_t n) {
  std::vector<Entry> e(n);
  std::iota(e.begin(), e.end(), Entry{0});
  return Perm(Tuple(n, std::move(e)));
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::P1:
      return "P1";
    case Property::P2:
      return "P2";
    case Property::P3:
      return "P3";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view text) {
  if (text == "P1" || text == "p1") return Property::P1;
  if (text == "P2" || text == "p2") return Property::P2;
  if (text == "P3" || text == "p3") return Property::P3;
  return std::nullopt;
}

Tuple pointwise_add(const Tuple& a, const Tuple& b) {
  require_same_degree(a.n(), b.n(), "pointwise_add");
  const std::uint32_t n = a.n();
  std::vector<Entry> out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = static_cast<Entry>((a[i] + b[i]) % n);
  }
  return Tuple(n, std::move(out));
}

Tuple pointwise_sub(const Tuple& a, const Tuple& b) {
  require_same_degree(a.n(), b.n(), "pointwise_sub");
  const std::uint32_t n = a.n();
  std::vector<Entry> out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = static_cast<Entry>((a[i] + n - b[i]) % n);
  }
  return Tuple(n, std::move(out));
}

Tuple affine_apply(Residue s, Residue t, const Tuple& p) {
  const std::uint64_t n = p.n();
  std::vector<Entry> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Entry>((s % n * p[i] + t % n) % n);
  }
  return Tuple(p.n(), std::move(out));
}

Perm compose(const Perm& a, const Perm& b) {
  require_same_degree(a.n(), b.n(), "compose");
  std::vector<Entry> out(a.n());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[b[i]];
  return Perm::from_entries(a.n(), std::move(out));
}

Perm invert(const Perm& a) {
  std::vector<Entry> out(a.n());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[a[i]] = static_cast<Entry>(i);
  }
  return Perm::from_entries(a.n(), std::move(out));
}

bool pair_property_unchecked(std::span<const Entry> a, std::span<const Entry> b,
                             std::uint32_t n, Property prop) {
  // Values of a_i + b_i stay below 2n <= 510, so one conditional subtract
  // reduces them.
  std::bitset<256> seen;
  bool perm = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t v = (prop == Property::P3) ? a[i] + n - b[i] : a[i] + b[i];
    if (v >= n) v -= n;
    if (seen[v]) {
      perm = false;
      break;
    }
    seen.set(v);
  }
  return prop == Property::P2 ? !perm : perm;
}

bool pair_property(const Perm& a, const Perm& b, Property prop) {
  require_same_degree(a.n(), b.n(), "pair_property");
  if (a == b) {
    throw std::invalid_argument(
        "pair_property is defined for distinct permutations only");
  }
  return pair_property_unchecked(a.entries(), b.entries(), a.n(), prop);
}

Residue inner_product_mod(const Tuple& a, const Tuple& b) {
  require_same_degree(a.n(), b.n(), "inner_product_mod");
  const std::uint64_t n = a.n();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = (acc + std::uint64_t{a[i]} * b[i]) % n;
  }
  return static_cast<Residue>(acc);
}

std::string format_perm(const Tuple& t) {
  std::string out;
  out.reserve(t.size() * 4);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(t[i]);
  }
  return out;
}

Perm parse_perm(std::string_view line, std::uint32_t n) {
  std::vector<Entry> entries;
  entries.reserve(n);
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    unsigned value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first ||
        (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("malformed permutation entry in '" + std::string(line) +
                       "'");
    }
    if (value >= n) {
      throw ParseError("entry " + std::to_string(value) +
                       " out of range for n = " + std::to_string(n));
    }
    entries.push_back(static_cast<Entry>(value));
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (entries.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " entries, got " +
                     std::to_string(entries.size()));
  }
  if (!is_permutation(entries, n)) {
    throw ParseError("not a permutation: '" + std::string(line) + "'");
  }
  return Perm::from_entries(n, std::move(entries));
}

std::vector<Perm> all_permutations(std::uint32_t n) {
  std::vector<Entry> e(n);
  std::iota(e.begin(), e.end(), Entry{0});
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_entries(n, e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace permsum
