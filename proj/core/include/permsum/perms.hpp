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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permsum/modring.hpp"

namespace permsum {

using Entry = std::uint8_t;

/// Largest supported degree; entries are stored as bytes.
inline constexpr std::uint32_t kMaxDegree = 255;

/// An n-tuple over Z_n, repetitions allowed.
class Tuple {
 public:
  Tuple() = default;
  /// Throws std::invalid_argument if n is outside [1, kMaxDegree], the
  /// length differs from n, or an entry is >= n.
  Tuple(std::uint32_t n, std::vector<Entry> entries);

  std::uint32_t n() const { return n_; }
  std::span<const Entry> entries() const { return entries_; }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }

  bool is_permutation() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Entry> entries_;
};

/// A Tuple whose entries are pairwise distinct. Only constructible through
/// checked factories.
class Perm {
 public:
  /// Throws std::invalid_argument if t is not a permutation.
  static Perm from(Tuple t);
  static std::optional<Perm> try_from(Tuple t);
  static Perm from_entries(std::uint32_t n, std::vector<Entry> entries);
  static Perm identity(std::uint32_t n);

  std::uint32_t n() const { return tuple_.n(); }
  std::span<const Entry> entries() const { return tuple_.entries(); }
  Entry operator[](std::size_t i) const { return tuple_[i]; }
  std::size_t size() const { return tuple_.size(); }
  const Tuple& tuple() const { return tuple_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(Tuple t) : tuple_(std::move(t)) {}
  Tuple tuple_;
};

enum class Property { P1, P2, P3 };

std::string_view to_string(Property p);
/// Accepts "P1"/"P2"/"P3" and lowercase forms.
std::optional<Property> parse_property(std::string_view text);

/// True iff the entries are exactly {0, ..., n-1}.
bool is_permutation(std::span<const Entry> entries, std::uint32_t n);

/// Entry i is (a_i + b_i) mod n. Throws on mismatched n.
Tuple pointwise_add(const Tuple& a, const Tuple& b);
/// Entry i is (a_i - b_i) mod n. Throws on mismatched n.
Tuple pointwise_sub(const Tuple& a, const Tuple& b);
inline Tuple pointwise_add(const Perm& a, const Perm& b) {
  return pointwise_add(a.tuple(), b.tuple());
}
inline Tuple pointwise_sub(const Perm& a, const Perm& b) {
  return pointwise_sub(a.tuple(), b.tuple());
}

/// Entry i is (s * p_i + t) mod n. A permutation iff s is a unit.
Tuple affine_apply(Residue s, Residue t, const Tuple& p);
inline Tuple affine_apply(Residue s, Residue t, const Perm& p) {
  return affine_apply(s, t, p.tuple());
}

/// compose(a, b)_i = a_{b_i}
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);

/// Allocation-free pair test on raw entry rows of equal length n: P1 asks for
/// a + b to be a permutation, P2 for it not to be, P3 for a - b to be one.
/// Does not reject a == b; callers on the hot path guarantee distinctness.
bool pair_property_unchecked(std::span<const Entry> a, std::span<const Entry> b,
                             std::uint32_t n, Property prop);

/// The pairwise predicate behind P1/P2/P3. Throws std::invalid_argument when
/// a == b or the degrees differ: the properties quantify over distinct pairs.
bool pair_property(const Perm& a, const Perm& b, Property prop);

/// sum_i a_i * b_i mod n
Residue inner_product_mod(const Tuple& a, const Tuple& b);
inline Residue inner_product_mod(const Perm& a, const Perm& b) {
  return inner_product_mod(a.tuple(), b.tuple());
}

/// Space-separated decimal entries, e.g. "0 1 2 3 4".
std::string format_perm(const Tuple& t);
inline std::string format_perm(const Perm& p) { return format_perm(p.tuple()); }

/// Parses the text form for a given n. Throws ParseError on malformed text,
/// wrong length, out-of-range entries, or repeated entries.
Perm parse_perm(std::string_view line, std::uint32_t n);

/// Every permutation of {0, ..., n-1} in lexicographic order.
std::vector<Perm> all_permutations(std::uint32_t n);

}  // namespace permsum
