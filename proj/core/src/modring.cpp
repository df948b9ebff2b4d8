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

#include "permsum/modring.hpp"

#include <stdexcept>
#include <string>

namespace permsum {

std::uint32_t PrimePower::value() const {
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Modulus factorize(std::uint32_t n) {
  if (n < 2) {
    throw std::invalid_argument("modulus must be >= 2, got " +
                                std::to_string(n));
  }
  Modulus m;
  m.n_ = n;
  m.phi_ = 1;
  std::uint32_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp{static_cast<std::uint32_t>(p), 0};
    while (rest % p == 0) {
      rest /= static_cast<std::uint32_t>(p);
      ++pp.exponent;
    }
    m.factors_.push_back(pp);
  }
  if (rest > 1) m.factors_.push_back({rest, 1});
  for (const auto& pp : m.factors_) {
    m.phi_ *= (pp.value() / pp.prime) * (pp.prime - 1);
  }
  return m;
}

std::uint32_t gcd(std::uint32_t a, std::uint32_t b) {
  while (b != 0) {
    const std::uint32_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_unit(Residue x, const Modulus& m) {
  return gcd(x % m.n(), m.n()) == 1;
}

namespace {

// Extended Euclid over signed 64-bit; returns inverse of a mod q if it exists.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t q) {
  std::int64_t old_r = static_cast<std::int64_t>(a % q);
  std::int64_t r = static_cast<std::int64_t>(q);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  const auto qi = static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(((old_s % qi) + qi) % qi);
}

}  // namespace

std::optional<Residue> inverse(Residue x, const Modulus& m) {
  if (m.n() == 1) return std::nullopt;
  auto inv = inverse_mod(x % m.n(), m.n());
  if (!inv) return std::nullopt;
  return static_cast<Residue>(*inv);
}

std::vector<Residue> units(const Modulus& m) {
  std::vector<Residue> out;
  out.reserve(m.phi());
  for (Residue x = 1; x < m.n(); ++x) {
    if (is_unit(x, m)) out.push_back(x);
  }
  return out;
}

std::vector<Residue> crt_split(Residue x, const Modulus& m) {
  std::vector<Residue> out;
  out.reserve(m.k());
  for (const auto& pp : m.factors()) out.push_back(x % pp.value());
  return out;
}

Residue crt_combine(std::span<const Residue> components, const Modulus& m) {
  const auto factors = m.factors();
  if (components.size() != factors.size()) {
    throw std::invalid_argument("crt_combine: expected " +
                                std::to_string(factors.size()) +
                                " components, got " +
                                std::to_string(components.size()));
  }
  const std::uint64_t n = m.n();
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t q = factors[i].value();
    if (components[i] >= q) {
      throw std::invalid_argument("crt_combine: component " +
                                  std::to_string(components[i]) +
                                  " out of range for modulus " +
                                  std::to_string(q));
    }
    const std::uint64_t cofactor = n / q;
    // cofactor is coprime to q by construction.
    const std::uint64_t lift = *inverse_mod(cofactor % q, q);
    const std::uint64_t term = (components[i] * lift % q) * cofactor % n;
    x = (x + term) % n;
  }
  return static_cast<Residue>(x);
}

std::vector<Residue> unit_halfset(const Modulus& m) {
  if (!m.is_odd()) {
    throw std::invalid_argument("unit_halfset requires odd n, got " +
                                std::to_string(m.n()));
  }
  std::vector<Residue> out;
  for (Residue x = 0; x < m.n(); ++x) {
    bool keep = true;
    for (const auto& pp : m.factors()) {
      const Residue c = x % pp.prime;
      if (c < 1 || c > (pp.prime - 1) / 2) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(x);
  }
  return out;
}

}  // namespace permsum
