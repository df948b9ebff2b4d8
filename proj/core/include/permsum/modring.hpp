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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace permsum {

/// Element of Z_n. The modulus travels separately as a Modulus.
using Residue = std::uint32_t;

struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;

  /// prime^exponent
  std::uint32_t value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its factorization n = p_1^a_1 ... p_k^a_k and totient.
///
/// Obtained only through factorize(), so the invariants (ascending distinct
/// primes, product equal to n, phi = prod p^(a-1)(p-1)) always hold.
class Modulus {
 public:
  std::uint32_t n() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }
  std::uint32_t phi() const { return phi_; }
  /// Number of distinct prime divisors.
  std::size_t k() const { return factors_.size(); }

  bool is_odd() const { return (n_ & 1U) != 0; }
  bool is_prime() const {
    return factors_.size() == 1 && factors_[0].exponent == 1;
  }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.n_ == b.n_;
  }

 private:
  friend Modulus factorize(std::uint32_t n);
  Modulus() = default;

  std::uint32_t n_ = 0;
  std::vector<PrimePower> factors_;
  std::uint32_t phi_ = 0;
};

/// Trial-division factorization. Throws std::invalid_argument for n < 2.
Modulus factorize(std::uint32_t n);

std::uint32_t gcd(std::uint32_t a, std::uint32_t b);

/// gcd(x mod n, n) == 1
bool is_unit(Residue x, const Modulus& m);

/// Multiplicative inverse of x in Z_n, or nullopt when x is not a unit.
std::optional<Residue> inverse(Residue x, const Modulus& m);

/// All units of Z_n in ascending order.
std::vector<Residue> units(const Modulus& m);

/// x -> (x mod p_1^a_1, ..., x mod p_k^a_k).
std::vector<Residue> crt_split(Residue x, const Modulus& m);

/// Inverse of crt_split. Throws std::invalid_argument if the component count
/// is wrong or a component is outside [0, p_i^a_i - 1].
Residue crt_combine(std::span<const Residue> components, const Modulus& m);

/// The sum-closed half-set of units
///   S = { x : 1 <= (x mod p_i) <= (p_i - 1)/2 for every prime p_i | n },
/// ascending. |S| = phi(n)/2^k and x + y is a unit for all x, y in S
/// (x = y included). Throws std::invalid_argument for even n.
std::vector<Residue> unit_halfset(const Modulus& m);

}  // namespace permsum
