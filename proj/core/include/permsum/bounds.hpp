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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permsum {

using BigInt = boost::multiprecision::cpp_int;

/// s: pairwise sums are permutations, t: pairwise sums are not,
/// f: pairwise differences are permutations.
enum class Quantity { S, T, F };

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view text);

/// An integer bound together with the argument that produced it.
struct Bound {
  BigInt value;
  std::string provenance;
};

// Provenance tags used in reports.
namespace provenance {
inline constexpr std::string_view kParity = "parity";
inline constexpr std::string_view kHalfsetConstruction = "affine-halfset-construction";
inline constexpr std::string_view kSwapArgument = "swap-argument-n3";
inline constexpr std::string_view kIsotropyProduct = "isotropy-product";
inline constexpr std::string_view kIsotropySquaredFactorial = "isotropy-squared-factorial";
inline constexpr std::string_view kStirling = "stirling";
inline constexpr std::string_view kBlockConstruction = "block-construction";
inline constexpr std::string_view kClassColoring = "class-coloring";
inline constexpr std::string_view kPrimeMultiples = "prime-multiples";
inline constexpr std::string_view kSingleMember = "single-member";
inline constexpr std::string_view kOrthomorphismCount = "orthomorphism-count";
inline constexpr std::string_view kCoincidentBounds = "coincident-bounds";
inline constexpr std::string_view kSearchVerified = "search-verified";
}  // namespace provenance

struct BoundsReport {
  std::uint32_t n = 0;
  Quantity quantity = Quantity::S;

  Bound lower;
  /// Tightest integer upper bound available (the smaller of the two
  /// isotropy forms for s at odd primes).
  std::optional<Bound> upper_exact;
  /// n * prod_{i=2}^{r} ceil((n-i+1)/2), r = (n-1)/2. s only, odd prime n > 3.
  std::optional<Bound> upper_product;
  /// n * (r! / ceil((n-1)/4)!)^2. s only, odd prime n > 3.
  std::optional<Bound> upper_squared_factorial;
  /// (e^2/pi) n ((n-1)/e)^((n-1)/2). s only, odd prime n. Asymptotic form.
  std::optional<double> upper_float;
  std::optional<Bound> exact;

  /// Smallest defined upper bound as a double, or nullopt if none.
  std::optional<double> upper_numeric() const;
};

/// Closed-form lower/upper bounds and, where they pin the value down (or a
/// cross-validated search has), the exact value. Throws for n < 2.
BoundsReport bounds(std::uint32_t n, Quantity q);

BigInt factorial(std::uint32_t n);

}  // namespace permsum
