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

#include "permsum/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "permsum/modring.hpp"

namespace permsum {

namespace {

Bound make(BigInt v, std::string_view tag) {
  return Bound{std::move(v), std::string(tag)};
}

// Values established by exhaustive search and confirmed by the unreduced
// oracle; no closed form gives them.
std::optional<BigInt> search_verified(std::uint32_t n, Quantity q) {
  if (n == 5 && q == Quantity::T) return BigInt(12);
  return std::nullopt;
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

void s_bounds(const Modulus& m, BoundsReport& r) {
  const std::uint32_t n = m.n();
  if (!m.is_odd()) {
    r.lower = make(1, provenance::kParity);
    r.upper_exact = make(1, provenance::kParity);
    r.exact = make(1, provenance::kParity);
    return;
  }
  r.lower = make(BigInt(n) * m.phi() / pow2(m.k()),
                 provenance::kHalfsetConstruction);
  if (!m.is_prime()) return;

  const std::uint32_t half = (n - 1) / 2;
  r.upper_float = std::numbers::e * std::numbers::e / std::numbers::pi * n *
                  std::pow((n - 1) / std::numbers::e, half);
  if (n == 3) {
    r.upper_exact = make(3, provenance::kSwapArgument);
    return;
  }
  BigInt product = n;
  for (std::uint32_t i = 2; i <= half; ++i) product *= (n - i + 2) / 2;
  const BigInt ratio = factorial(half) / factorial((n - 1 + 3) / 4);
  r.upper_product = make(product, provenance::kIsotropyProduct);
  r.upper_squared_factorial =
      make(BigInt(n) * ratio * ratio, provenance::kIsotropySquaredFactorial);
  r.upper_exact = r.upper_product->value <= r.upper_squared_factorial->value
                      ? r.upper_product
                      : r.upper_squared_factorial;
}

void t_bounds(const Modulus& m, BoundsReport& r) {
  const std::uint32_t n = m.n();
  if (!m.is_odd()) {
    r.lower = make(factorial(n), provenance::kParity);
    r.upper_exact = r.lower;
    r.exact = r.lower;
    return;
  }
  const std::uint32_t half = (n - 1) / 2;
  r.lower = make(pow2(half) * factorial(half), provenance::kBlockConstruction);
  r.upper_exact = make(pow2(m.k()) * factorial(n - 1) / m.phi(),
                       provenance::kClassColoring);
}

void f_bounds(const Modulus& m, BoundsReport& r) {
  const std::uint32_t n = m.n();
  r.upper_exact = make(n - 1, provenance::kOrthomorphismCount);
  if (m.is_prime()) {
    r.lower = make(n - 1, provenance::kPrimeMultiples);
  } else {
    r.lower = make(1, provenance::kSingleMember);
  }
  if (!m.is_odd()) r.exact = make(1, provenance::kParity);
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::S:
      return "s";
    case Quantity::T:
      return "t";
    case Quantity::F:
      return "f";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view text) {
  if (text == "s") return Quantity::S;
  if (text == "t") return Quantity::T;
  if (text == "f") return Quantity::F;
  return std::nullopt;
}

BigInt factorial(std::uint32_t n) {
  BigInt v = 1;
  for (std::uint32_t i = 2; i <= n; ++i) v *= i;
  return v;
}

std::optional<double> BoundsReport::upper_numeric() const {
  std::optional<double> best;
  if (upper_exact) best = upper_exact->value.convert_to<double>();
  if (upper_float && (!best || *upper_float < *best)) best = upper_float;
  return best;
}

BoundsReport bounds(std::uint32_t n, Quantity q) {
  const Modulus m = factorize(n);
  BoundsReport r;
  r.n = n;
  r.quantity = q;
  switch (q) {
    case Quantity::S:
      s_bounds(m, r);
      break;
    case Quantity::T:
      t_bounds(m, r);
      break;
    case Quantity::F:
      f_bounds(m, r);
      break;
  }
  if (!r.exact && r.upper_exact && r.upper_exact->value == r.lower.value) {
    r.exact = make(r.lower.value, provenance::kCoincidentBounds);
  }
  if (!r.exact) {
    if (auto v = search_verified(n, q)) {
      r.exact = make(*v, provenance::kSearchVerified);
    }
  }
  return r;
}

}  // namespace permsum
