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

#include "permsum/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permsum {

Family::Family(Modulus modulus, Property prop, std::vector<Perm> members)
    : modulus_(std::move(modulus)), prop_(prop), members_(std::move(members)) {
  if (modulus_.n() > kMaxDegree) {
    throw std::invalid_argument("family degree exceeds 255");
  }
  for (const auto& p : members_) {
    if (p.n() != modulus_.n()) {
      throw std::invalid_argument("family member of degree " +
                                  std::to_string(p.n()) +
                                  " in a family over Z_" +
                                  std::to_string(modulus_.n()));
    }
  }
}

void Family::add(Perm p) {
  if (p.n() != modulus_.n()) {
    throw std::invalid_argument("family member degree mismatch");
  }
  members_.push_back(std::move(p));
  verified_ = false;
}

Family construct_p1(const Modulus& m, EvenPolicy even) {
  const std::uint32_t n = m.n();
  if (!m.is_odd()) {
    if (even == EvenPolicy::TrivialFamily) {
      return Family(m, Property::P1, {Perm::identity(n)});
    }
    throw std::invalid_argument(
        "construct_p1: n = " + std::to_string(n) +
        " is even; no two permutations sum to a permutation");
  }
  if (n > kMaxDegree) throw std::invalid_argument("construct_p1: n > 255");

  std::vector<Perm> members;
  for (Residue s : unit_halfset(m)) {
    for (Residue x = 0; x < n; ++x) {
      std::vector<Entry> row(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        row[i] = static_cast<Entry>((std::uint64_t{s} * ((x + i) % n)) % n);
      }
      members.push_back(Perm::from_entries(n, std::move(row)));
    }
  }
  return Family(m, Property::P1, std::move(members));
}

Family construct_p2(const Modulus& m) {
  const std::uint32_t n = m.n();
  if (!m.is_odd()) {
    throw std::invalid_argument(
        "construct_p2: n = " + std::to_string(n) +
        " is even; every family already has the property");
  }
  if (n > 21) {
    // 2^10 * 10! members is already ~3.7e9.
    throw std::invalid_argument("construct_p2: family too large for n = " +
                                std::to_string(n));
  }
  const std::uint32_t blocks = (n - 1) / 2;
  std::vector<std::uint32_t> sigma(blocks);
  std::iota(sigma.begin(), sigma.end(), 0U);

  std::vector<Perm> members;
  do {
    for (std::uint32_t c = 0; c < (1U << blocks); ++c) {
      std::vector<Entry> row(n);
      for (std::uint32_t i = 0; i < blocks; ++i) {
        const bool reversed = ((c >> (blocks - 1 - i)) & 1U) != 0;
        const auto little = static_cast<Entry>(2 * sigma[i]);
        const auto big = static_cast<Entry>(2 * sigma[i] + 1);
        row[2 * i] = reversed ? big : little;
        row[2 * i + 1] = reversed ? little : big;
      }
      row[n - 1] = static_cast<Entry>(n - 1);
      members.push_back(Perm::from_entries(n, std::move(row)));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return Family(m, Property::P2, std::move(members));
}

Family construct_p3_prime(const Modulus& m) {
  if (!m.is_prime()) {
    throw std::invalid_argument("construct_p3_prime: n = " +
                                std::to_string(m.n()) + " is not prime");
  }
  const std::uint32_t n = m.n();
  if (n > kMaxDegree) throw std::invalid_argument("construct_p3_prime: n > 255");
  std::vector<Perm> members;
  for (Residue a = 1; a < n; ++a) {
    members.push_back(Perm::from(affine_apply(a, 0, Perm::identity(n))));
  }
  return Family(m, Property::P3, std::move(members));
}

bool is_orthomorphism(const Perm& theta) {
  return pointwise_sub(theta, Perm::identity(theta.n())).is_permutation();
}

bool are_orthogonal(const Perm& theta, const Perm& phi) {
  return pointwise_sub(theta, phi).is_permutation();
}

std::vector<Perm> to_orthomorphisms(const Family& fam) {
  if (fam.prop() != Property::P3) {
    throw std::invalid_argument("to_orthomorphisms needs a P3 family");
  }
  if (!fam.verified()) {
    throw std::invalid_argument("to_orthomorphisms needs a verified family");
  }
  std::vector<Perm> out;
  if (fam.size() < 2) return out;
  const Perm base_inv = invert(fam.members().front());
  for (std::size_t i = 1; i < fam.size(); ++i) {
    out.push_back(compose(fam.members()[i], base_inv));
  }
  return out;
}

}  // namespace permsum
