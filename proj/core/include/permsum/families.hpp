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
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "permsum/modring.hpp"
#include "permsum/perms.hpp"

namespace permsum {

class Family;
struct VerifyReport;
VerifyReport verify_family(Family& fam, unsigned threads);

/// A set of permutations over one modulus claimed to satisfy a property.
///
/// Members keep their insertion order. The verified flag is only ever set by
/// verify_family(); any mutation of the member list clears it.
class Family {
 public:
  /// Throws std::invalid_argument if any member has a degree other than n.
  /// Duplicates are accepted here and surface as structural violations in
  /// verify_family().
  Family(Modulus modulus, Property prop, std::vector<Perm> members = {});

  const Modulus& modulus() const { return modulus_; }
  std::uint32_t n() const { return modulus_.n(); }
  Property prop() const { return prop_; }
  const std::vector<Perm>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool verified() const { return verified_; }

  void add(Perm p);

 private:
  friend VerifyReport verify_family(Family& fam, unsigned threads);

  Modulus modulus_;
  Property prop_;
  std::vector<Perm> members_;
  bool verified_ = false;
};

enum class EvenPolicy {
  Reject,
  /// Even n yields the one-member family {identity}.
  TrivialFamily,
};

/// { s*(x + 0, x + 1, ..., x + n-1) : s in unit_halfset(n), x in Z_n },
/// ordered by (s, x). Size n*phi(n)/2^k; every distinct pair sums to a
/// permutation.
Family construct_p1(const Modulus& m, EvenPolicy even = EvenPolicy::Reject);

/// Block family P_{sigma,c}: positions (2i, 2i+1) carry block
/// (2 sigma(i), 2 sigma(i) + 1), reversed when bit c_i is set, and the last
/// position holds n-1. Ordered by (sigma lexicographic, c with c_0 as the
/// most significant bit). Size 2^m m! with m = (n-1)/2; every distinct pair
/// sums to a non-permutation. Odd n only.
Family construct_p2(const Modulus& m);

/// { a*(0, 1, ..., n-1) : a = 1..n-1 } for prime n.
Family construct_p3_prime(const Modulus& m);

/// theta_i = sigma_i o sigma_1^{-1} for i = 2..k. Requires a verified P3
/// family; each theta_i is an orthomorphism and the thetas are pairwise
/// orthogonal.
std::vector<Perm> to_orthomorphisms(const Family& fam);

/// x -> theta(x) - x is a bijection.
bool is_orthomorphism(const Perm& theta);
/// theta - phi is a bijection.
bool are_orthogonal(const Perm& theta, const Perm& phi);

// Family file format (UTF-8, line oriented):
//   permfam v1
//   n=<n> prop=<P1|P2|P3> count=<m>
//   <m lines, one permutation each in the space-separated text form>

void write_family(std::ostream& out, const Family& fam);
std::string format_family(const Family& fam);

/// Throws ParseError on a bad header, a count mismatch, an invalid
/// permutation, or a duplicate member. The result is not yet verified.
Family read_family(std::istream& in);
Family parse_family(const std::string& text);

}  // namespace permsum
