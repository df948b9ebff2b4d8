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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "permsum/errors.hpp"
#include "permsum/families.hpp"
#include "permsum/verify.hpp"

using namespace permsum;

namespace {

Perm P(std::uint32_t n, std::vector<Entry> e) { return Perm::from_entries(n, std::move(e)); }

Perm random_perm(std::uint32_t n, std::mt19937& rng) {
  std::vector<Entry> e(n);
  for (std::uint32_t i = 0; i < n; ++i) e[i] = static_cast<Entry>(i);
  std::shuffle(e.begin(), e.end(), rng);
  return P(n, std::move(e));
}

// Every subset of Z_n as a sorted vector, by bitmask.
std::vector<Residue> subset(std::uint32_t mask, std::uint32_t n) {
  std::vector<Residue> out;
  for (Residue x = 0; x < n; ++x) {
    if ((mask >> x) & 1U) out.push_back(x);
  }
  return out;
}

EdgeColoring binary_label_coloring(std::size_t bits) {
  const std::size_t m = std::size_t{1} << bits;
  EdgeColoring c(m, static_cast<std::uint32_t>(bits));
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const auto first_diff = static_cast<std::uint32_t>(__builtin_ctzll(u ^ v));
      c.set(u, v, first_diff + 1);
    }
  }
  return c;
}

}  // namespace

TEST(VerifyFamily, Reports) {
  Family p1 = construct_p1(factorize(9));
  const auto r = verify_family(p1);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.pairs_checked, 351u);

  Family bad(factorize(3), Property::P1, {P(3, {0, 1, 2}), P(3, {1, 0, 2})});
  const auto rb = verify_family(bad);
  EXPECT_FALSE(rb.ok);
  EXPECT_FALSE(bad.verified());
  ASSERT_EQ(rb.violations.size(), 1u);
  EXPECT_EQ(rb.violations[0].first, 0u);
  EXPECT_EQ(rb.violations[0].second, 1u);
  EXPECT_EQ(rb.violations[0].reason, "sum is not a permutation: 1 1 1");

  for (auto prop : {Property::P1, Property::P2, Property::P3}) {
    Family single(factorize(7), prop, {Perm::identity(7)});
    const auto rs = verify_family(single);
    EXPECT_TRUE(rs.ok);
    EXPECT_EQ(rs.pairs_checked, 0u);
  }
}

TEST(VerifyFamily, DuplicatesAreStructural) {
  Family dup(factorize(5), Property::P2, {Perm::identity(5), Perm::identity(5)});
  const auto r = verify_family(dup);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].reason, "duplicate member");
}

TEST(VerifyFamily, ParallelMatchesSerial) {
  std::mt19937 rng(11);
  Family f(factorize(7), Property::P1);
  for (int i = 0; i < 60; ++i) f.add(random_perm(7, rng));
  Family g = f;
  const auto serial = verify_family(f, 1);
  const auto parallel = verify_family(g, 4);
  EXPECT_EQ(serial.violations, parallel.violations);
  EXPECT_EQ(serial.pairs_checked, parallel.pairs_checked);
  EXPECT_EQ(serial.pairs_checked, 60u * 59u / 2u);
  EXPECT_TRUE(std::is_sorted(parallel.violations.begin(), parallel.violations.end(),
                             [](const Violation& a, const Violation& b) {
                               return std::pair(a.first, a.second) < std::pair(b.first, b.second);
                             }));
}

TEST(VerifyFamily, MutationClearsVerified) {
  Family f = construct_p1(factorize(5));
  ASSERT_TRUE(verify_family(f).ok);
  f.add(P(5, {1, 0, 2, 3, 4}));
  EXPECT_FALSE(f.verified());
}

TEST(VerifyFamily, FormatReport) {
  Family bad(factorize(3), Property::P1, {P(3, {0, 1, 2}), P(3, {1, 0, 2})});
  EXPECT_EQ(format_report(verify_family(bad)),
            "violation 0 1: sum is not a permutation: 1 1 1\n"
            "ok=0\npairs_checked=1\nviolations=1\n");
}

TEST(VerifyFamily, ConstructionsPass) {
  for (std::uint32_t n = 3; n <= 21; n += 2) {
    Family f = construct_p1(factorize(n));
    EXPECT_TRUE(verify_family(f).ok) << n;
  }
  for (std::uint32_t n = 3; n <= 9; n += 2) {
    Family f = construct_p2(factorize(n));
    EXPECT_TRUE(verify_family(f, 2).ok) << n;
  }
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    Family f = construct_p3_prime(factorize(p));
    EXPECT_TRUE(verify_family(f).ok) << p;
  }
}

TEST(DistinctSum, Examples) {
  const std::vector<Entry> a{0, 1, 2};
  const std::vector<Entry> b{1, 2, 0};
  const auto w = distinct_sum_witness(a, b);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::pair<std::size_t, std::size_t>{1, 2}));
  const std::vector<Entry> c{1, 0, 2};
  EXPECT_FALSE(distinct_sum_witness(a, c));
  EXPECT_THROW(distinct_sum_witness(a, a), std::invalid_argument);
  const std::vector<Entry> notperm{0, 0, 2};
  EXPECT_THROW(distinct_sum_witness(a, notperm), std::invalid_argument);
}

TEST(DistinctSum, ExhaustiveDegreeFive) {
  const auto all = all_permutations(5);
  std::size_t qualifying = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a == b) continue;
      std::set<int> sums;
      for (std::size_t i = 0; i < 5; ++i) sums.insert(a[i] + b[i]);
      const auto w = distinct_sum_witness(a.entries(), b.entries());
      if (sums.size() < 5) {
        EXPECT_FALSE(w);
        continue;
      }
      ++qualifying;
      ASSERT_TRUE(w);
      EXPECT_EQ(a[w->first] + b[w->first], a[w->second] + b[w->second] + 1);
    }
  }
  EXPECT_GT(qualifying, 0u);
}

TEST(Sumset, Examples) {
  const Modulus m5 = factorize(5);
  const std::vector<Residue> a{0, 1};
  const std::vector<Residue> b{0, 2};
  EXPECT_EQ(sumset(a, b, m5), (std::vector<Residue>{0, 1, 2, 3}));
  EXPECT_TRUE(cauchy_davenport_check(a, b, m5));
  const std::vector<Residue> c{0, 1, 2};
  EXPECT_EQ(sumset(c, c, m5).size(), 5u);
  EXPECT_TRUE(cauchy_davenport_check(c, c, m5));
  EXPECT_THROW(cauchy_davenport_check(a, b, factorize(9)), std::invalid_argument);
  EXPECT_THROW(cauchy_davenport_check({}, b, m5), std::invalid_argument);
}

TEST(Sumset, CauchyDavenportExhaustiveZ7) {
  const Modulus m7 = factorize(7);
  std::size_t pairs = 0;
  for (std::uint32_t x = 1; x < 128; ++x) {
    const auto a = subset(x, 7);
    for (std::uint32_t y = 1; y < 128; ++y) {
      const auto b = subset(y, 7);
      // brute-force sumset size
      std::set<Residue> brute;
      for (auto u : a) {
        for (auto v : b) brute.insert((u + v) % 7);
      }
      ASSERT_EQ(sumset(a, b, m7).size(), brute.size());
      ASSERT_TRUE(cauchy_davenport_check(a, b, m7));
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 16129u);
}

TEST(Sumset, CompositeCounterexampleExists) {
  // The inequality really needs a prime modulus: {0,3} + {0,3} in Z_6.
  const std::vector<Residue> a{0, 3};
  EXPECT_EQ(sumset(a, a, factorize(6)).size(), 2u);
}

TEST(Bipartite, Examples) {
  EdgeColoring k2(2, 1);
  k2.set(0, 1, 1);
  const auto r2 = bipartite_bound_check(k2);
  EXPECT_TRUE(r2.ok);
  EXPECT_EQ(r2.labels, (std::vector<std::uint64_t>{0, 1}));

  EdgeColoring k3(3, 1);
  k3.set(0, 1, 1);
  k3.set(0, 2, 1);
  k3.set(1, 2, 1);
  const auto r3 = bipartite_bound_check(k3);
  EXPECT_FALSE(r3.ok);
  EXPECT_FALSE(r3.all_bipartite);
  EXPECT_EQ(r3.odd_cycle_color, 1u);
  EXPECT_EQ(r3.odd_cycle, (std::vector<std::size_t>{0, 1, 2}));

  for (std::size_t bits = 1; bits <= 3; ++bits) {
    const auto r = bipartite_bound_check(binary_label_coloring(bits));
    EXPECT_TRUE(r.ok) << bits;
    EXPECT_TRUE(r.labels_injective);
  }
}

TEST(Bipartite, OddCycleIsAMonochromaticCycle) {
  // K_5 with color 1 on the 5-cycle 0-1-2-3-4 and color 2 elsewhere.
  EdgeColoring c(5, 2);
  for (std::size_t u = 0; u < 5; ++u) {
    for (std::size_t v = u + 1; v < 5; ++v) {
      c.set(u, v, (v - u == 1 || v - u == 4) ? 1 : 2);
    }
  }
  const auto r = bipartite_bound_check(c);
  ASSERT_FALSE(r.all_bipartite);
  const auto& cyc = r.odd_cycle;
  ASSERT_EQ(cyc.size() % 2, 1u);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    EXPECT_EQ(c.color(cyc[i], cyc[(i + 1) % cyc.size()]), *r.odd_cycle_color);
  }
  EXPECT_THROW(bipartite_bound_check(EdgeColoring(3, 1)), std::invalid_argument);
}

TEST(Bipartite, ClassColoringOfP2Members) {
  // Inside one affine class, a P2 family colored by the smallest prime
  // dividing s_i + s_j has bipartite color classes, hence at most 2^k members.
  for (std::uint32_t n : {5u, 7u, 15u}) {
    const Modulus m = factorize(n);
    const Perm base = n == 15 ? Perm::identity(15) : P(n, n == 5 ? std::vector<Entry>{2, 0, 4, 1, 3}
                                                                  : std::vector<Entry>{3, 6, 0, 2, 5, 1, 4});
    // Greedy P2 clique among {t + s*base}.
    std::vector<Perm> members;
    for (Residue s : units(m)) {
      for (Residue t = 0; t < n; ++t) {
        const Perm cand = Perm::from(affine_apply(s, t, base));
        const bool fits = std::all_of(members.begin(), members.end(), [&](const Perm& x) {
          return pair_property(x, cand, Property::P2);
        });
        if (fits) members.push_back(cand);
      }
    }
    ASSERT_GE(members.size(), 2u);
    const auto coloring = class_sum_coloring(members, m);
    const auto r = bipartite_bound_check(coloring);
    EXPECT_TRUE(r.ok) << n;
    EXPECT_LE(members.size(), std::size_t{1} << m.k());
  }
  // P1 pair inside a class is rejected.
  const Modulus m5 = factorize(5);
  const std::vector<Perm> p1{Perm::identity(5), Perm::from(affine_apply(2, 0, Perm::identity(5)))};
  EXPECT_THROW(class_sum_coloring(p1, m5), std::invalid_argument);
  const std::vector<Perm> other{Perm::identity(5), P(5, {1, 0, 2, 3, 4})};
  EXPECT_THROW(class_sum_coloring(other, m5), std::invalid_argument);
}

TEST(Classes, CountsAndSizes) {
  EXPECT_EQ(equivalence_classes(factorize(3)).size(), 1u);
  EXPECT_EQ(equivalence_classes(factorize(3))[0].members.size(), 6u);
  for (std::uint32_t n : {3u, 5u, 7u}) {
    const Modulus m = factorize(n);
    const auto classes = equivalence_classes(m);
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i < n; ++i) fact *= i;
    EXPECT_EQ(classes.size(), fact / m.phi()) << n;
    std::size_t total = 0;
    for (const auto& c : classes) {
      EXPECT_EQ(c.members.size(), n * m.phi());
      EXPECT_EQ(c.members.front(), c.canonical);
      total += c.members.size();
    }
    EXPECT_EQ(total, fact * n);
  }
  EXPECT_EQ(equivalence_classes(factorize(5)).size(), 6u);
  EXPECT_THROW(equivalence_classes(factorize(8)), ResourceLimitError);
}

TEST(Classes, CanonicalFormIsOrbitInvariant) {
  const Modulus m7 = factorize(7);
  const auto us = units(m7);
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    const Perm p = random_perm(7, rng);
    const Residue s = us[rng() % us.size()];
    const Residue t = rng() % 7;
    EXPECT_EQ(canonical_form(Perm::from(affine_apply(s, t, p)), m7), canonical_form(p, m7));
  }
  // Works past the partition limit.
  const Modulus m11 = factorize(11);
  const Perm q = random_perm(11, rng);
  EXPECT_EQ(canonical_form(Perm::from(affine_apply(3, 5, q)), m11), canonical_form(q, m11));
}

TEST(Invariance, DiagonalAffineActionZ5) {
  const Modulus m5 = factorize(5);
  const auto all = all_permutations(5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const bool p1 = pair_property(all[i], all[j], Property::P1);
      for (Residue s : units(m5)) {
        for (Residue t = 0; t < 5; ++t) {
          const Perm a = Perm::from(affine_apply(s, t, all[i]));
          const Perm b = Perm::from(affine_apply(s, t, all[j]));
          ASSERT_EQ(pair_property(a, b, Property::P1), p1);
          ASSERT_EQ(pair_property(a, b, Property::P2), !p1);
        }
      }
    }
  }
}

TEST(Invariance, PositionRelabeling) {
  for (std::uint32_t n : {4u, 5u}) {
    const auto all = all_permutations(n);
    for (const auto& rho : all) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          const Perm a = compose(all[i], rho);
          const Perm b = compose(all[j], rho);
          for (auto prop : {Property::P1, Property::P2, Property::P3}) {
            ASSERT_EQ(pair_property(a, b, prop), pair_property(all[i], all[j], prop));
          }
        }
      }
      if (n == 5 && rho[0] > 0) break;  // 24 relabelings for n = 5
    }
  }
}

TEST(Isotropy, Examples) {
  Family f5 = construct_p1(factorize(5));
  ASSERT_TRUE(verify_family(f5).ok);
  const auto r5 = isotropy_rank_check(f5);
  EXPECT_TRUE(r5.all_orthogonal);
  EXPECT_LE(r5.rank, 2u);
  EXPECT_TRUE(r5.rank_bound_holds);

  Family id7(factorize(7), Property::P1, {Perm::identity(7)});
  verify_family(id7);
  const auto ri = isotropy_rank_check(id7);
  EXPECT_TRUE(ri.all_orthogonal);
  EXPECT_EQ(ri.rank, 1u);

  Family f7 = construct_p1(factorize(7));
  verify_family(f7);
  const auto r7 = isotropy_rank_check(f7);
  EXPECT_TRUE(r7.all_orthogonal);
  EXPECT_LE(r7.rank, 3u);
  // All members lie in span{(1,...,1), (0,1,...,n-1)}.
  EXPECT_EQ(r7.rank, 2u);
}

TEST(Isotropy, Preconditions) {
  Family f3 = construct_p1(factorize(3));
  verify_family(f3);
  EXPECT_THROW(isotropy_rank_check(f3), std::invalid_argument);
  Family f9 = construct_p1(factorize(9));
  verify_family(f9);
  EXPECT_THROW(isotropy_rank_check(f9), std::invalid_argument);
  Family unverified = construct_p1(factorize(5));
  EXPECT_THROW(isotropy_rank_check(unverified), std::invalid_argument);
}

TEST(Isotropy, RankOracle) {
  // Full-rank and rank-deficient matrices over Z_5.
  const Modulus m5 = factorize(5);
  std::vector<Perm> rows{Perm::identity(5), Perm::from(affine_apply(2, 1, Perm::identity(5)))};
  EXPECT_EQ(rank_mod_prime(rows, m5), 2u);
  rows.push_back(Perm::from(affine_apply(3, 4, Perm::identity(5))));
  EXPECT_EQ(rank_mod_prime(rows, m5), 2u);
  // Every permutation has entry sum 0 mod 5.
  EXPECT_EQ(rank_mod_prime(all_permutations(5), m5), 4u);
}
