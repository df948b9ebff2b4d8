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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "permsum/bounds.hpp"
#include "permsum/families.hpp"
#include "permsum/search.hpp"
#include "permsum/verify.hpp"

using namespace permsum;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool any_p1_pair(std::uint32_t n) {
  const auto all = all_permutations(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (pair_property(all[i], all[j], Property::P1)) return true;
    }
  }
  return false;
}

bool verified(Family f) { return verify_family(f).ok; }

std::uint64_t u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

Check even_collapse() {
  Check c;
  for (std::uint32_t n : {2u, 4u, 6u}) {
    c.expect(!any_p1_pair(n), "P1 pair found at n=" + std::to_string(n));
  }
  for (std::uint32_t n : {2u, 4u}) {
    c.expect(extremal(factorize(n), Quantity::S).value == 1, "s search n=" + std::to_string(n));
    c.expect(extremal(factorize(n), Quantity::T).value == u64(factorial(n)),
             "t search n=" + std::to_string(n));
  }
  const auto s6 = bounds(6, Quantity::S);
  const auto t6 = bounds(6, Quantity::T);
  c.expect(s6.exact && s6.exact->value == 1, "bounds s(6)");
  c.expect(t6.exact && t6.exact->value == 720, "bounds t(6)");
  return c;
}

Check s_three() {
  Check c;
  const Modulus m = factorize(3);
  c.expect(oracle_extremal(m, Quantity::S) == 3, "oracle");
  c.expect(extremal(m, Quantity::S).value == 3, "search");
  c.expect(construct_p1(m).size() == 3, "construction");
  return c;
}

Check t_three() {
  Check c;
  const auto b = bounds(3, Quantity::T);
  c.expect(b.lower.value == 2, "lower");
  c.expect(b.upper_exact && b.upper_exact->value == 2, "upper");
  c.expect(extremal(factorize(3), Quantity::T).value == 2, "search");
  return c;
}

Check construction_sizes() {
  Check c;
  for (std::uint32_t n : {3u, 5u, 7u, 9u, 15u, 21u}) {
    const Modulus m = factorize(n);
    const Family f = construct_p1(m);
    const std::uint64_t expected = n * m.phi() >> m.k();
    c.expect(f.size() == expected, "p1 size n=" + std::to_string(n));
    c.expect(verified(f), "p1 verify n=" + std::to_string(n));
  }
  c.expect(construct_p1(factorize(9)).size() == 27, "p1(9) = 27");
  c.expect(construct_p1(factorize(15)).size() == 30, "p1(15) = 30");
  const std::vector<std::pair<std::uint32_t, std::size_t>> p2{{3, 2}, {5, 8}, {7, 48}, {9, 384}};
  for (auto [n, size] : p2) {
    const Family f = construct_p2(factorize(n));
    c.expect(f.size() == size, "p2 size n=" + std::to_string(n));
    c.expect(verified(f), "p2 verify n=" + std::to_string(n));
  }
  return c;
}

Check f_primes() {
  Check c;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Family f = construct_p3_prime(factorize(p));
    c.expect(f.size() == p - 1 && verified(f), "construction p=" + std::to_string(p));
  }
  for (std::uint32_t p : {3u, 5u}) {
    const auto r = extremal(factorize(p), Quantity::F);
    c.expect(r.value == p - 1 && r.status == SearchStatus::Exact, "search p=" + std::to_string(p));
  }
  return c;
}

Check sandwich_five() {
  Check c;
  const Modulus m = factorize(5);
  const auto s = extremal(m, Quantity::S);
  const auto t = extremal(m, Quantity::T);
  c.expect(s.status == SearchStatus::Exact && s.value >= 10 && s.value <= 20, "s(5) range");
  c.expect(t.status == SearchStatus::Exact && t.value >= 8 && t.value <= 12, "t(5) range");
  c.expect(oracle_extremal(m, Quantity::S) == s.value, "s(5) oracle");
  c.expect(oracle_extremal(m, Quantity::T) == t.value, "t(5) oracle");
  c.detail = c.ok ? "s(5)=" + std::to_string(s.value) + " t(5)=" + std::to_string(t.value)
                  : c.detail;
  return c;
}

Check isotropy() {
  Check c;
  for (std::uint32_t n : {5u, 7u}) {
    Family f = construct_p1(factorize(n));
    c.expect(verify_family(f).ok, "verify n=" + std::to_string(n));
    const auto r = isotropy_rank_check(f);
    c.expect(r.all_orthogonal, "inner products n=" + std::to_string(n));
    c.expect(r.rank <= (n - 1) / 2 && r.rank_bound_holds, "rank n=" + std::to_string(n));
  }
  return c;
}

Check classes() {
  Check c;
  const std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> want{{5, 6, 20},
                                                                             {7, 120, 42}};
  for (auto [n, count, size] : want) {
    const auto cls = equivalence_classes(factorize(n));
    c.expect(cls.size() == count, "class count n=" + std::to_string(n));
    for (const auto& k : cls) {
      c.expect(k.members.size() == size, "class size n=" + std::to_string(n));
    }
  }
  return c;
}

Check property_suites() {
  Check c;
  const auto all = all_permutations(5);
  std::size_t qualifying = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a == b) continue;
      std::set<int> sums;
      for (std::size_t i = 0; i < 5; ++i) sums.insert(a[i] + b[i]);
      if (sums.size() != 5) continue;
      ++qualifying;
      const auto w = distinct_sum_witness(a.entries(), b.entries());
      c.expect(w && a[w->first] + b[w->first] == a[w->second] + b[w->second] + 1,
               "witness " + format_perm(a) + " / " + format_perm(b));
    }
  }
  c.expect(qualifying > 0, "no qualifying pairs");

  const Modulus m7 = factorize(7);
  std::size_t pairs = 0;
  for (std::uint32_t x = 1; x < 128; ++x) {
    for (std::uint32_t y = 1; y < 128; ++y) {
      std::vector<Residue> a;
      std::vector<Residue> b;
      for (Residue r = 0; r < 7; ++r) {
        if ((x >> r) & 1U) a.push_back(r);
        if ((y >> r) & 1U) b.push_back(r);
      }
      c.expect(cauchy_davenport_check(a, b, m7), "sumset inequality");
      ++pairs;
    }
  }
  c.expect(pairs == 16129, "pair count");

  for (std::size_t bits = 1; bits <= 3; ++bits) {
    const std::size_t m = std::size_t{1} << bits;
    EdgeColoring col(m, static_cast<std::uint32_t>(bits));
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        col.set(u, v, static_cast<std::uint32_t>(__builtin_ctzll(u ^ v)) + 1);
      }
    }
    c.expect(bipartite_bound_check(col).ok, "binary labels k=" + std::to_string(bits));
  }
  EdgeColoring tri(3, 1);
  tri.set(0, 1, 1);
  tri.set(0, 2, 1);
  tri.set(1, 2, 1);
  c.expect(!bipartite_bound_check(tri).ok, "triangle accepted");
  return c;
}

Check orthomorphisms() {
  Check c;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    Family f = construct_p3_prime(factorize(p));
    c.expect(verify_family(f).ok, "verify p=" + std::to_string(p));
    const auto thetas = to_orthomorphisms(f);
    c.expect(thetas.size() == p - 2, "count p=" + std::to_string(p));
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      c.expect(is_orthomorphism(thetas[i]), "orthomorphism p=" + std::to_string(p));
      for (std::size_t j = i + 1; j < thetas.size(); ++j) {
        c.expect(are_orthogonal(thetas[i], thetas[j]), "orthogonal p=" + std::to_string(p));
      }
    }
  }
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "even-n collapse", 5, even_collapse},
      {2, "s(3) = 3", 1, s_three},
      {3, "t(3) = 2", 1, t_three},
      {4, "construction sizes", 30, construction_sizes},
      {5, "f(p) = p-1", 60, f_primes},
      {6, "sandwich at n = 5", 600, sandwich_five},
      {7, "isotropy and rank", 1, isotropy},
      {8, "equivalence classes", 30, classes},
      {9, "property suites", 60, property_suites},
      {10, "orthomorphism correspondence", 5, orthomorphisms},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && secs > cr.budget_seconds) {
      result.ok = false;
      result.detail = "over time budget";
    }
    if (!result.ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f s / %.0f s)%s%s\n", result.ok ? "PASS" : "FAIL", cr.id,
                cr.name, secs, cr.budget_seconds, result.detail.empty() ? "" : " ",
                result.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
