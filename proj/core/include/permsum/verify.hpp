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
#include <string>
#include <utility>
#include <vector>

#include "permsum/families.hpp"
#include "permsum/modring.hpp"
#include "permsum/perms.hpp"

namespace permsum {

// ---------------------------------------------------------------------------
// Family verification
// ---------------------------------------------------------------------------

struct Violation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  bool ok = true;
  /// Sorted by (first, second).
  std::vector<Violation> violations;
  std::uint64_t pairs_checked = 0;
};

/// Checks the family's property on every unordered pair of distinct indices.
/// Duplicate members are reported as structural violations. On success the
/// family's verified flag is set. `threads` > 1 splits the pair scan; the
/// report is identical to the serial one.
VerifyReport verify_family(Family& fam, unsigned threads = 1);

/// Report as text lines followed by the key=value summary
/// (ok, pairs_checked, violations).
std::string format_report(const VerifyReport& report);

// ---------------------------------------------------------------------------
// Distinct integer sums
// ---------------------------------------------------------------------------

/// For permutations a != b of {0..n-1} whose integer sums c_i = a_i + b_i are
/// pairwise distinct, returns the first (j, k) in index order with
/// c_j = c_k + 1. Returns nullopt when the sums are not all distinct.
/// Throws std::invalid_argument when a == b or either is not a permutation.
std::optional<std::pair<std::size_t, std::size_t>> distinct_sum_witness(
    std::span<const Entry> a, std::span<const Entry> b);

// ---------------------------------------------------------------------------
// Sumsets
// ---------------------------------------------------------------------------

/// {a + b mod n}, ascending and deduplicated.
std::vector<Residue> sumset(std::span<const Residue> a,
                            std::span<const Residue> b, const Modulus& m);

/// |A + B| >= min(n, |A| + |B| - 1). Requires prime n and nonempty A, B.
bool cauchy_davenport_check(std::span<const Residue> a,
                            std::span<const Residue> b, const Modulus& m);

// ---------------------------------------------------------------------------
// Edge colorings of K_m
// ---------------------------------------------------------------------------

/// Every unordered pair of the m vertices carries one color in [1, k].
class EdgeColoring {
 public:
  EdgeColoring(std::size_t vertices, std::uint32_t colors);

  std::size_t vertices() const { return vertices_; }
  std::uint32_t colors() const { return colors_; }

  void set(std::size_t u, std::size_t v, std::uint32_t color);
  /// 0 while unset.
  std::uint32_t color(std::size_t u, std::size_t v) const;
  /// True when every pair has a color in [1, k].
  bool complete() const;

 private:
  std::size_t index(std::size_t u, std::size_t v) const;

  std::size_t vertices_;
  std::uint32_t colors_;
  std::vector<std::uint32_t> pair_colors_;
};

struct BipartiteCheck {
  /// All classes bipartite, m <= 2^k and the label map injective.
  bool ok = false;
  bool all_bipartite = false;
  /// Set when some class has an odd cycle.
  std::optional<std::uint32_t> odd_cycle_color;
  std::vector<std::size_t> odd_cycle;
  /// Bit (c-1) of labels[v] is v's side in the 2-coloring of color class c.
  std::vector<std::uint64_t> labels;
  bool labels_injective = false;
};

/// Tests each color class for bipartiteness; when all are, builds the
/// vertex -> {0,1}^k labelling and checks it is injective (hence m <= 2^k).
/// Throws std::invalid_argument on an incomplete coloring or k > 64.
BipartiteCheck bipartite_bound_check(const EdgeColoring& coloring);

/// Coloring of K_m for members of one affine class that pairwise sum to
/// non-permutations: writing sigma_i = t_i + s_i * sigma_0, edge ij gets the
/// smallest r with p_r | (s_i + s_j). Throws std::invalid_argument when the
/// members are not in one class or some pair sums to a permutation.
EdgeColoring class_sum_coloring(std::span<const Perm> members, const Modulus& m);

// ---------------------------------------------------------------------------
// Affine equivalence sigma ~ t + s*sigma
// ---------------------------------------------------------------------------

/// Lexicographically least element of {t + s*p : t in Z_n, s a unit}.
Perm canonical_form(const Perm& p, const Modulus& m);

struct EquivalenceClass {
  Perm canonical;
  std::vector<Perm> members;
};

/// All n! permutations partitioned into affine classes, ordered by canonical
/// form; members lexicographic. Throws ResourceLimitError for n > 7.
std::vector<EquivalenceClass> equivalence_classes(const Modulus& m);

// ---------------------------------------------------------------------------
// Isotropy and rank over Z_p
// ---------------------------------------------------------------------------

struct IsotropyReport {
  /// <u, v> = 0 mod p for all members u, v (u = v included).
  bool all_orthogonal = false;
  std::size_t rank = 0;
  /// rank <= (p - 1)/2
  bool rank_bound_holds = false;
};

/// Rank of the rows over Z_p by Gaussian elimination.
std::size_t rank_mod_prime(std::span<const Perm> rows, const Modulus& m);

/// Requires a verified P1 family over a prime p > 3.
IsotropyReport isotropy_rank_check(const Family& fam);

}  // namespace permsum
