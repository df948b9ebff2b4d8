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

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "permsum/bitrows.hpp"
#include "permsum/bounds.hpp"
#include "permsum/families.hpp"
#include "permsum/modring.hpp"
#include "permsum/perms.hpp"

namespace permsum {

/// Graph on permutations; i ~ j iff pair_property(v_i, v_j, prop).
struct CompatGraph {
  Modulus modulus;
  Property prop;
  std::vector<Perm> vertices;
  BitMatrix adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency.test(i, j); }
  std::size_t degree(std::size_t i) const { return adjacency.row_count(i); }
  std::uint64_t edge_count() const;
};

enum class GraphScope {
  /// All n! permutations, lexicographic. n <= 7.
  Full,
  /// Permutations (other than the identity) compatible with the identity,
  /// lexicographic. n <= 9 and at most kMaxNeighborhoodVertices vertices.
  IdentityNeighborhood,
};

inline constexpr std::uint32_t kMaxFullGraphDegree = 7;
inline constexpr std::uint32_t kMaxNeighborhoodDegree = 9;
inline constexpr std::size_t kMaxNeighborhoodVertices = 16384;

/// Throws ResourceLimitError (with a size estimate) beyond the limits above.
CompatGraph build_compat_graph(const Modulus& m, Property prop,
                               GraphScope scope = GraphScope::Full);

/// Graph over an explicit vertex list (duplicates not allowed).
CompatGraph build_compat_graph(const Modulus& m, Property prop,
                               std::vector<Perm> vertices);

enum class SearchStatus { Exact, LowerBoundOnly };

std::string_view to_string(SearchStatus s);

/// One line of the run log: emitted whenever the incumbent grows.
struct Improvement {
  std::size_t size = 0;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  /// Zero means no limit.
  std::chrono::nanoseconds time_limit{0};
  /// Worker count for the branch-and-bound phase. 1 runs serially.
  unsigned threads = 1;
  /// Called under a lock, so callbacks see sizes in increasing order.
  std::function<void(const Improvement&)> on_improvement;
};

/// Maximum clique as sorted vertex indices.
struct CliqueResult {
  std::vector<std::size_t> clique;
  SearchStatus status = SearchStatus::Exact;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Exact maximum clique by branch and bound over bit-packed rows: vertices in
/// descending-degree order, greedy sequential coloring as the bound at every
/// node, top-level branches shared among workers. Once the clique number is
/// known a second pass returns the lexicographically least maximum clique
/// (by sorted vertex index), so the certificate does not depend on the
/// worker count. On timeout the best clique found so far is returned with
/// status LowerBoundOnly.
CliqueResult find_max_clique(const CompatGraph& g, const SearchOptions& opts = {});

struct SearchResult {
  std::uint64_t value = 0;
  Family certificate;
  SearchStatus status = SearchStatus::Exact;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// find_max_clique packaged with the clique members as a verified family.
SearchResult max_clique(const CompatGraph& g, const SearchOptions& opts = {});

/// s(n), t(n) or f(n). Every extremal family can be moved by a common
/// right-composition to one containing the identity, so the search runs on
/// the identity's neighborhood and adds the identity back. The result is
/// checked against bounds(n, q); a contradiction throws ConsistencyError.
SearchResult extremal(const Modulus& m, Quantity q, const SearchOptions& opts = {});

/// Property associated with each quantity.
Property property_of(Quantity q);

/// Independent reference value: subset enumeration for n <= 3, otherwise a
/// maximum independent set of the complement graph on all n! permutations,
/// with no symmetry reduction (n <= 5). Throws ResourceLimitError for n > 5.
std::uint64_t oracle_extremal(const Modulus& m, Quantity q);

}  // namespace permsum
