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

#include <algorithm>
#include <bit>
#include <functional>

#include "permsum/errors.hpp"
#include "permsum/search.hpp"
#include "permsum/verify.hpp"

namespace permsum {

Property property_of(Quantity q) {
  switch (q) {
    case Quantity::S:
      return Property::P1;
    case Quantity::T:
      return Property::P2;
    case Quantity::F:
      return Property::P3;
  }
  return Property::P1;
}

SearchResult extremal(const Modulus& m, Quantity q, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Property prop = property_of(q);
  const CompatGraph g = build_compat_graph(m, prop, GraphScope::IdentityNeighborhood);
  SearchOptions inner = opts;
  if (opts.on_improvement) {
    // Report family sizes: the identity is a member of every certificate.
    inner.on_improvement = [&opts](const Improvement& imp) {
      Improvement shifted = imp;
      ++shifted.size;
      opts.on_improvement(shifted);
    };
  }
  CliqueResult r = find_max_clique(g, inner);

  Family cert(m, prop, {Perm::identity(m.n())});
  for (std::size_t v : r.clique) cert.add(g.vertices[v]);
  const VerifyReport report = verify_family(cert, std::max(1U, opts.threads));
  if (!report.ok) {
    throw ConsistencyError("extremal certificate fails verification:\n" +
                           format_report(report));
  }

  const std::uint64_t value = cert.size();
  const BoundsReport b = bounds(m.n(), q);
  if (r.status == SearchStatus::Exact && BigInt(value) < b.lower.value) {
    throw ConsistencyError(
        std::string(to_string(q)) + "(" + std::to_string(m.n()) + ") = " +
        std::to_string(value) + " is below the lower bound " +
        b.lower.value.str() + " (" + b.lower.provenance + ")");
  }
  if (b.upper_exact && BigInt(value) > b.upper_exact->value) {
    throw ConsistencyError(
        std::string(to_string(q)) + "(" + std::to_string(m.n()) + ") >= " +
        std::to_string(value) + " exceeds the upper bound " +
        b.upper_exact->value.str() + " (" + b.upper_exact->provenance + ")");
  }
  return SearchResult{value, std::move(cert), r.status, r.nodes_explored,
                      std::chrono::steady_clock::now() - start};
}

namespace {

// Permutation test by sorting, kept apart from the bitset routine used by the
// main search.
bool sorted_is_identity(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  for (unsigned i = 0; i < v.size(); ++i) {
    if (v[i] != i) return false;
  }
  return true;
}

bool oracle_pair(const Perm& a, const Perm& b, std::uint32_t n, Quantity q) {
  std::vector<unsigned> combined(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const unsigned x = a[i];
    const unsigned y = b[i];
    combined[i] = q == Quantity::F ? (x + n - y) % n : (x + y) % n;
  }
  const bool perm = sorted_is_identity(std::move(combined));
  return q == Quantity::T ? !perm : perm;
}

// Subset enumeration over all 2^(n!) families.
std::uint64_t enumerate_subsets(const std::vector<Perm>& perms, std::uint32_t n,
                                Quantity q) {
  const std::size_t count = perms.size();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
    bool good = true;
    for (std::size_t i = 0; i < count && good; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < count; ++j) {
        if (((mask >> j) & 1U) && !oracle_pair(perms[i], perms[j], n, q)) {
          good = false;
          break;
        }
      }
    }
    if (good) {
      best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(
                                               std::popcount(mask)));
    }
  }
  return best;
}

// Maximum clique of G found as a maximum independent set of the complement:
// branch on a vertex of largest complement degree, either dropping it or
// taking it and deleting its complement neighbours. Vertices without
// complement neighbours are always taken; a greedy clique cover of the
// complement bounds what the remaining vertices can add.
class ComplementIndependentSet {
 public:
  explicit ComplementIndependentSet(std::vector<std::vector<char>> adj)
      : adj_(std::move(adj)) {}

  std::uint64_t run() {
    std::vector<std::size_t> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    search(std::move(all), 0);
    return best_;
  }

 private:
  bool conflict(std::size_t u, std::size_t v) const { return !adj_[u][v]; }

  void search(std::vector<std::size_t> remaining, std::size_t taken) {
    while (true) {
      if (taken + remaining.size() <= best_) return;
      std::size_t pick = remaining.size();
      std::size_t pick_degree = 0;
      std::vector<char> isolated(remaining.size(), 0);
      std::size_t isolated_count = 0;
      for (std::size_t a = 0; a < remaining.size(); ++a) {
        std::size_t degree = 0;
        for (std::size_t b = 0; b < remaining.size(); ++b) {
          if (a != b && conflict(remaining[a], remaining[b])) ++degree;
        }
        if (degree == 0) {
          isolated[a] = 1;
          ++isolated_count;
        } else if (degree > pick_degree) {
          pick_degree = degree;
          pick = a;
        }
      }
      if (isolated_count > 0) {
        std::vector<std::size_t> rest;
        for (std::size_t a = 0; a < remaining.size(); ++a) {
          if (!isolated[a]) rest.push_back(remaining[a]);
        }
        taken += isolated_count;
        remaining = std::move(rest);
        continue;
      }
      if (pick == remaining.size()) {
        best_ = std::max<std::uint64_t>(best_, taken);
        return;
      }
      if (taken + clique_cover_size(remaining) <= best_) return;
      const std::size_t v = remaining[pick];
      std::vector<std::size_t> with;
      for (std::size_t u : remaining) {
        if (u != v && !conflict(u, v)) with.push_back(u);
      }
      search(std::move(with), taken + 1);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }

  // An independent set meets each clique of a cover at most once.
  std::size_t clique_cover_size(const std::vector<std::size_t>& vertices) const {
    std::vector<std::vector<std::size_t>> cover;
    for (std::size_t v : vertices) {
      bool placed = false;
      for (auto& clique : cover) {
        const bool fits = std::all_of(clique.begin(), clique.end(),
                                      [&](std::size_t u) { return conflict(u, v); });
        if (fits) {
          clique.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cover.push_back({v});
    }
    return cover.size();
  }

  std::vector<std::vector<char>> adj_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t oracle_extremal(const Modulus& m, Quantity q) {
  const std::uint32_t n = m.n();
  if (n > 5) {
    throw ResourceLimitError("oracle_extremal covers n <= 5 only, got n = " +
                             std::to_string(n));
  }
  const std::vector<Perm> perms = all_permutations(n);
  if (n <= 3) return enumerate_subsets(perms, n, q);

  std::vector<std::vector<char>> adj(perms.size(),
                                     std::vector<char>(perms.size(), 0));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      adj[i][j] = adj[j][i] = oracle_pair(perms[i], perms[j], n, q) ? 1 : 0;
    }
  }
  return ComplementIndependentSet(std::move(adj)).run();
}

}  // namespace permsum
