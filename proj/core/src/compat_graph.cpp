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

#include <sstream>
#include <stdexcept>

#include "permsum/errors.hpp"
#include "permsum/search.hpp"

namespace permsum {

namespace {

std::uint64_t factorial_u64(std::uint32_t n) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 2; i <= n; ++i) v *= i;
  return v;
}

std::string mib(std::uint64_t vertices) {
  const double bytes = static_cast<double>(vertices) *
                       static_cast<double>((vertices + 63) / 64) * 8.0;
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << bytes / (1024.0 * 1024.0) << " MiB";
  return out.str();
}

}  // namespace

std::uint64_t CompatGraph::edge_count() const {
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < size(); ++i) twice += degree(i);
  return twice / 2;
}

CompatGraph build_compat_graph(const Modulus& m, Property prop,
                               std::vector<Perm> vertices) {
  const std::uint32_t n = m.n();
  for (const auto& v : vertices) {
    if (v.n() != n) throw std::invalid_argument("build_compat_graph: degree");
  }
  CompatGraph g{m, prop, std::move(vertices), BitMatrix{}};
  const std::size_t count = g.vertices.size();
  g.adjacency = BitMatrix(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = g.vertices[i].entries();
    for (std::size_t j = i + 1; j < count; ++j) {
      if (pair_property_unchecked(a, g.vertices[j].entries(), n, prop)) {
        g.adjacency.set(i, j);
        g.adjacency.set(j, i);
      }
    }
  }
  return g;
}

CompatGraph build_compat_graph(const Modulus& m, Property prop,
                               GraphScope scope) {
  const std::uint32_t n = m.n();
  if (scope == GraphScope::Full) {
    if (n > kMaxFullGraphDegree) {
      const std::uint64_t v = n <= 20 ? factorial_u64(n) : 0;
      throw ResourceLimitError(
          "full compatibility graph for n = " + std::to_string(n) + " has " +
          (v ? std::to_string(v) : std::string("> 2^63")) + " vertices (" +
          (v ? mib(v) : std::string("far too much memory")) +
          " of adjacency); the limit is n <= 7");
    }
    return build_compat_graph(m, prop, all_permutations(n));
  }

  if (n > kMaxNeighborhoodDegree) {
    throw ResourceLimitError("identity neighborhood enumeration needs n! = " +
                             std::string(n <= 20 ? std::to_string(factorial_u64(n))
                                                 : "> 2^63") +
                             " permutations; the limit is n <= 9");
  }
  const Perm id = Perm::identity(n);
  std::vector<Perm> neighbors;
  for (auto& p : all_permutations(n)) {
    if (p != id && pair_property_unchecked(id.entries(), p.entries(), n, prop)) {
      neighbors.push_back(std::move(p));
      if (neighbors.size() > kMaxNeighborhoodVertices) {
        throw ResourceLimitError(
            "identity neighborhood for n = " + std::to_string(n) + ", " +
            std::string(to_string(prop)) + " exceeds " +
            std::to_string(kMaxNeighborhoodVertices) + " vertices (" +
            mib(kMaxNeighborhoodVertices) + " of adjacency)");
      }
    }
  }
  return build_compat_graph(m, prop, std::move(neighbors));
}

}  // namespace permsum
