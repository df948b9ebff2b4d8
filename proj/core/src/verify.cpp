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

#include "permsum/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permsum/errors.hpp"

namespace permsum {

namespace {

std::string violation_reason(const Perm& a, const Perm& b, Property prop) {
  switch (prop) {
    case Property::P1:
      return "sum is not a permutation: " + format_perm(pointwise_add(a, b));
    case Property::P2:
      return "sum is a permutation: " + format_perm(pointwise_add(a, b));
    case Property::P3:
      return "difference is not a permutation: " +
             format_perm(pointwise_sub(a, b));
  }
  return {};
}

void scan_rows(const Family& fam, std::size_t first_row, std::size_t stride,
               std::vector<Violation>& out) {
  const auto& members = fam.members();
  for (std::size_t i = first_row; i < members.size(); i += stride) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) {
        out.push_back({i, j, "duplicate member"});
      } else if (!pair_property_unchecked(members[i].entries(),
                                          members[j].entries(), fam.n(),
                                          fam.prop())) {
        out.push_back({i, j, violation_reason(members[i], members[j], fam.prop())});
      }
    }
  }
}

}  // namespace

VerifyReport verify_family(Family& fam, unsigned threads) {
  VerifyReport report;
  const std::uint64_t m = fam.size();
  report.pairs_checked = m * (m == 0 ? 0 : m - 1) / 2;

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::uint64_t>(m, 1))));
  if (threads == 1) {
    scan_rows(fam, 0, 1, report.violations);
  } else {
    std::vector<std::vector<Violation>> partial(threads);
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back(
          [&fam, &partial, w, threads] { scan_rows(fam, w, threads, partial[w]); });
    }
    workers.clear();
    for (auto& p : partial) {
      report.violations.insert(report.violations.end(),
                               std::make_move_iterator(p.begin()),
                               std::make_move_iterator(p.end()));
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& x, const Violation& y) {
                return std::pair(x.first, x.second) < std::pair(y.first, y.second);
              });
  }
  report.ok = report.violations.empty();
  fam.verified_ = report.ok;
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& v : report.violations) {
    out << "violation " << v.first << ' ' << v.second << ": " << v.reason
        << '\n';
  }
  out << "ok=" << (report.ok ? 1 : 0) << '\n';
  out << "pairs_checked=" << report.pairs_checked << '\n';
  out << "violations=" << report.violations.size() << '\n';
  return out.str();
}

std::optional<std::pair<std::size_t, std::size_t>> distinct_sum_witness(
    std::span<const Entry> a, std::span<const Entry> b) {
  const std::size_t n = a.size();
  if (b.size() != n || !is_permutation(a, static_cast<std::uint32_t>(n)) ||
      !is_permutation(b, static_cast<std::uint32_t>(n))) {
    throw std::invalid_argument(
        "distinct_sum_witness needs two permutations of equal degree");
  }
  if (std::equal(a.begin(), a.end(), b.begin())) {
    throw std::invalid_argument("distinct_sum_witness needs a != b");
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index_of(2 * n, kNone);
  std::vector<std::size_t> sums(n);
  for (std::size_t i = 0; i < n; ++i) {
    sums[i] = std::size_t{a[i]} + b[i];
    if (index_of[sums[i]] != kNone) return std::nullopt;
    index_of[sums[i]] = i;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sums[j] > 0 && index_of[sums[j] - 1] != kNone) {
      return std::pair{j, index_of[sums[j] - 1]};
    }
  }
  // Unreachable for distinct permutations with distinct sums.
  throw ConsistencyError("distinct sums without a consecutive pair");
}

std::vector<Residue> sumset(std::span<const Residue> a,
                            std::span<const Residue> b, const Modulus& m) {
  const std::uint32_t n = m.n();
  std::vector<bool> hit(n, false);
  for (Residue x : a) {
    for (Residue y : b) hit[(x % n + y % n) % n] = true;
  }
  std::vector<Residue> out;
  for (Residue v = 0; v < n; ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

namespace {

std::size_t distinct_count(std::span<const Residue> a, std::uint32_t n) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (Residue x : a) {
    if (!seen[x % n]) {
      seen[x % n] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace

bool cauchy_davenport_check(std::span<const Residue> a,
                            std::span<const Residue> b, const Modulus& m) {
  if (!m.is_prime()) {
    throw std::invalid_argument("cauchy_davenport_check requires prime n, got " +
                                std::to_string(m.n()));
  }
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("cauchy_davenport_check requires nonempty sets");
  }
  const std::size_t lhs = sumset(a, b, m).size();
  const std::size_t bound =
      std::min<std::size_t>(m.n(), distinct_count(a, m.n()) +
                                       distinct_count(b, m.n()) - 1);
  return lhs >= bound;
}

EdgeColoring::EdgeColoring(std::size_t vertices, std::uint32_t colors)
    : vertices_(vertices),
      colors_(colors),
      pair_colors_(vertices * (vertices == 0 ? 0 : vertices - 1) / 2, 0) {}

std::size_t EdgeColoring::index(std::size_t u, std::size_t v) const {
  if (u == v || u >= vertices_ || v >= vertices_) {
    throw std::invalid_argument("EdgeColoring: invalid pair");
  }
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

void EdgeColoring::set(std::size_t u, std::size_t v, std::uint32_t color) {
  if (color < 1 || color > colors_) {
    throw std::invalid_argument("EdgeColoring: color " + std::to_string(color) +
                                " outside [1, " + std::to_string(colors_) + "]");
  }
  pair_colors_[index(u, v)] = color;
}

std::uint32_t EdgeColoring::color(std::size_t u, std::size_t v) const {
  return pair_colors_[index(u, v)];
}

bool EdgeColoring::complete() const {
  return std::none_of(pair_colors_.begin(), pair_colors_.end(),
                      [](std::uint32_t c) { return c == 0; });
}

BipartiteCheck bipartite_bound_check(const EdgeColoring& coloring) {
  if (!coloring.complete()) {
    throw std::invalid_argument("bipartite_bound_check: incomplete coloring");
  }
  if (coloring.colors() > 64) {
    throw std::invalid_argument("bipartite_bound_check: more than 64 colors");
  }
  const std::size_t m = coloring.vertices();
  BipartiteCheck result;
  result.labels.assign(m, 0);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  for (std::uint32_t c = 1; c <= coloring.colors(); ++c) {
    std::vector<int> side(m, -1);
    std::vector<std::size_t> parent(m, kNone);
    for (std::size_t root = 0; root < m; ++root) {
      if (side[root] >= 0) continue;
      side[root] = 0;
      std::queue<std::size_t> frontier;
      frontier.push(root);
      while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t v = 0; v < m; ++v) {
          if (v == u || coloring.color(u, v) != c) continue;
          if (side[v] < 0) {
            side[v] = 1 - side[u];
            parent[v] = u;
            frontier.push(v);
          } else if (side[v] == side[u]) {
            // Both BFS paths meet at the lowest common ancestor.
            std::vector<std::size_t> up_u{u};
            std::vector<std::size_t> up_v{v};
            while (up_u.back() != root) up_u.push_back(parent[up_u.back()]);
            while (up_v.back() != root) up_v.push_back(parent[up_v.back()]);
            while (up_u.size() > 1 && up_v.size() > 1 &&
                   up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
              up_u.pop_back();
              up_v.pop_back();
            }
            std::vector<std::size_t> cycle(up_u.rbegin(), up_u.rend());
            cycle.insert(cycle.end(), up_v.begin(), up_v.end() - 1);
            result.odd_cycle_color = c;
            result.odd_cycle = std::move(cycle);
            return result;
          }
        }
      }
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (side[v] == 1) result.labels[v] |= std::uint64_t{1} << (c - 1);
    }
  }
  result.all_bipartite = true;
  std::vector<std::uint64_t> sorted = result.labels;
  std::sort(sorted.begin(), sorted.end());
  result.labels_injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  const bool within_bound =
      coloring.colors() >= 64 || m <= (std::uint64_t{1} << coloring.colors());
  result.ok = result.labels_injective && within_bound;
  return result;
}

EdgeColoring class_sum_coloring(std::span<const Perm> members,
                                const Modulus& m) {
  const std::uint32_t n = m.n();
  EdgeColoring coloring(members.size(), static_cast<std::uint32_t>(m.k()));
  if (members.empty()) return coloring;
  const Perm& base = members.front();
  const auto where = invert(base);
  std::vector<Residue> scale;
  for (const auto& p : members) {
    if (p.n() != n) throw std::invalid_argument("class_sum_coloring: degree");
    const Residue t = p[where[0]];
    const Residue s = (p[where[1]] + n - t) % n;
    if (!is_unit(s, m) || affine_apply(s, t, base) != p.tuple()) {
      throw std::invalid_argument(
          "class_sum_coloring: members are not affinely equivalent");
    }
    scale.push_back(s);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Residue sum = (scale[i] + scale[j]) % n;
      std::uint32_t color = 0;
      for (std::size_t r = 0; r < m.k(); ++r) {
        if (sum % m.factors()[r].prime == 0) {
          color = static_cast<std::uint32_t>(r + 1);
          break;
        }
      }
      if (color == 0) {
        throw std::invalid_argument("class_sum_coloring: members " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j) +
                                    " sum to a permutation");
      }
      coloring.set(i, j, color);
    }
  }
  return coloring;
}

Perm canonical_form(const Perm& p, const Modulus& m) {
  if (p.n() != m.n()) throw std::invalid_argument("canonical_form: degree");
  Tuple best = p.tuple();
  for (Residue s : units(m)) {
    for (Residue t = 0; t < m.n(); ++t) {
      Tuple image = affine_apply(s, t, p);
      if (image < best) best = std::move(image);
    }
  }
  return Perm::from(std::move(best));
}

std::vector<EquivalenceClass> equivalence_classes(const Modulus& m) {
  if (m.n() > 7) {
    throw ResourceLimitError("equivalence_classes enumerates n! permutations; "
                             "n = " + std::to_string(m.n()) +
                             " exceeds the limit of 7");
  }
  const auto unit_list = units(m);
  std::map<Perm, std::size_t> assigned;
  std::vector<EquivalenceClass> classes;
  for (auto& p : all_permutations(m.n())) {
    if (assigned.contains(p)) continue;
    // p is the first unassigned permutation in lexicographic order, so it is
    // the least element of its orbit.
    const std::size_t id = classes.size();
    EquivalenceClass cls{p, {}};
    for (Residue s : unit_list) {
      for (Residue t = 0; t < m.n(); ++t) {
        Perm image = Perm::from(affine_apply(s, t, p));
        if (assigned.emplace(image, id).second) {
          cls.members.push_back(std::move(image));
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t rank_mod_prime(std::span<const Perm> rows, const Modulus& m) {
  if (!m.is_prime()) throw std::invalid_argument("rank_mod_prime: n not prime");
  const std::uint64_t p = m.n();
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.emplace_back(r.entries().begin(), r.entries().end());

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = *inverse(static_cast<Residue>(a[rank][col]), m);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

IsotropyReport isotropy_rank_check(const Family& fam) {
  const Modulus& m = fam.modulus();
  if (!m.is_prime() || m.n() <= 3) {
    throw std::invalid_argument(
        "isotropy_rank_check requires a prime modulus greater than 3, got " +
        std::to_string(m.n()));
  }
  if (fam.prop() != Property::P1 || !fam.verified()) {
    throw std::invalid_argument("isotropy_rank_check requires a verified P1 family");
  }
  IsotropyReport report;
  report.all_orthogonal = true;
  const auto& rows = fam.members();
  for (std::size_t i = 0; i < rows.size() && report.all_orthogonal; ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (inner_product_mod(rows[i], rows[j]) != 0) {
        report.all_orthogonal = false;
        break;
      }
    }
  }
  report.rank = rank_mod_prime(rows, m);
  report.rank_bound_holds = report.rank <= (m.n() - 1) / 2;
  return report;
}

}  // namespace permsum
