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
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <thread>

#include "permsum/errors.hpp"
#include "permsum/search.hpp"
#include "permsum/verify.hpp"

namespace permsum {

namespace {

using Clock = std::chrono::steady_clock;

// Shared between workers of one search.
struct SearchState {
  Clock::time_point start;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> best_size{0};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mutex;
  std::vector<std::size_t> best;  // indices in search order
  const std::function<void(const Improvement&)>* on_improvement = nullptr;

  bool expired() {
    if (stop.load(std::memory_order_relaxed)) return true;
    if (deadline && Clock::now() >= *deadline) {
      stop.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

struct Level {
  BitSet candidates;
  BitSet uncolored;
  BitSet color_class;
  std::vector<std::size_t> order;
  std::vector<std::size_t> colors;
};

// Branch and bound over one adjacency matrix (already in search order).
class Worker {
 public:
  Worker(const BitMatrix& adj, SearchState& state) : adj_(adj), state_(state) {}

  ~Worker() { state_.nodes.fetch_add(nodes_, std::memory_order_relaxed); }

  Level& level(std::size_t depth) {
    while (levels_.size() <= depth) levels_.emplace_back();
    return levels_[depth];
  }

  // Greedy sequential coloring of P: vertices whose color is below `kmin`
  // cannot lead to an improvement and are left out of the branch list.
  void color_sort(const BitSet& p, std::size_t kmin, Level& lv) {
    lv.order.clear();
    lv.colors.clear();
    lv.uncolored = p;
    std::size_t k = 0;
    while (lv.uncolored.any()) {
      ++k;
      lv.color_class = lv.uncolored;
      for (std::size_t v = lv.color_class.first(); v < adj_.size();
           v = lv.color_class.first()) {
        lv.color_class.reset(v);
        lv.uncolored.reset(v);
        lv.color_class.subtract(adj_.row(v));
        if (k >= kmin) {
          lv.order.push_back(v);
          lv.colors.push_back(k);
        }
      }
    }
  }

  void offer(const std::vector<std::size_t>& clique) {
    if (clique.size() <= state_.best_size.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(state_.mutex);
    if (clique.size() <= state_.best_size.load()) return;
    state_.best = clique;
    state_.best_size.store(clique.size());
    if (state_.on_improvement && *state_.on_improvement) {
      (*state_.on_improvement)(
          {clique.size(), Clock::now() - state_.start,
           state_.nodes.load(std::memory_order_relaxed) + nodes_});
    }
  }

  bool tick() {
    ++nodes_;
    if ((nodes_ & 255) == 0) return !state_.expired();
    return !state_.stop.load(std::memory_order_relaxed);
  }

  void expand(std::vector<std::size_t>& clique, std::size_t depth) {
    if (!tick()) return;
    Level& lv = level(depth);
    const std::size_t best = state_.best_size.load(std::memory_order_relaxed);
    const std::size_t kmin = best >= clique.size() ? best - clique.size() + 1 : 1;
    color_sort(lv.candidates, kmin, lv);
    Level& next = level(depth + 1);
    for (std::size_t idx = lv.order.size(); idx-- > 0;) {
      if (clique.size() + lv.colors[idx] <=
          state_.best_size.load(std::memory_order_relaxed)) {
        return;
      }
      if (state_.stop.load(std::memory_order_relaxed)) return;
      const std::size_t v = lv.order[idx];
      clique.push_back(v);
      next.candidates.assign_and(lv.candidates, adj_.row(v));
      if (next.candidates.any()) {
        expand(clique, depth + 1);
      } else {
        offer(clique);
      }
      clique.pop_back();
      lv.candidates.reset(v);
    }
  }

  // Top-level branch: v = order[idx] with candidates order[0..idx].
  void branch(const std::vector<std::size_t>& order, std::size_t idx) {
    if (!tick()) return;
    Level& lv = level(1);
    lv.candidates = BitSet(adj_.size());
    for (std::size_t i = 0; i < idx; ++i) lv.candidates.set(order[i]);
    const std::size_t v = order[idx];
    lv.candidates.intersect(adj_.row(v));
    std::vector<std::size_t> clique{v};
    if (lv.candidates.any()) {
      expand(clique, 1);
    } else {
      offer(clique);
    }
  }

  // Decision search for the lexicographically least clique of size `target`:
  // always branch on the smallest candidate, include before exclude.
  bool lex_search(std::vector<std::size_t>& clique, std::size_t target,
                  std::size_t depth) {
    if (clique.size() == target) return true;
    Level& lv = level(depth);
    Level& next = level(depth + 1);
    while (true) {
      if (!tick()) return false;
      if (clique.size() + lv.candidates.count() < target) return false;
      if (clique.size() + color_count(lv) < target) return false;
      const std::size_t v = lv.candidates.first();
      clique.push_back(v);
      next.candidates.assign_and(lv.candidates, adj_.row(v));
      if (lex_search(clique, target, depth + 1)) return true;
      clique.pop_back();
      lv.candidates.reset(v);
    }
  }

 private:
  std::size_t color_count(Level& lv) {
    lv.uncolored = lv.candidates;
    std::size_t k = 0;
    while (lv.uncolored.any()) {
      ++k;
      lv.color_class = lv.uncolored;
      for (std::size_t v = lv.color_class.first(); v < adj_.size();
           v = lv.color_class.first()) {
        lv.color_class.reset(v);
        lv.uncolored.reset(v);
        lv.color_class.subtract(adj_.row(v));
      }
    }
    return k;
  }

  const BitMatrix& adj_;
  SearchState& state_;
  std::deque<Level> levels_;
  std::uint64_t nodes_ = 0;
};

BitMatrix permuted(const BitMatrix& adj, const std::vector<std::size_t>& order) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  BitMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj.test(order[i], order[j])) out.set(i, j);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::Exact ? "exact" : "lower_bound_only";
}

CliqueResult find_max_clique(const CompatGraph& g, const SearchOptions& opts) {
  SearchState state;
  state.start = Clock::now();
  if (opts.time_limit.count() > 0) state.deadline = state.start + opts.time_limit;
  state.on_improvement = &opts.on_improvement;

  const std::size_t n = g.size();
  CliqueResult result;
  if (n == 0) return result;

  // Search order: descending degree, ties by index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = g.degree(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree[a] > degree[b];
  });
  const BitMatrix adj = permuted(g.adjacency, order);

  // Top-level coloring fixes the branch list; branches are then independent.
  std::vector<std::size_t> top_order;
  {
    Worker w(adj, state);
    Level& lv = w.level(0);
    lv.candidates = BitSet(n);
    lv.candidates.set_all();
    w.color_sort(lv.candidates, 1, lv);
    top_order = lv.order;
    std::vector<std::size_t> top_colors = lv.colors;
    std::atomic<std::size_t> next{top_order.size()};
    auto run = [&] {
      Worker worker(adj, state);
      while (true) {
        std::size_t idx = next.load();
        do {
          if (idx == 0) return;
        } while (!next.compare_exchange_weak(idx, idx - 1));
        --idx;
        if (1 + top_colors[idx] <= state.best_size.load()) continue;
        if (state.stop.load()) return;
        worker.branch(top_order, idx);
      }
    };
    const unsigned threads = std::max(1U, opts.threads);
    if (threads == 1) {
      run();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
    }
  }

  const bool timed_out = state.stop.load();
  std::vector<std::size_t> clique;
  for (std::size_t v : state.best) clique.push_back(order[v]);
  std::sort(clique.begin(), clique.end());

  if (!timed_out && !clique.empty()) {
    // Deterministic certificate on the original vertex order.
    std::vector<std::size_t> lex;
    bool found = false;
    {
      Worker w(g.adjacency, state);
      Level& lv = w.level(0);
      lv.candidates = BitSet(n);
      lv.candidates.set_all();
      found = w.lex_search(lex, clique.size(), 0);
    }
    if (found) {
      clique = std::move(lex);
    } else if (!state.stop.load()) {
      throw ConsistencyError("lexicographic pass missed a clique of size " +
                             std::to_string(clique.size()));
    }
  }

  result.clique = std::move(clique);
  result.status = timed_out ? SearchStatus::LowerBoundOnly : SearchStatus::Exact;
  result.nodes_explored = state.nodes.load();
  result.elapsed = Clock::now() - state.start;
  return result;
}

SearchResult max_clique(const CompatGraph& g, const SearchOptions& opts) {
  CliqueResult r = find_max_clique(g, opts);
  Family cert(g.modulus, g.prop);
  for (std::size_t v : r.clique) cert.add(g.vertices[v]);
  if (!verify_family(cert).ok) {
    throw ConsistencyError("max_clique certificate fails verification");
  }
  return SearchResult{r.clique.size(), std::move(cert), r.status,
                      r.nodes_explored, r.elapsed};
}

}  // namespace permsum
