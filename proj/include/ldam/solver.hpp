#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "ldam/graph.hpp"
#include "ldam/labeling.hpp"

namespace ldam {

class DisconnectedError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct SearchLimits {
  int max_vertices = 10;  // exhaustive-mode cap; raise explicitly for bigger graphs
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
  int workers = 1;              // top-level branch partitioning across threads
  bool twin_reduction = false;  // canonical label order inside false-twin classes
};

struct SolveResult {
  int chi_ld = 0;  // 0 if the budget ran out before any valid labeling
  Labeling witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};
  bool complete = false;
};

namespace detail {

// Backtracking over vertices in descending-degree order, assigning unused
// labels. A vertex's weight is final once its last neighbor is labeled;
// any adjacent pair of final equal weights prunes the branch, so every leaf
// reached is a valid labeling. Optional twin reduction forces labels inside
// a false-twin class to increase with vertex id (label swaps inside a class
// never change any weight, so one representative per orbit suffices).
class LabelSearch {
 public:
  LabelSearch(const Graph& g, bool twin_reduction) : g_(g), n_(g.vertex_count()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&g](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    label_.assign(n_, 0);
    weight_.assign(n_, 0);
    remaining_.resize(n_);
    for (int v = 0; v < n_; ++v) remaining_[v] = g.degree(v);
    if (twin_reduction) {
      classes_ = false_twin_partition(g);
      twin_class_.assign(n_, -1);
      for (std::size_t c = 0; c < classes_.size(); ++c)
        for (int v : classes_[c]) twin_class_[v] = static_cast<int>(c);
    }
  }

  // visit(labels, weights) -> bool (false stops the search). stride/offset
  // partition the first branching level for parallel workers. Returns true
  // iff the search space was exhausted (no budget abort, no visitor stop).
  template <typename Fn>
  bool run(Fn&& visit, const std::optional<std::uint64_t>& node_budget,
           const std::optional<std::chrono::milliseconds>& time_budget, int stride = 1,
           int offset = 0) {
    nodes_ = 0;
    aborted_ = false;
    stopped_ = false;
    node_budget_ = node_budget;
    has_deadline_ = time_budget.has_value();
    if (has_deadline_) deadline_ = std::chrono::steady_clock::now() + *time_budget;
    descend(0, visit, stride, offset);
    return !aborted_ && !stopped_;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool aborted_by_budget() const { return aborted_; }

 private:
  template <typename Fn>
  void descend(int depth, Fn&& visit, int stride, int offset) {
    if (aborted_ || stopped_) return;
    if (depth == n_) {
      if (!visit(label_, weight_)) stopped_ = true;
      return;
    }
    const int v = order_[depth];
    for (int lab = 1; lab <= n_; ++lab) {
      if (used_ & (1ull << lab)) continue;
      if (depth == 0 && stride > 1 && (lab - 1) % stride != offset) continue;
      if (!twin_class_.empty() && !twin_order_ok(v, lab)) continue;
      if (++nodes_ % 4096 == 0 && over_budget()) {
        aborted_ = true;
        return;
      }
      if (node_budget_ && nodes_ > *node_budget_) {
        aborted_ = true;
        return;
      }
      if (place(v, lab)) descend(depth + 1, visit, stride, offset);
      unplace(v, lab);
      if (aborted_ || stopped_) return;
    }
  }

  // Applies the assignment; false when some newly final weight ties an
  // adjacent final weight (caller still unplaces).
  bool place(int v, int lab) {
    label_[v] = lab;
    used_ |= 1ull << lab;
    finalized_.clear();
    for (int u : g_.neighbors(v)) {
      weight_[u] += lab;
      if (--remaining_[u] == 0) finalized_.push_back(u);
    }
    for (int u : finalized_)
      for (int t : g_.neighbors(u))
        if (remaining_[t] == 0 && weight_[t] == weight_[u]) return false;
    return true;
  }

  void unplace(int v, int lab) {
    for (int u : g_.neighbors(v)) {
      weight_[u] -= lab;
      ++remaining_[u];
    }
    used_ &= ~(1ull << lab);
    label_[v] = 0;
  }

  bool twin_order_ok(int v, int lab) const {
    for (int u : classes_[twin_class_[v]]) {
      if (u == v || label_[u] == 0) continue;
      if (u < v && label_[u] > lab) return false;
      if (u > v && label_[u] < lab) return false;
    }
    return true;
  }

  bool over_budget() const {
    return has_deadline_ && std::chrono::steady_clock::now() > deadline_;
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> label_;
  std::vector<std::int64_t> weight_;
  std::vector<int> remaining_;
  std::vector<int> finalized_;
  std::uint64_t used_ = 0;
  std::vector<std::vector<int>> classes_;
  std::vector<int> twin_class_;
  std::uint64_t nodes_ = 0;
  std::optional<std::uint64_t> node_budget_;
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_;
  bool aborted_ = false;
  bool stopped_ = false;
};

inline int distinct_count(std::vector<std::int64_t> w) {
  std::sort(w.begin(), w.end());
  return static_cast<int>(std::unique(w.begin(), w.end()) - w.begin());
}

inline void check_searchable(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n < 1) throw DomainError("empty graph");
  if (!g.is_connected()) throw DisconnectedError("search requires a connected graph");
  if (n > max_vertices)
    throw DomainError("graph has " + std::to_string(n) + " vertices, above the exhaustive cap of " +
                      std::to_string(max_vertices) + "; raise SearchLimits::max_vertices to force");
  if (n > 62) throw DomainError("exhaustive search supports at most 62 vertices");
}

}  // namespace detail

// Exact chi_ld by exhaustive pruned search. The minimum distinct-weight count
// is evaluated at leaves only (distinct counts are not monotone under
// extension, so no partial bound is used); the returned value is independent
// of exploration order. The witness is the first leaf attaining the minimum
// in canonical order (single-worker mode).
inline SolveResult chi_ld_exact(const Graph& g, const SearchLimits& limits = {}) {
  detail::check_searchable(g, limits.max_vertices);
  const int n = g.vertex_count();
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  const int workers = std::min(std::max(1, limits.workers), n);
  if (workers == 1) {
    detail::LabelSearch engine(g, limits.twin_reduction);
    int best = n + 1;
    bool exhausted = engine.run(
        [&](const Labeling& f, const std::vector<std::int64_t>& w) {
          int count = detail::distinct_count(w);
          if (count < best) {
            best = count;
            result.witness = f;
          }
          return true;
        },
        limits.node_budget, limits.time_budget);
    result.nodes_explored = engine.nodes();
    result.complete = exhausted;
    result.chi_ld = best <= n ? best : 0;
  } else {
    std::mutex best_mutex;
    std::atomic<int> best{n + 1};
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> all_complete{true};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w_id = 0; w_id < workers; ++w_id) {
      pool.emplace_back([&, w_id] {
        detail::LabelSearch engine(g, limits.twin_reduction);
        bool exhausted = engine.run(
            [&](const Labeling& f, const std::vector<std::int64_t>& w) {
              int count = detail::distinct_count(w);
              if (count < best.load(std::memory_order_relaxed)) {
                std::lock_guard<std::mutex> lock(best_mutex);
                if (count < best.load(std::memory_order_relaxed)) {
                  best.store(count, std::memory_order_relaxed);
                  result.witness = f;
                }
              }
              return true;
            },
            limits.node_budget, limits.time_budget, workers, w_id);
        total_nodes += engine.nodes();
        if (!exhausted) all_complete = false;
      });
    }
    for (auto& t : pool) t.join();
    result.nodes_explored = total_nodes;
    result.complete = all_complete;
    int b = best.load();
    result.chi_ld = b <= n ? b : 0;
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

// Number of leaves of the pruned search = number of valid labelings; lets
// tests compare the pruned tree against plain enumeration.
inline std::uint64_t count_valid_labelings(const Graph& g, bool twin_reduction = false,
                                           int max_vertices = 10) {
  detail::check_searchable(g, max_vertices);
  detail::LabelSearch engine(g, twin_reduction);
  std::uint64_t count = 0;
  engine.run([&](const Labeling&, const std::vector<std::int64_t>&) {
    ++count;
    return true;
  },
             std::nullopt, std::nullopt);
  return count;
}

// Plain lexicographic enumeration of every bijection, reporting each valid
// labeling with its color count. Deliberately avoids the pruned engine (and
// verify_local) so it can serve as an independent oracle. Hard cap 11.
inline void brute_force_all_valid(const Graph& g,
                                  const std::function<void(const Labeling&, int)>& yield) {
  const int n = g.vertex_count();
  if (n < 1) throw DomainError("empty graph");
  if (n > 11) throw DomainError("brute force enumeration refuses graphs above 11 vertices");
  const auto edges = g.edges();
  Labeling f(n);
  std::iota(f.begin(), f.end(), 1);
  std::vector<std::int64_t> w(n);
  do {
    std::fill(w.begin(), w.end(), 0);
    for (auto [u, v] : edges) {
      w[u] += f[v];
      w[v] += f[u];
    }
    bool valid = true;
    for (auto [u, v] : edges)
      if (w[u] == w[v]) {
        valid = false;
        break;
      }
    if (valid) yield(f, detail::distinct_count(w));
  } while (std::next_permutation(f.begin(), f.end()));
}

namespace detail {

// Greedy clique on a descending-degree order; lower bound for chi.
inline int greedy_clique(const Graph& g) {
  std::vector<int> by_degree(g.vertex_count());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : by_degree) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

inline bool k_colorable(const Graph& g, int k, std::vector<int>& color) {
  const int n = g.vertex_count();
  int pick = -1, best_sat = -1, best_deg = -1;
  int used_max = 0;
  for (int v = 0; v < n; ++v) used_max = std::max(used_max, color[v]);
  for (int v = 0; v < n; ++v) {
    if (color[v]) continue;
    std::uint64_t mask = 0;
    for (int u : g.neighbors(v))
      if (color[u]) mask |= 1ull << color[u];
    int sat = __builtin_popcountll(mask);
    if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
      pick = v;
      best_sat = sat;
      best_deg = g.degree(v);
    }
  }
  if (pick == -1) return true;
  std::uint64_t taken = 0;
  for (int u : g.neighbors(pick))
    if (color[u]) taken |= 1ull << color[u];
  // trying more than one fresh color only permutes color names
  for (int c = 1; c <= std::min(k, used_max + 1); ++c) {
    if (taken & (1ull << c)) continue;
    color[pick] = c;
    if (k_colorable(g, k, color)) return true;
    color[pick] = 0;
  }
  return false;
}

}  // namespace detail

// Exact chromatic number by branch and bound (DSATUR ordering); the baseline
// every chi_ld value must dominate.
inline int chi_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 20) throw DomainError("chi_exact capped at 20 vertices");
  if (g.edge_count() == 0) return 1;
  int lower = std::max(2, detail::greedy_clique(g));
  for (int k = lower; k <= n; ++k) {
    std::vector<int> color(n, 0);
    if (detail::k_colorable(g, k, color)) return k;
  }
  return n;
}

struct RepairOptions {
  std::uint64_t seed = 1;
  int restarts = 200;
  int steps = 5000;
};

// Searches for a valid labeling inducing exactly target_colors distinct
// weights. Exhaustive (and therefore definitive) up to 9 vertices; above
// that a seeded swap-based hill climb over (conflicts, |colors - target|),
// which may miss and return nullopt. Deterministic for a fixed seed.
inline std::optional<Labeling> find_labeling_with_colors(const Graph& g, int target_colors,
                                                         const RepairOptions& opts = {}) {
  const int n = g.vertex_count();
  if (n < 1 || target_colors < 1) return std::nullopt;
  if (n <= 9) {
    detail::LabelSearch engine(g, false);
    std::optional<Labeling> found;
    engine.run(
        [&](const Labeling& f, const std::vector<std::int64_t>& w) {
          if (detail::distinct_count(w) != target_colors) return true;
          found = f;
          return false;
        },
        std::nullopt, std::nullopt);
    return found;
  }
  const auto edges = g.edges();
  std::vector<std::int64_t> w(n);
  auto cost = [&](const Labeling& f) -> long {
    std::fill(w.begin(), w.end(), 0);
    for (auto [u, v] : edges) {
      w[u] += f[v];
      w[v] += f[u];
    }
    long conflicts = 0;
    for (auto [u, v] : edges) conflicts += w[u] == w[v];
    return conflicts * 1000 + std::abs(detail::distinct_count(w) - target_colors);
  };
  std::mt19937_64 rng(opts.seed);
  Labeling f(n);
  std::iota(f.begin(), f.end(), 1);
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::shuffle(f.begin(), f.end(), rng);
    long current = cost(f);
    if (current == 0) return f;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < opts.steps; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      std::swap(f[i], f[j]);
      long next = cost(f);
      if (next < current) {
        current = next;
        if (current == 0) return f;
      } else {
        std::swap(f[i], f[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace ldam
