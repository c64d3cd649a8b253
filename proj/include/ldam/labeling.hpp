#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ldam/graph.hpp"

namespace ldam {

// A vertex labeling f: position v holds f(v). Valid labelings are bijections
// onto {1..n}; operations below reject anything else.
using Labeling = std::vector<int>;

inline void require_bijective(const Graph& g, const Labeling& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n)
    throw DomainError("labeling length " + std::to_string(f.size()) + " does not match vertex count " +
                      std::to_string(n));
  std::vector<char> seen(n + 1, 0);
  for (int value : f) {
    if (value < 1 || value > n || seen[value])
      throw DomainError("labeling is not a bijection onto {1.." + std::to_string(n) + "}");
    seen[value] = 1;
  }
}

// Neighbor-label sums w(v) = sum of f(z) over z in N(v). Exact 64-bit
// integers; the maximum possible weight is n(n+1)/2.
inline std::vector<std::int64_t> compute_weights(const Graph& g, const Labeling& f) {
  require_bijective(g, f);
  std::vector<std::int64_t> w(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int z : g.neighbors(v)) w[v] += f[z];
  return w;
}

// Outcome of checking the adjacent-weights-differ condition, plus the color
// classes the weights induce.
struct ColorReport {
  bool valid = false;
  std::vector<std::pair<int, int>> conflicts;          // edges (u < v) with w(u) == w(v)
  int color_count = 0;                                 // distinct weights of this labeling
  std::map<std::int64_t, std::vector<int>> classes;    // weight -> vertex ids
  std::vector<int> isolated;                           // degree-0 vertices (weight 0), flagged
};

// Checks w(u) != w(v) across every edge. Always computes the full conflict
// list and the complete class partition, so sweep rows carry exact
// diagnostics.
inline ColorReport verify_local(const Graph& g, const Labeling& f) {
  ColorReport report;
  std::vector<std::int64_t> w = compute_weights(g, f);
  for (int v = 0; v < g.vertex_count(); ++v) {
    report.classes[w[v]].push_back(v);
    if (g.degree(v) == 0) report.isolated.push_back(v);
    for (int z : g.neighbors(v))
      if (v < z && w[v] == w[z]) report.conflicts.emplace_back(v, z);
  }
  report.color_count = static_cast<int>(report.classes.size());
  report.valid = report.conflicts.empty();
  return report;
}

struct DistinctnessCheck {
  bool antimagic = false;                              // all weights pairwise distinct
  std::optional<std::pair<int, int>> collision;        // first colliding pair (by ids)
};

// The global condition: every pair of vertices (adjacent or not) gets a
// distinct weight. Strictly stronger than verify_local.
inline DistinctnessCheck verify_distance_antimagic(const Graph& g, const Labeling& f) {
  std::vector<std::int64_t> w = compute_weights(g, f);
  std::map<std::int64_t, int> first_seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = first_seen.emplace(w[v], v);
    if (!inserted) return {false, std::make_pair(it->second, v)};
  }
  return {true, std::nullopt};
}

}  // namespace ldam
