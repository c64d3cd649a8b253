#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ldam/graph.hpp"

namespace ldam {

enum class Family {
  star,
  subdivided_star,
  bistar,
  double_star,
  subdivided_bistar,
  shadow_bistar,
  complete,
  complete_bipartite,
  complete_tripartite,
  complete_multipartite_equal,
  turan,
  friendship,
  ladder,
  star_corona_null,
  complete_corona_null,
  friendship_corona_null,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::star: return "Star";
    case Family::subdivided_star: return "SubdividedStar";
    case Family::bistar: return "Bistar";
    case Family::double_star: return "DoubleStar";
    case Family::subdivided_bistar: return "SubdividedBistar";
    case Family::shadow_bistar: return "ShadowBistar";
    case Family::complete: return "Complete";
    case Family::complete_bipartite: return "CompleteBipartite";
    case Family::complete_tripartite: return "CompleteTripartite";
    case Family::complete_multipartite_equal: return "CompleteMultipartiteEqual";
    case Family::turan: return "Turan";
    case Family::friendship: return "Friendship";
    case Family::ladder: return "Ladder";
    case Family::star_corona_null: return "StarCoronaNull";
    case Family::complete_corona_null: return "CompleteCoronaNull";
    case Family::friendship_corona_null: return "FriendshipCoronaNull";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
  static const std::array<Family, 16> all = {
      Family::star, Family::subdivided_star, Family::bistar, Family::double_star,
      Family::subdivided_bistar, Family::shadow_bistar, Family::complete,
      Family::complete_bipartite, Family::complete_tripartite,
      Family::complete_multipartite_equal, Family::turan, Family::friendship,
      Family::ladder, Family::star_corona_null, Family::complete_corona_null,
      Family::friendship_corona_null};
  for (Family f : all)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

// Names of the positional parameters, e.g. DoubleStar(m, n), Turan(n, k).
inline std::vector<std::string> family_param_names(Family f) {
  switch (f) {
    case Family::double_star: return {"m", "n"};
    case Family::complete_bipartite: return {"m", "n"};
    case Family::complete_tripartite: return {"x", "y", "z"};
    case Family::complete_multipartite_equal: return {"k", "n"};
    case Family::turan: return {"n", "k"};
    case Family::star_corona_null:
    case Family::complete_corona_null:
    case Family::friendship_corona_null: return {"n", "m"};
    default: return {"n"};
  }
}

// A parameterized member of one of the generated graph families. Any
// parameter values are representable; domain checks happen when a graph is
// built or a construction is requested.
struct FamilySpec {
  Family family = Family::star;
  std::vector<int> params;

  static FamilySpec star(int n) { return {Family::star, {n}}; }
  static FamilySpec subdivided_star(int n) { return {Family::subdivided_star, {n}}; }
  static FamilySpec bistar(int n) { return {Family::bistar, {n}}; }
  static FamilySpec double_star(int m, int n) { return {Family::double_star, {m, n}}; }
  static FamilySpec subdivided_bistar(int n) { return {Family::subdivided_bistar, {n}}; }
  static FamilySpec shadow_bistar(int n) { return {Family::shadow_bistar, {n}}; }
  static FamilySpec complete(int n) { return {Family::complete, {n}}; }
  static FamilySpec complete_bipartite(int m, int n) { return {Family::complete_bipartite, {m, n}}; }
  static FamilySpec complete_tripartite(int x, int y, int z) {
    return {Family::complete_tripartite, {x, y, z}};
  }
  static FamilySpec complete_multipartite_equal(int k, int n) {
    return {Family::complete_multipartite_equal, {k, n}};
  }
  static FamilySpec turan(int n, int k) { return {Family::turan, {n, k}}; }
  static FamilySpec friendship(int n) { return {Family::friendship, {n}}; }
  static FamilySpec ladder(int n) { return {Family::ladder, {n}}; }
  static FamilySpec star_corona_null(int n, int m) { return {Family::star_corona_null, {n, m}}; }
  static FamilySpec complete_corona_null(int n, int m) {
    return {Family::complete_corona_null, {n, m}};
  }
  static FamilySpec friendship_corona_null(int n, int m) {
    return {Family::friendship_corona_null, {n, m}};
  }

  std::string to_string() const {
    std::string s = family_name(family);
    s += "(";
    auto names = family_param_names(family);
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ",";
      if (i < names.size()) s += names[i] + "=";
      s += std::to_string(params[i]);
    }
    s += ")";
    return s;
  }

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.family == b.family && a.params == b.params;
  }
  friend bool operator<(const FamilySpec& a, const FamilySpec& b) {
    return std::tie(a.family, a.params) < std::tie(b.family, b.params);
  }
};

struct BuiltGraph {
  Graph graph;
  VertexLayout layout;
};

namespace detail {

inline void require(bool ok, const FamilySpec& spec, const std::string& bound) {
  if (!ok) throw DomainError(spec.to_string() + " out of domain: requires " + bound);
}

inline void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw DomainError(spec.to_string() + ": expected " + std::to_string(count) + " parameter(s)");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph operators
// ---------------------------------------------------------------------------

// Corona with the null graph on m vertices: every vertex of g gains m new
// pendant neighbors. Pendant (base b, copy j) gets id n + b*m + (j-1) and the
// base role extended by index j, so v_i turns into pendants v_i^j.
inline BuiltGraph corona_null(const Graph& g, const VertexLayout& layout, int m) {
  if (m < 1) throw DomainError("corona with null graph requires m >= 1");
  const int n = g.vertex_count();
  if (n < 1) throw DomainError("corona base graph is empty");
  Graph out(n * (m + 1), g.name());
  VertexLayout out_layout(n * (m + 1));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int b = 0; b < n; ++b) {
    VertexRole base = layout.role(b);
    out_layout.assign(b, base);
    for (int j = 1; j <= m; ++j) {
      int p = n + b * m + (j - 1);
      out.add_edge(b, p);
      VertexRole pendant = base;
      pendant.index.push_back(j);
      out_layout.assign(p, std::move(pendant));
    }
  }
  return {std::move(out), std::move(out_layout)};
}

inline BuiltGraph corona_null(const Graph& g, int m) {
  VertexLayout layout(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) layout.assign(v, {"v", {v + 1}});
  return corona_null(g, layout, m);
}

// Join: disjoint union plus every cross pair. g2's ids are shifted by |V(g1)|.
inline Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n1 < 1 || n2 < 1) throw DomainError("join requires nonempty graphs");
  Graph out(n1 + n2);
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
  return out;
}

// Cartesian product; vertex (a, b) gets id a*|V(g2)| + b.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n1 < 1 || n2 < 1) throw DomainError("cartesian product requires nonempty graphs");
  Graph out(n1 * n2);
  for (int a = 0; a < n1; ++a)
    for (auto [u, v] : g2.edges()) out.add_edge(a * n2 + u, a * n2 + v);
  for (int b = 0; b < n2; ++b)
    for (auto [u, v] : g1.edges()) out.add_edge(u * n2 + b, v * n2 + b);
  return out;
}

// Shadow graph D2[g]: two copies of g, with each vertex also joined to the
// images of its neighbors in the other copy. Copy-2 ids are shifted by n.
// Doubles every degree: deg(v') = 2 deg(v).
inline Graph shadow(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw DomainError("shadow of empty graph");
  Graph out(2 * n);
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, v);
    out.add_edge(n + u, n + v);
    out.add_edge(u, n + v);
    out.add_edge(v, n + u);
  }
  return out;
}

inline Graph null_graph(int n) {
  if (n < 1) throw DomainError("null graph requires n >= 1");
  return Graph(n);
}

inline Graph path_graph(int n) {
  if (n < 1) throw DomainError("path requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

namespace detail {

// n disjoint edges; internal building block (the public families stay
// connected).
inline Graph disjoint_matching(int n) {
  if (n < 1) throw DomainError("matching requires n >= 1");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

// ---------------------------------------------------------------------------
// Family builders. Canonical ordering is documented per family and frozen;
// identical specs always produce identical graphs and layouts.
// ---------------------------------------------------------------------------

// Star S_n: c = 0, leaves v_i = i.
inline BuiltGraph build_star(int n) {
  Graph g(n + 1);
  VertexLayout layout(n + 1);
  layout.assign(0, {"c", {}});
  for (int i = 1; i <= n; ++i) {
    layout.assign(i, {"v", {i}});
    g.add_edge(0, i);
  }
  return {std::move(g), std::move(layout)};
}

// Subdivided star S_n^1: c = 0, inner spokes v_i^1 = i, outer pendants
// v_i^2 = n + i.
inline BuiltGraph build_subdivided_star(int n) {
  Graph g(2 * n + 1);
  VertexLayout layout(2 * n + 1);
  layout.assign(0, {"c", {}});
  for (int i = 1; i <= n; ++i) {
    layout.assign(i, {"v", {i, 1}});
    layout.assign(n + i, {"v", {i, 2}});
    g.add_edge(0, i);
    g.add_edge(i, n + i);
  }
  return {std::move(g), std::move(layout)};
}

// Double star B_{m,n}: u = 0, v = 1, u_i = 1 + i, v_i = 1 + m + i.
// The bistar B_{n,n} is the m == n case.
inline BuiltGraph build_double_star(int m, int n) {
  Graph g(m + n + 2);
  VertexLayout layout(m + n + 2);
  layout.assign(0, {"u", {}});
  layout.assign(1, {"v", {}});
  g.add_edge(0, 1);
  for (int i = 1; i <= m; ++i) {
    layout.assign(1 + i, {"u", {i}});
    g.add_edge(0, 1 + i);
  }
  for (int i = 1; i <= n; ++i) {
    layout.assign(1 + m + i, {"v", {i}});
    g.add_edge(1, 1 + m + i);
  }
  return {std::move(g), std::move(layout)};
}

// Subdivided bistar BS(n,n): the center edge of B_{n,n} subdivided by c.
// c = 0, u = 1, v = 2, u_i = 2 + i, v_i = 2 + n + i.
inline BuiltGraph build_subdivided_bistar(int n) {
  Graph g(2 * n + 3);
  VertexLayout layout(2 * n + 3);
  layout.assign(0, {"c", {}});
  layout.assign(1, {"u", {}});
  layout.assign(2, {"v", {}});
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  for (int i = 1; i <= n; ++i) {
    layout.assign(2 + i, {"u", {i}});
    layout.assign(2 + n + i, {"v", {i}});
    g.add_edge(1, 2 + i);
    g.add_edge(2, 2 + n + i);
  }
  return {std::move(g), std::move(layout)};
}

// Shadow bistar D2[B_{n,n}] in the labeled form this library verifies: both
// copies keep their center edge (u-v and ua-va) and pendants are cross-joined
// to the twin center (u-ua_i etc.), but the two center pairs are NOT
// cross-joined, so |E| = 8n + 2. This differs from shadow(bistar), which
// also joins u-va and v-ua and has 8n + 4 edges.
// u = 0, v = 1, ua = 2, va = 3, u_i = 3+i, v_i = 3+n+i, ua_i = 3+2n+i,
// va_i = 3+3n+i.
inline BuiltGraph build_shadow_bistar(int n) {
  Graph g(4 * n + 4);
  VertexLayout layout(4 * n + 4);
  layout.assign(0, {"u", {}});
  layout.assign(1, {"v", {}});
  layout.assign(2, {"ua", {}});
  layout.assign(3, {"va", {}});
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  for (int i = 1; i <= n; ++i) {
    int ui = 3 + i, vi = 3 + n + i, uai = 3 + 2 * n + i, vai = 3 + 3 * n + i;
    layout.assign(ui, {"u", {i}});
    layout.assign(vi, {"v", {i}});
    layout.assign(uai, {"ua", {i}});
    layout.assign(vai, {"va", {i}});
    g.add_edge(0, ui);
    g.add_edge(1, vi);
    g.add_edge(2, uai);
    g.add_edge(3, vai);
    g.add_edge(0, uai);
    g.add_edge(2, ui);
    g.add_edge(1, vai);
    g.add_edge(3, vi);
  }
  return {std::move(g), std::move(layout)};
}

// Complete graph K_n: v_i = i - 1.
inline BuiltGraph build_complete(int n) {
  Graph g(n);
  VertexLayout layout(n);
  for (int i = 0; i < n; ++i) {
    layout.assign(i, {"v", {i + 1}});
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return {std::move(g), std::move(layout)};
}

// Complete multipartite with the given part sizes; parts occupy consecutive
// id blocks, vertex i of part j tagged v_i^j.
inline BuiltGraph build_complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw DomainError("multipartite part sizes must be positive");
    n += p;
  }
  Graph g(n);
  VertexLayout layout(n);
  std::vector<std::pair<int, int>> blocks;  // [begin, end)
  int off = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    blocks.emplace_back(off, off + parts[j]);
    for (int i = 0; i < parts[j]; ++i)
      layout.assign(off + i, {"v", {i + 1, static_cast<int>(j) + 1}});
    off += parts[j];
  }
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      for (int u = blocks[a].first; u < blocks[a].second; ++u)
        for (int v = blocks[b].first; v < blocks[b].second; ++v) g.add_edge(u, v);
  return {std::move(g), std::move(layout)};
}

// Part sizes of the Turan graph T(n,k): the first n mod k parts get
// ceil(n/k), the rest floor(n/k).
inline std::vector<int> turan_parts(int n, int k) {
  std::vector<int> parts(k, n / k);
  for (int j = 0; j < n % k; ++j) ++parts[j];
  return parts;
}

// Friendship graph F_n: c = 0, triangle i has v_i = i and u_i = n + i.
inline BuiltGraph build_friendship(int n) {
  Graph g(2 * n + 1);
  VertexLayout layout(2 * n + 1);
  layout.assign(0, {"c", {}});
  for (int i = 1; i <= n; ++i) {
    layout.assign(i, {"v", {i}});
    layout.assign(n + i, {"u", {i}});
    g.add_edge(0, i);
    g.add_edge(0, n + i);
    g.add_edge(i, n + i);
  }
  return {std::move(g), std::move(layout)};
}

// Ladder L_n = P2 x P_n: rails v_i = i - 1 and u_i = n + i - 1, matching the
// cartesian product's id scheme.
inline BuiltGraph build_ladder(int n) {
  Graph g(2 * n);
  VertexLayout layout(2 * n);
  for (int i = 1; i <= n; ++i) {
    layout.assign(i - 1, {"v", {i}});
    layout.assign(n + i - 1, {"u", {i}});
  }
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(n + i, n + i + 1);
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
  return {std::move(g), std::move(layout)};
}

}  // namespace detail

// Builds the graph of a family member together with its role layout.
// Deterministic: identical specs give identical graphs. Parameters outside
// the family's envelope raise DomainError naming the violated bound.
inline BuiltGraph build_graph(const FamilySpec& spec) {
  using detail::expect_params;
  using detail::require;
  BuiltGraph built = [&]() -> BuiltGraph {
    switch (spec.family) {
      case Family::star: {
        expect_params(spec, 1);
        require(spec.params[0] >= 1, spec, "n >= 1");
        return detail::build_star(spec.params[0]);
      }
      case Family::subdivided_star: {
        expect_params(spec, 1);
        require(spec.params[0] >= 3, spec, "n >= 3");
        return detail::build_subdivided_star(spec.params[0]);
      }
      case Family::bistar: {
        expect_params(spec, 1);
        require(spec.params[0] >= 2, spec, "n >= 2");
        return detail::build_double_star(spec.params[0], spec.params[0]);
      }
      case Family::double_star: {
        expect_params(spec, 2);
        require(spec.params[0] >= 2 && spec.params[1] >= 2, spec, "m, n >= 2");
        return detail::build_double_star(spec.params[0], spec.params[1]);
      }
      case Family::subdivided_bistar: {
        expect_params(spec, 1);
        require(spec.params[0] >= 3, spec, "n >= 3");
        return detail::build_subdivided_bistar(spec.params[0]);
      }
      case Family::shadow_bistar: {
        expect_params(spec, 1);
        require(spec.params[0] >= 2, spec, "n >= 2");
        return detail::build_shadow_bistar(spec.params[0]);
      }
      case Family::complete: {
        expect_params(spec, 1);
        require(spec.params[0] >= 1, spec, "n >= 1");
        return detail::build_complete(spec.params[0]);
      }
      case Family::complete_bipartite: {
        expect_params(spec, 2);
        require(spec.params[0] >= 1 && spec.params[1] >= 1, spec, "m, n >= 1");
        return detail::build_complete_multipartite({spec.params[0], spec.params[1]});
      }
      case Family::complete_tripartite: {
        expect_params(spec, 3);
        require(spec.params[0] >= 1 && spec.params[1] >= 1 && spec.params[2] >= 1, spec,
                "x, y, z >= 1");
        return detail::build_complete_multipartite(
            {spec.params[0], spec.params[1], spec.params[2]});
      }
      case Family::complete_multipartite_equal: {
        expect_params(spec, 2);
        require(spec.params[0] >= 2, spec, "k >= 2 (k = 1 is disconnected)");
        require(spec.params[1] >= 1, spec, "n >= 1");
        return detail::build_complete_multipartite(
            std::vector<int>(spec.params[0], spec.params[1]));
      }
      case Family::turan: {
        expect_params(spec, 2);
        int n = spec.params[0], k = spec.params[1];
        require(k >= 2, spec, "k >= 2 (k = 1 is edgeless)");
        require(n >= k, spec, "n >= k");
        return detail::build_complete_multipartite(detail::turan_parts(n, k));
      }
      case Family::friendship: {
        expect_params(spec, 1);
        require(spec.params[0] >= 1, spec, "n >= 1");
        return detail::build_friendship(spec.params[0]);
      }
      case Family::ladder: {
        expect_params(spec, 1);
        require(spec.params[0] >= 2, spec, "n >= 2");
        return detail::build_ladder(spec.params[0]);
      }
      case Family::star_corona_null: {
        expect_params(spec, 2);
        require(spec.params[0] >= 1, spec, "n >= 1");
        require(spec.params[1] >= 1, spec, "m >= 1");
        BuiltGraph base = detail::build_star(spec.params[0]);
        return corona_null(base.graph, base.layout, spec.params[1]);
      }
      case Family::complete_corona_null: {
        expect_params(spec, 2);
        require(spec.params[0] >= 1, spec, "n >= 1");
        require(spec.params[1] >= 1, spec, "m >= 1");
        BuiltGraph base = detail::build_complete(spec.params[0]);
        return corona_null(base.graph, base.layout, spec.params[1]);
      }
      case Family::friendship_corona_null: {
        expect_params(spec, 2);
        require(spec.params[0] >= 1, spec, "n >= 1");
        require(spec.params[1] >= 1, spec, "m >= 1");
        BuiltGraph base = detail::build_friendship(spec.params[0]);
        return corona_null(base.graph, base.layout, spec.params[1]);
      }
    }
    throw DomainError("unknown family");
  }();
  built.graph.set_name(spec.to_string());
  return built;
}

}  // namespace ldam
