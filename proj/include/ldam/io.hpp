#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ldam/graph.hpp"
#include "ldam/labeling.hpp"

namespace ldam {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    malformed_header,
    malformed_line,
    out_of_range,
    duplicate_edge,
    self_loop,
    bad_labeling,
  };

  ParseError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline std::vector<std::string> nonempty_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::vector<long> parse_ints(const std::string& line, ParseError::Kind kind,
                                    const std::string& what) {
  std::istringstream in(line);
  std::vector<long> values;
  long x;
  while (in >> x) values.push_back(x);
  std::string rest;
  if (!in.eof() || (in >> rest, !rest.empty()))
    throw ParseError(kind, what + ": non-numeric token in \"" + line + "\"");
  return values;
}

}  // namespace detail

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids. Writers emit u < v sorted lexicographically; the parser accepts either
// endpoint order but rejects self-loops and repeated pairs.
inline Graph parse_edge_list(std::string_view text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty())
    throw ParseError(ParseError::Kind::malformed_header, "missing \"n m\" header line");
  auto header = detail::parse_ints(lines[0], ParseError::Kind::malformed_header, "header");
  if (header.size() != 2 || header[0] < 1 || header[1] < 0)
    throw ParseError(ParseError::Kind::malformed_header,
                     "header must be \"n m\" with n >= 1, m >= 0; got \"" + lines[0] + "\"");
  const long n = header[0], m = header[1];
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError(ParseError::Kind::malformed_line,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
  Graph g(static_cast<int>(n));
  std::set<std::pair<int, int>> seen;
  for (long k = 1; k <= m; ++k) {
    auto pair = detail::parse_ints(lines[k], ParseError::Kind::malformed_line, "edge line");
    if (pair.size() != 2)
      throw ParseError(ParseError::Kind::malformed_line,
                       "edge line must be \"u v\"; got \"" + lines[k] + "\"");
    long u = pair[0], v = pair[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(ParseError::Kind::out_of_range,
                       "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") out of range for n = " + std::to_string(n));
    if (u == v)
      throw ParseError(ParseError::Kind::self_loop, "self-loop at vertex " + std::to_string(u));
    std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second)
      throw ParseError(ParseError::Kind::duplicate_edge,
                       "duplicate edge (" + std::to_string(key.first) + ", " +
                           std::to_string(key.second) + ")");
    g.add_edge(key.first, key.second);
  }
  return g;
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// Labeling file: one line of n space-separated labels, position v = f(v).
inline Labeling parse_labeling(std::string_view text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.size() != 1)
    throw ParseError(ParseError::Kind::bad_labeling, "labeling must be a single line of integers");
  auto values = detail::parse_ints(lines[0], ParseError::Kind::bad_labeling, "labeling");
  Labeling f;
  f.reserve(values.size());
  for (long v : values) {
    if (v < 1 || v > static_cast<long>(values.size()))
      throw ParseError(ParseError::Kind::bad_labeling,
                       "label " + std::to_string(v) + " outside {1.." +
                           std::to_string(values.size()) + "}");
    f.push_back(static_cast<int>(v));
  }
  return f;
}

inline std::string write_labeling(const Labeling& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
  out << '\n';
  return out.str();
}

// Layout lines "id role indices...", one per vertex.
inline std::string write_layout(const VertexLayout& layout) {
  std::ostringstream out;
  for (int id = 0; id < layout.size(); ++id) {
    const VertexRole& role = layout.role(id);
    out << id << ' ' << role.name;
    for (int idx : role.index) out << ' ' << idx;
    out << '\n';
  }
  return out.str();
}

// DOT export. With a labeling, every vertex is annotated with its label and
// weight and all vertices of one weight class share a fill color; without
// one, plain structure. Output is deterministic.
inline std::string export_dot(const Graph& g, const Labeling* f = nullptr) {
  static constexpr std::array<const char*, 12> palette = {
      "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
      "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  std::ostringstream out;
  out << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
  if (f != nullptr) {
    std::vector<std::int64_t> w = compute_weights(g, *f);
    std::map<std::int64_t, int> color_index;
    for (std::int64_t value : w) color_index.emplace(value, 0);
    int next = 0;
    for (auto& [value, idx] : color_index) idx = next++;
    out << "  node [shape=circle style=filled];\n";
    for (int v = 0; v < g.vertex_count(); ++v)
      out << "  v" << v << " [label=\"" << v << "\\nf=" << (*f)[v] << "\\nw=" << w[v]
          << "\" fillcolor=\"" << palette[color_index[w[v]] % palette.size()] << "\"];\n";
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ldam
