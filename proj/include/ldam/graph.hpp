#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ldam {

// Family parameters outside a construction's domain, or an operation
// precondition failure.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertex ids 0..n-1.
// Invariants: no self-loops, no parallel edges, neighbor lists sorted.
class Graph {
 public:
  explicit Graph(int n, std::string name = "") : adj_(check_size(n)), name_(std::move(name)) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  int edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
  }

  void add_edge(int u, int v) {
    if (u == v) throw DomainError("self-loop rejected: " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edge_count());
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) result.emplace_back(u, v);
    return result;
  }

  bool is_connected() const {
    const int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          frontier.push(v);
        }
    }
    return reached == n;
  }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static std::size_t check_size(int n) {
    if (n < 0) throw DomainError("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw DomainError("vertex id " + std::to_string(v) + " out of range [0, " +
                        std::to_string(vertex_count()) + ")");
  }

  static void insert_sorted(std::vector<int>& list, int v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  }

  std::vector<std::vector<int>> adj_;
  std::string name_;
};

// Symbolic name of a vertex within its family, e.g. the center "c", a spoke
// ("v", {3}) or a pendant copy ("v", {3, 2}).
struct VertexRole {
  std::string name;
  std::vector<int> index;

  std::string to_string() const {
    std::string s = name;
    for (std::size_t k = 0; k < index.size(); ++k)
      s += (k == 0 ? "_" : "^") + std::to_string(index[k]);
    return s;
  }

  friend bool operator==(const VertexRole& a, const VertexRole& b) {
    return a.name == b.name && a.index == b.index;
  }
  friend bool operator<(const VertexRole& a, const VertexRole& b) {
    return std::tie(a.name, a.index) < std::tie(b.name, b.index);
  }
};

// Bidirectional map vertex id <-> role. Every id carries exactly one role and
// roles are unique within a graph.
class VertexLayout {
 public:
  VertexLayout() = default;
  explicit VertexLayout(int n) : roles_(static_cast<std::size_t>(n)) {}

  int size() const { return static_cast<int>(roles_.size()); }

  void assign(int id, VertexRole role) {
    if (id < 0 || id >= size()) throw DomainError("layout id out of range");
    if (!roles_[id].name.empty()) throw DomainError("vertex " + std::to_string(id) + " already tagged");
    auto [it, inserted] = ids_.emplace(role, id);
    if (!inserted) throw DomainError("duplicate role " + role.to_string());
    roles_[id] = std::move(role);
  }

  const VertexRole& role(int id) const {
    if (id < 0 || id >= size()) throw DomainError("layout id out of range");
    return roles_[id];
  }

  bool has(const std::string& name, std::vector<int> index = {}) const {
    return ids_.count(VertexRole{name, std::move(index)}) > 0;
  }

  int id(const std::string& name, std::vector<int> index = {}) const {
    VertexRole key{name, std::move(index)};
    auto it = ids_.find(key);
    if (it == ids_.end()) throw DomainError("no vertex with role " + key.to_string());
    return it->second;
  }

 private:
  std::vector<VertexRole> roles_;
  std::map<VertexRole, int> ids_;
};

// Classes of vertices with identical open neighborhoods ("false twins").
// Every labeling gives equal weights inside a class, which both the
// lower-bound arguments and the solver's symmetry reduction rely on.
// Classes are ordered by smallest member, members ascending.
inline std::vector<std::vector<int>> false_twin_partition(const Graph& g) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int v = 0; v < g.vertex_count(); ++v) groups[g.neighbors(v)].push_back(v);
  std::vector<std::vector<int>> classes;
  classes.reserve(groups.size());
  for (auto& [nbs, members] : groups) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace ldam
