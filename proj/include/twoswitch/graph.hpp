#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <utility>
#include <vector>

#include "twoswitch/error.hpp"

namespace twoswitch {

using Vertex = int;

// Unordered pair {u, v}, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;

  bool incident(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return u == x ? v : u; }
};

enum class Strict { no, yes };

// Finite simple undirected labeled graph on vertex set [n].
// Immutable value; edits return new graphs.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  bool has_edge(Vertex a, Vertex b) const {
    return a != b && has_edge(Edge(a, b));
  }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_ + 1);
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return adj;
  }

  Graph without_edge(Edge e) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& x : edges_)
      if (x != e) es.push_back(x);
    return Graph(n_, std::move(es));
  }

  Graph with_edge(Edge e) const {
    std::vector<Edge> es = edges_;
    es.insert(std::upper_bound(es.begin(), es.end(), e), e);
    return Graph(n_, std::move(es));
  }

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;

  // Trusted constructor: edges must already be simple and in range.
  static Graph unchecked(int n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
  }

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;  // sorted, unique
};

// Per-vertex degree map on [n] (the labeled degree sequence).
struct DegreeFunction {
  std::vector<int> deg;  // deg[v] for v in 1..n; deg[0] unused

  int n() const { return static_cast<int>(deg.size()) - 1; }
  int operator[](Vertex v) const { return deg[v]; }
  int sum() const { return std::accumulate(deg.begin() + 1, deg.end(), 0); }

  std::vector<int> sorted_multiset() const {
    std::vector<int> s(deg.begin() + 1, deg.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }

  bool operator==(const DegreeFunction&) const = default;
};

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
  if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a == b)
      throw Error(ErrorCode::LoopEdge,
                  "loop at vertex " + std::to_string(a));
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(a) + "," + std::to_string(b) +
                      "} outside [" + std::to_string(n) + "]");
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw Error(ErrorCode::DuplicateEdge,
                "edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "} listed twice");
  return Graph::unchecked(n, std::move(edges));
}

inline DegreeFunction degree_function(const Graph& g) {
  DegreeFunction d;
  d.deg.assign(g.order() + 1, 0);
  for (const Edge& e : g.edges()) {
    ++d.deg[e.u];
    ++d.deg[e.v];
  }
  return d;
}

// Connected components as a partition of [n]; parts ordered by least vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  int n = g.order();
  std::vector<int> comp(n + 1, -1);
  auto adj = g.adjacency();
  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(parts.size());
    parts.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      parts[id].push_back(v);
      for (Vertex w : adj[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(parts[id].begin(), parts[id].end());
  }
  return parts;
}

inline int kappa(const Graph& g) {
  return static_cast<int>(components(g).size());
}

// Component labels: comp_of[v] = index of v's component.
inline std::vector<int> component_labels(const Graph& g) {
  auto parts = components(g);
  std::vector<int> label(g.order() + 1, -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (Vertex v : parts[i]) label[v] = i;
  return label;
}

// Bridges via iterative DFS lowlink. An edge lies on a cycle iff it is
// not a bridge.
inline std::vector<bool> bridge_flags(const Graph& g) {
  int n = g.order();
  int m = g.size();
  // adjacency as (neighbor, edge index) lists
  std::vector<std::vector<std::pair<Vertex, int>>> adj(n + 1);
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    adj[e.u].emplace_back(e.v, i);
    adj[e.v].emplace_back(e.u, i);
  }
  std::vector<bool> is_bridge(m, false);
  std::vector<int> disc(n + 1, -1), low(n + 1, 0);
  int timer = 0;

  struct Frame {
    Vertex v;
    int parent_edge;
    size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, ei] = adj[f.v][f.next++];
        if (ei == f.parent_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, ei, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) is_bridge[pe] = true;
        }
      }
    }
  }
  return is_bridge;
}

// Edge partition E(G) = cycle edges ⊎ forest edges, with the vertices
// lying on cycles.
struct CycleForestDecomposition {
  std::vector<Edge> cycles_edges;
  std::vector<Edge> forest_edges;
  std::vector<Vertex> cycle_vertices;  // sorted
};

namespace detail {

// cycles(G) as the number of components H with ||H|| == |H|; only valid
// when no component has more edges than vertices.  Returns (count, ok).
inline std::pair<int, bool> unicyclic_component_count(const Graph& g) {
  auto parts = components(g);
  auto label = component_labels(g);
  std::vector<int> edge_count(parts.size(), 0);
  for (const Edge& e : g.edges()) ++edge_count[label[e.u]];
  int count = 0;
  bool ok = true;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (edge_count[i] == static_cast<int>(parts[i].size())) ++count;
    if (edge_count[i] > static_cast<int>(parts[i].size())) ok = false;
  }
  return {count, ok};
}

}  // namespace detail

inline bool is_pseudoforest(const Graph& g) {
  return detail::unicyclic_component_count(g).second;
}

inline CycleForestDecomposition decompose(const Graph& g,
                                          Strict strict = Strict::no) {
  if (strict == Strict::yes && !is_pseudoforest(g))
    throw Error(ErrorCode::NotPseudoforest,
                "some component has more than one cycle");
  auto bridges = bridge_flags(g);
  CycleForestDecomposition d;
  std::vector<bool> on_cycle(g.order() + 1, false);
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    if (bridges[i]) {
      d.forest_edges.push_back(e);
    } else {
      d.cycles_edges.push_back(e);
      on_cycle[e.u] = on_cycle[e.v] = true;
    }
  }
  for (Vertex v = 1; v <= g.order(); ++v)
    if (on_cycle[v]) d.cycle_vertices.push_back(v);
  return d;
}

// Number of unicyclic components; meaningful for pseudoforests.
inline int cycles_count(const Graph& g, Strict strict = Strict::no) {
  auto [count, ok] = detail::unicyclic_component_count(g);
  if (strict == Strict::yes && !ok)
    throw Error(ErrorCode::NotPseudoforest,
                "some component has more than one cycle");
  return count;
}

// c(G): 0 or 1 for pseudoforests; 2 stands for "at least 2".
inline int cyclicity(const Graph& g, Strict strict = Strict::no) {
  auto [count, ok] = detail::unicyclic_component_count(g);
  if (!ok) {
    if (strict == Strict::yes)
      throw Error(ErrorCode::NotPseudoforest,
                  "some component has more than one cycle");
    return 2;
  }
  return count > 0 ? 1 : 0;
}

// ζ(G) = κ(G) − cycles(G) = |G| − ||G|| for pseudoforests.
inline int zeta(const Graph& g) {
  if (!is_pseudoforest(g))
    throw Error(ErrorCode::NotPseudoforest, "zeta requires a pseudoforest");
  return kappa(g) - cycles_count(g);
}

enum class Family { tree, forest, cycle, unicyclic, pseudoforest, other };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::tree: return "tree";
    case Family::forest: return "forest";
    case Family::cycle: return "cycle";
    case Family::unicyclic: return "unicyclic";
    case Family::pseudoforest: return "pseudoforest";
    case Family::other: return "other";
  }
  return "unknown";
}

inline bool is_connected(const Graph& g) { return kappa(g) <= 1; }

inline bool is_forest(const Graph& g) {
  return cycles_count(g) == 0 && is_pseudoforest(g);
}

inline bool is_tree(const Graph& g) {
  return is_connected(g) && g.size() == g.order() - 1;
}

inline bool is_unicyclic(const Graph& g) {
  return is_connected(g) && g.size() == g.order();
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_unicyclic(g)) return false;
  auto d = degree_function(g);
  for (Vertex v = 1; v <= g.order(); ++v)
    if (d[v] != 2) return false;
  return true;
}

// Family membership as predicates: cycle ⊂ unicyclic ⊂ pseudoforest and
// tree ⊂ forest, unlike the most-specific label classify_family returns.
inline bool member_of(const Graph& g, Family family) {
  switch (family) {
    case Family::tree: return is_tree(g);
    case Family::forest: return is_forest(g);
    case Family::cycle: return is_cycle_graph(g);
    case Family::unicyclic: return is_unicyclic(g);
    case Family::pseudoforest: return is_pseudoforest(g);
    case Family::other: return true;
  }
  return false;
}

inline Family classify_family(const Graph& g) {
  if (is_tree(g)) return Family::tree;
  if (is_forest(g)) return Family::forest;
  if (is_unicyclic(g))
    return is_cycle_graph(g) ? Family::cycle : Family::unicyclic;
  if (is_pseudoforest(g)) return Family::pseudoforest;
  return Family::other;
}

}  // namespace twoswitch
