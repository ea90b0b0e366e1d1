#pragma once

#include <deque>
#include <map>
#include <vector>

#include "twoswitch/switch.hpp"

namespace twoswitch {

inline int default_enumeration_bound(Family family) {
  switch (family) {
    case Family::unicyclic:
    case Family::cycle:
      return 8;
    case Family::pseudoforest:
      return 7;
    default:
      return 8;
  }
}

namespace detail {

// Backtracking over edge sets with degree pruning: vertex v's remaining
// degree is matched against higher-labeled vertices only.
inline void enumerate_degree_graphs(int n, std::vector<int>& rem,
                                    std::vector<Edge>& edges, Vertex v,
                                    std::vector<Graph>& out) {
  while (v <= n && rem[v] == 0) ++v;
  if (v > n) {
    out.push_back(Graph::unchecked(n, edges));
    return;
  }
  int need = rem[v];
  // choose `need` neighbors of v among {v+1..n} with remaining degree
  std::vector<Vertex> chosen;
  auto pick = [&](auto&& self, Vertex w, int left) -> void {
    if (left == 0) {
      for (Vertex x : chosen) {
        --rem[x];
        edges.emplace_back(v, x);
      }
      int saved = rem[v];
      rem[v] = 0;
      enumerate_degree_graphs(n, rem, edges, v + 1, out);
      rem[v] = saved;
      for (Vertex x : chosen) {
        ++rem[x];
        edges.pop_back();
      }
      return;
    }
    if (w > n || n - w + 1 < left) return;
    if (rem[w] > 0) {
      chosen.push_back(w);
      self(self, w + 1, left - 1);
      chosen.pop_back();
    }
    self(self, w + 1, left);
  };
  pick(pick, v + 1, need);
  (void)need;
}

}  // namespace detail

// Every labeled simple graph on [n] with exactly this degree function.
inline std::vector<Graph> enumerate_with_degrees(const DegreeFunction& s) {
  int n = s.n();
  std::vector<Graph> out;
  if (s.sum() % 2 != 0) return out;  // handshake parity
  for (Vertex v = 1; v <= n; ++v)
    if (s[v] < 0 || s[v] > n - 1) return out;
  std::vector<int> rem = s.deg;
  std::vector<Edge> edges;
  detail::enumerate_degree_graphs(n, rem, edges, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Complete duplicate-free list of family members with degree function s.
inline std::vector<Graph> enumerate_family(const DegreeFunction& s,
                                           Family family, int max_n = 0) {
  int bound = max_n > 0 ? max_n : default_enumeration_bound(family);
  if (s.n() > bound)
    throw Error(ErrorCode::BoundExceeded,
                "enumeration bound " + std::to_string(bound) +
                    " exceeded (n = " + std::to_string(s.n()) + ")");
  std::vector<Graph> out;
  for (Graph& g : enumerate_with_degrees(s))
    if (member_of(g, family)) out.push_back(std::move(g));
  return out;
}

struct MetagraphLink {
  int from = 0;
  int to = 0;
  SwitchMatrix via;
};

// Nodes are the family members with a common degree function; links are
// single family-preserving switches.
struct Metagraph {
  Family family = Family::unicyclic;
  std::vector<Graph> nodes;  // sorted by canonical edge-list order
  std::vector<MetagraphLink> links;
  std::vector<std::vector<int>> adj;

  int index_of(const Graph& g) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), g);
    if (it == nodes.end() || *it != g)
      throw Error(ErrorCode::NodeNotFound, "graph is not a family member");
    return static_cast<int>(it - nodes.begin());
  }
};

inline Metagraph build_metagraph_from_nodes(std::vector<Graph> nodes,
                                            Family family) {
  Metagraph m;
  m.family = family;
  std::sort(nodes.begin(), nodes.end());
  m.nodes = std::move(nodes);
  m.adj.assign(m.nodes.size(), {});
  for (int i = 0; i < static_cast<int>(m.nodes.size()); ++i) {
    const Graph& g = m.nodes[i];
    for (const SwitchMatrix& sw : canonical_switches(g)) {
      Graph image = apply_switch(sw, g);
      if (!member_of(image, family)) continue;
      int j = m.index_of(image);
      m.links.push_back({i, j, sw});
      m.adj[i].push_back(j);
    }
  }
  return m;
}

inline Metagraph build_metagraph(const DegreeFunction& s, Family family,
                                 int max_n = 0) {
  return build_metagraph_from_nodes(enumerate_family(s, family, max_n),
                                    family);
}

namespace detail {

inline std::vector<int> bfs_distances(const Metagraph& m, int source) {
  std::vector<int> dist(m.nodes.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : m.adj[v]) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace detail

inline bool is_berge_connected(const Metagraph& m) {
  if (m.nodes.empty()) return true;
  auto dist = detail::bfs_distances(m, 0);
  for (int d : dist)
    if (d == -1) return false;
  return true;
}

// Longest shortest switch distance; -1 when the metagraph is disconnected.
inline int diameter(const Metagraph& m) {
  int diam = 0;
  for (int v = 0; v < static_cast<int>(m.nodes.size()); ++v) {
    auto dist = detail::bfs_distances(m, v);
    for (int d : dist) {
      if (d == -1) return -1;
      diam = std::max(diam, d);
    }
  }
  return diam;
}

inline int switch_distance(const Metagraph& m, const Graph& from,
                           const Graph& to) {
  auto dist = detail::bfs_distances(m, m.index_of(from));
  return dist[m.index_of(to)];
}

// Shortest family-preserving switch sequence between two members; the
// ground truth for planner length comparisons.
inline std::vector<SwitchMatrix> shortest_switch_path(const Metagraph& m,
                                                      const Graph& from,
                                                      const Graph& to) {
  int source = m.index_of(from);
  int target = m.index_of(to);
  std::vector<int> parent(m.nodes.size(), -1);
  std::vector<SwitchMatrix> via(m.nodes.size());
  std::deque<int> queue{source};
  parent[source] = source;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == target) break;
    for (const MetagraphLink& link : m.links) {
      if (link.from != v || parent[link.to] != -1) continue;
      parent[link.to] = v;
      via[link.to] = link.via;
      queue.push_back(link.to);
    }
  }
  if (parent[target] == -1)
    throw Error(ErrorCode::NodeNotFound, "no switch path between the members");
  std::vector<SwitchMatrix> steps;
  for (int v = target; v != source; v = parent[v]) steps.push_back(via[v]);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace twoswitch
