#pragma once

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twoswitch/switch.hpp"

namespace twoswitch {

// Ordered switch steps applied left-to-right from `start`, with every
// intermediate graph required to stay in `family`.
struct SwitchSequence {
  Graph start;
  std::vector<SwitchMatrix> steps;
  Family family = Family::forest;
};

struct VerifyReport {
  bool ok = true;
  int violation_index = -1;  // step index of the first violation
  std::string message;
  Graph final_graph;
};

// Replays the sequence, checking interchangeability, family membership of
// every intermediate, and degree constancy.
inline VerifyReport verify_sequence(const SwitchSequence& seq) {
  VerifyReport rep;
  DegreeFunction d0 = degree_function(seq.start);
  Graph cur = seq.start;
  if (!member_of(cur, seq.family)) {
    rep.ok = false;
    rep.message = "start graph is not in the declared family";
    rep.final_graph = cur;
    return rep;
  }
  for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
    const SwitchMatrix& m = seq.steps[i];
    if (!is_interchangeable(m, cur)) {
      rep.ok = false;
      rep.violation_index = i;
      rep.message = "step is trivial (not interchangeable) for its graph";
      rep.final_graph = cur;
      return rep;
    }
    cur = apply_switch(m, cur);
    if (degree_function(cur) != d0) {
      rep.ok = false;
      rep.violation_index = i;
      rep.message = "degree function changed";
      rep.final_graph = cur;
      return rep;
    }
    if (!member_of(cur, seq.family)) {
      rep.ok = false;
      rep.violation_index = i;
      rep.message = "intermediate graph left the family";
      rep.final_graph = cur;
      return rep;
    }
  }
  rep.final_graph = cur;
  return rep;
}

// Undo a valid sequence: reversed steps, each inverted.
inline std::vector<SwitchMatrix> reverse_inverted(
    const std::vector<SwitchMatrix>& steps) {
  std::vector<SwitchMatrix> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

namespace detail {

inline Vertex sole_neighbor(const Graph& g, Vertex v) {
  for (const Edge& e : g.edges())
    if (e.incident(v)) return e.other(v);
  return 0;
}

inline std::vector<Vertex> neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (const Edge& e : g.edges())
    if (e.incident(v)) out.push_back(e.other(v));
  return out;
}

// Non-isolated part is connected with as many edges as vertices.
inline bool core_is_unicyclic(const Graph& g) {
  int support = 0;
  auto d = degree_function(g);
  for (Vertex v = 1; v <= g.order(); ++v)
    if (d[v] > 0) ++support;
  if (support == 0 || g.size() != support) return false;
  int edged_comps = 0;
  for (const auto& part : components(g))
    if (part.size() > 1) ++edged_comps;
  return edged_comps == 1;
}

inline bool core_is_2regular(const Graph& g) {
  auto d = degree_function(g);
  for (Vertex v = 1; v <= g.order(); ++v)
    if (d[v] != 0 && d[v] != 2) return false;
  return true;
}

// Unique path between u and v in a forest component (BFS parents).
inline std::vector<Vertex> forest_path(const Graph& g, Vertex from, Vertex to) {
  auto adj = g.adjacency();
  std::vector<Vertex> parent(g.order() + 1, 0);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Vertex w : adj[v]) {
      if (parent[w] == 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  if (parent[to] == 0) return path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// Leaf relocation on forests.  Emits one or two f-switches onto `steps`
// that make ℓ adjacent to `target`, and applies them to `cur`.
// Requires: cur a forest, deg(ℓ)=1 with neighbor u ≠ target,
// deg(target) ≥ 1, ℓ·target not an edge, and if the two-switch detour is
// needed, some other component of cur carries an edge.
inline void forest_leaf_to(Graph& cur, Vertex leaf, Vertex target,
                           std::vector<SwitchMatrix>& steps) {
  Vertex u = sole_neighbor(cur, leaf);
  auto label = component_labels(cur);
  auto emit = [&](SwitchMatrix m) {
    steps.push_back(m);
    cur = apply_switch(m, cur);
  };
  if (label[target] != label[u]) {
    auto nt = neighbors(cur, target);
    Vertex w = *std::min_element(nt.begin(), nt.end());
    emit(SwitchMatrix(leaf, u, target, w));
    return;
  }
  auto path = forest_path(cur, u, target);
  std::vector<Vertex> off;
  for (Vertex w : neighbors(cur, target))
    if (w != u && std::find(path.begin(), path.end(), w) == path.end())
      off.push_back(w);
  if (!off.empty()) {
    Vertex w = *std::min_element(off.begin(), off.end());
    emit(SwitchMatrix(leaf, u, target, w));
    return;
  }
  // deg(target) = 1 with its edge toward u: detach target into another
  // edged component first, then the cross-component move applies.
  Vertex p = sole_neighbor(cur, target);
  Vertex z = 0;
  auto d = degree_function(cur);
  for (Vertex v = 1; v <= cur.order() && z == 0; ++v)
    if (d[v] >= 1 && label[v] != label[u]) z = v;
  if (z == 0)
    throw Error(ErrorCode::NoWitness,
                "no edged component available for the leaf detour");
  auto nz = neighbors(cur, z);
  Vertex wz = *std::min_element(nz.begin(), nz.end());
  emit(SwitchMatrix(target, p, z, wz));
  emit(SwitchMatrix(leaf, u, target, z));
}

// f-switch (t-switch) plan between two forests with the same labeled
// degree function.  Shared-leaf induction: make the lowest leaf's edge
// agree, strip it on both sides, repeat.
inline std::vector<SwitchMatrix> plan_forest(Graph cur, Graph goal) {
  std::vector<SwitchMatrix> steps;
  while (cur != goal) {
    auto d = degree_function(cur);
    Vertex leaf = 0;
    for (Vertex v = 1; v <= cur.order() && leaf == 0; ++v)
      if (d[v] == 1) leaf = v;
    if (leaf == 0) break;  // edgeless on both sides ⇒ equal
    Vertex u = sole_neighbor(cur, leaf);
    Vertex v = sole_neighbor(goal, leaf);
    if (u != v) forest_leaf_to(cur, leaf, v, steps);
    Edge shared(leaf, v);
    cur = cur.without_edge(shared);
    goal = goal.without_edge(shared);
  }
  return steps;
}

// Single u-switch moving leaf ℓ next to `target` on a unicyclic core.
// Scans target's neighbors ascending for a witness w making (ℓ u; target w)
// an interchangeable switch whose image is still a unicyclic core.
inline SwitchMatrix core_leaf_move(const Graph& u_graph, Vertex leaf,
                                   Vertex target) {
  Vertex u = sole_neighbor(u_graph, leaf);
  auto dec = decompose(u_graph);
  auto on_cycle = [&](Vertex v) {
    return std::binary_search(dec.cycle_vertices.begin(),
                              dec.cycle_vertices.end(), v);
  };
  auto d = degree_function(u_graph);
  if (on_cycle(u) && on_cycle(target) && d[target] == 2)
    throw Error(ErrorCode::CaseNotCovered,
                "leaf neighbor and target both on the cycle with target "
                "degree 2; relocate on the other graph instead");
  auto cands = neighbors(u_graph, target);
  std::sort(cands.begin(), cands.end());
  for (Vertex w : cands) {
    if (w == leaf || w == u) continue;
    SwitchMatrix m(leaf, u, target, w);
    if (!is_interchangeable(m, u_graph)) continue;
    if (core_is_unicyclic(apply_switch(m, u_graph))) return m;
  }
  throw Error(ErrorCode::NoWitness, "no witness vertex for the leaf move");
}

}  // namespace detail

// Relocates a leaf within one u-switch: the returned matrix is a u-switch
// on U whose image contains the edge {leaf, target}.
inline SwitchMatrix leaf_move(const Graph& u_graph, Vertex leaf,
                              Vertex target) {
  if (!is_unicyclic(u_graph))
    throw Error(ErrorCode::NotUnicyclic, "leaf_move needs a unicyclic graph");
  auto d = degree_function(u_graph);
  if (!u_graph.has_vertex(leaf) || d[leaf] != 1)
    throw Error(ErrorCode::Precondition, "leaf must have degree 1");
  Vertex u = detail::sole_neighbor(u_graph, leaf);
  if (!u_graph.has_vertex(target) || target == u || target == leaf)
    throw Error(ErrorCode::Precondition,
                "target must differ from the leaf and its neighbor");
  if (d[target] < 2)
    throw Error(ErrorCode::Precondition, "target must have degree at least 2");
  if (u_graph.has_edge(leaf, target))
    throw Error(ErrorCode::Precondition, "leaf is already adjacent to target");
  return detail::core_leaf_move(u_graph, leaf, target);
}

enum class Side { first, second };

namespace detail {

// Shared-leaf step on unicyclic cores with equal degree functions.
// Returns which graph to switch and the u-switch to apply.
inline std::pair<Side, SwitchMatrix> core_make_shared_leaf(const Graph& a,
                                                           const Graph& b) {
  auto d = degree_function(a);
  Vertex leaf = 0;
  for (Vertex v = 1; v <= a.order() && leaf == 0; ++v)
    if (d[v] == 1) leaf = v;
  if (leaf == 0) throw Error(ErrorCode::IsCycle, "graphs have no leaves");
  Vertex u = sole_neighbor(a, leaf);
  Vertex v = sole_neighbor(b, leaf);

  auto dec = decompose(a);
  auto on_cycle_a = [&](Vertex x) {
    return std::binary_search(dec.cycle_vertices.begin(),
                              dec.cycle_vertices.end(), x);
  };
  if (on_cycle_a(u) && on_cycle_a(v) && d[v] == 2) {
    // the uncovered placement: v sits on a's cycle with degree 2, so it is
    // off b's cycle there; relocate the leaf on b toward u instead
    return {Side::second, core_leaf_move(b, leaf, u)};
  }
  return {Side::first, core_leaf_move(a, leaf, v)};
}

// Brute-force plan inside the family of unicyclic cores with this degree
// function; used for tiny supports where the constructive route is not
// spelled out.
inline std::vector<SwitchMatrix> bfs_plan_unicyclic(const Graph& start,
                                                    const Graph& goal) {
  std::map<Graph, std::pair<Graph, SwitchMatrix>> parent;
  std::deque<Graph> queue{start};
  parent.emplace(start, std::make_pair(start, SwitchMatrix()));
  while (!queue.empty()) {
    Graph g = queue.front();
    queue.pop_front();
    if (g == goal) break;
    for (const SwitchMatrix& m : canonical_switches(g)) {
      for (const SwitchMatrix& mm : {m, m.inverse()}) {
        Graph img = apply_switch(mm, g);
        if (!core_is_unicyclic(img) || parent.contains(img)) continue;
        parent.emplace(img, std::make_pair(g, mm));
        queue.push_back(img);
      }
    }
  }
  if (!parent.contains(goal))
    throw Error(ErrorCode::NoWitness, "family is not connected at this size");
  std::vector<SwitchMatrix> steps;
  for (Graph g = goal; g != start;) {
    auto& [prev, m] = parent.at(g);
    steps.push_back(m);
    g = prev;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

inline Edge smallest_edge_of_cycle_through(const std::vector<Edge>& cycle_edges,
                                           const std::vector<int>& label,
                                           int comp) {
  for (const Edge& e : cycle_edges)
    if (label[e.u] == comp) return e;
  throw Error(ErrorCode::NoWitness, "component has no cycle edge");
}

// Single u-switch putting edge {u,v} on a cycle core.
inline SwitchMatrix core_cycle_shared_edge(const Graph& c, Vertex u, Vertex v) {
  auto nu = neighbors(c, u);
  Vertex x = *std::min_element(nu.begin(), nu.end());
  // walk the cycle from u through x until v
  std::vector<bool> on_path(c.order() + 1, false);
  on_path[u] = on_path[x] = true;
  Vertex prev = u, at = x;
  while (at != v) {
    for (Vertex w : neighbors(c, at)) {
      if (w != prev) {
        prev = at;
        at = w;
        break;
      }
    }
    on_path[at] = true;
  }
  Vertex w = 0;
  for (Vertex cand : neighbors(c, v))
    if (!on_path[cand]) w = cand;
  if (w == 0) throw Error(ErrorCode::NoWitness, "no neighbor outside the path");
  return SwitchMatrix(u, x, v, w);
}

// u-switch plan between two cycle cores on the same support.
inline std::vector<SwitchMatrix> plan_cycle(Graph cur, const Graph& goal) {
  std::vector<SwitchMatrix> steps;
  if (cur == goal) return steps;
  Edge shared{};
  bool have_shared = false;
  for (const Edge& e : cur.edges()) {
    if (goal.has_edge(e)) {
      shared = e;
      have_shared = true;
      break;
    }
  }
  if (!have_shared) {
    Edge target = goal.edges().front();
    SwitchMatrix m = core_cycle_shared_edge(cur, target.u, target.v);
    steps.push_back(m);
    cur = apply_switch(m, cur);
    shared = target;
  }
  auto tail = plan_forest(cur.without_edge(shared), goal.without_edge(shared));
  steps.insert(steps.end(), tail.begin(), tail.end());
  return steps;
}

// u-switch plan between two unicyclic cores (non-isolated parts unicyclic
// on the same support, equal degree functions).  Shared-leaf induction down
// to the cycle case; goal-side switches are undone at the end.
inline std::vector<SwitchMatrix> plan_unicyclic(Graph cur, Graph goal) {
  std::vector<SwitchMatrix> steps, goal_side;
  while (cur != goal) {
    if (core_is_2regular(cur)) {
      auto tail = plan_cycle(cur, goal);
      steps.insert(steps.end(), tail.begin(), tail.end());
      break;
    }
    int support = 0;
    auto d = degree_function(cur);
    for (Vertex v = 1; v <= cur.order(); ++v)
      if (d[v] > 0) ++support;
    if (support <= 4) {
      auto tail = bfs_plan_unicyclic(cur, goal);
      steps.insert(steps.end(), tail.begin(), tail.end());
      break;
    }
    // strip a shared leaf if there is one
    Vertex shared_leaf = 0;
    for (Vertex v = 1; v <= cur.order() && shared_leaf == 0; ++v)
      if (d[v] == 1 && sole_neighbor(cur, v) == sole_neighbor(goal, v))
        shared_leaf = v;
    if (shared_leaf != 0) {
      Edge e(shared_leaf, sole_neighbor(cur, shared_leaf));
      cur = cur.without_edge(e);
      goal = goal.without_edge(e);
      continue;
    }
    auto [side, m] = core_make_shared_leaf(cur, goal);
    if (side == Side::first) {
      steps.push_back(m);
      cur = apply_switch(m, cur);
    } else {
      goal_side.push_back(m);
      goal = apply_switch(m, goal);
    }
  }
  auto tail = reverse_inverted(goal_side);
  steps.insert(steps.end(), tail.begin(), tail.end());
  return steps;
}

inline void check_same_degrees(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || degree_function(a) != degree_function(b))
    throw Error(ErrorCode::DegreeMismatch,
                "graphs do not have the same labeled degree function");
}

}  // namespace detail

// f-switch (t-switch when both inputs are trees) sequence from F to F2.
inline SwitchSequence forest_transition(const Graph& f, const Graph& f2) {
  if (!is_forest(f) || !is_forest(f2))
    throw Error(ErrorCode::NotForest, "forest_transition needs forests");
  detail::check_same_degrees(f, f2);
  SwitchSequence seq;
  seq.start = f;
  seq.family = (is_tree(f) && is_tree(f2)) ? Family::tree : Family::forest;
  seq.steps = detail::plan_forest(f, f2);
  return seq;
}

// One u-switch making the two graphs share a leaf; `side` says which graph
// the switch acts on.
inline std::pair<Side, SwitchMatrix> make_shared_leaf(const Graph& u,
                                                      const Graph& u2) {
  if (!is_unicyclic(u) || !is_unicyclic(u2))
    throw Error(ErrorCode::NotUnicyclic, "make_shared_leaf needs unicyclic graphs");
  detail::check_same_degrees(u, u2);
  if (is_cycle_graph(u) || is_cycle_graph(u2))
    throw Error(ErrorCode::IsCycle, "cycle graphs have no leaf to share");
  auto d = degree_function(u);
  for (Vertex v = 1; v <= u.order(); ++v)
    if (d[v] == 1 && detail::sole_neighbor(u, v) == detail::sole_neighbor(u2, v))
      throw Error(ErrorCode::AlreadyShared,
                  "graphs already share leaf " + std::to_string(v));
  return detail::core_make_shared_leaf(u, u2);
}

// u-switch on a cycle graph whose image is a cycle containing edge {u,v}.
inline SwitchMatrix cycle_shared_edge(const Graph& c, Vertex u, Vertex v) {
  if (!is_cycle_graph(c))
    throw Error(ErrorCode::NotCycle, "cycle_shared_edge needs a cycle graph");
  if (!c.has_vertex(u) || !c.has_vertex(v) || u == v)
    throw Error(ErrorCode::Precondition, "u and v must be distinct vertices");
  if (c.has_edge(u, v))
    throw Error(ErrorCode::Adjacent, "u and v are adjacent already");
  return detail::core_cycle_shared_edge(c, u, v);
}

// u-switch sequence between two labeled cycles; every intermediate is a
// cycle graph.
inline SwitchSequence cycle_transition(const Graph& c, const Graph& c2) {
  if (!is_cycle_graph(c) || !is_cycle_graph(c2))
    throw Error(ErrorCode::NotCycle, "cycle_transition needs cycle graphs");
  detail::check_same_degrees(c, c2);
  SwitchSequence seq;
  seq.start = c;
  seq.family = Family::unicyclic;
  seq.steps = detail::plan_cycle(c, c2);
  return seq;
}

// u-switch sequence between two unicyclic graphs with the same labeled
// degree function.
inline SwitchSequence unicyclic_transition(const Graph& u, const Graph& u2) {
  if (!is_unicyclic(u) || !is_unicyclic(u2))
    throw Error(ErrorCode::NotUnicyclic,
                "unicyclic_transition needs unicyclic graphs");
  detail::check_same_degrees(u, u2);
  SwitchSequence seq;
  seq.start = u;
  seq.family = Family::unicyclic;
  seq.steps = detail::plan_unicyclic(u, u2);
  return seq;
}

namespace detail {

// Joins unicyclic components pairwise through their cycle edges until at
// most one edged component with a cycle remains.  Mutates g.
inline std::vector<SwitchMatrix> glue_steps(Graph& g) {
  std::vector<SwitchMatrix> steps;
  while (true) {
    auto parts = components(g);
    auto label = component_labels(g);
    std::vector<int> part_edges(parts.size(), 0);
    for (const Edge& e : g.edges()) ++part_edges[label[e.u]];
    std::vector<int> unicyclic_parts;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
      if (part_edges[i] == static_cast<int>(parts[i].size()) &&
          !parts[i].empty() && part_edges[i] > 0)
        unicyclic_parts.push_back(i);
    if (unicyclic_parts.size() <= 1) break;
    auto dec = decompose(g);
    Edge e1 = smallest_edge_of_cycle_through(dec.cycles_edges, label,
                                             unicyclic_parts[0]);
    Edge e2 = smallest_edge_of_cycle_through(dec.cycles_edges, label,
                                             unicyclic_parts[1]);
    SwitchMatrix m(e1.u, e1.v, e2.u, e2.v);
    steps.push_back(m);
    g = apply_switch(m, g);
  }
  return steps;
}

// After gluing, one switch between a tree-component edge and a cycle edge
// turns the remaining unicyclic component into a tree.  Mutates g.
inline std::vector<SwitchMatrix> break_steps(Graph& g) {
  std::vector<SwitchMatrix> steps = glue_steps(g);
  if (cycles_count(g) == 0) return steps;
  auto label = component_labels(g);
  auto dec = decompose(g);
  Edge e2 = dec.cycles_edges.front();
  // smallest edge of a tree component
  Edge e1{};
  bool found = false;
  for (const Edge& e : dec.forest_edges) {
    if (label[e.u] != label[e2.u]) {
      e1 = e;
      found = true;
      break;
    }
  }
  if (!found)
    throw Error(ErrorCode::EmptyFamily,
                "no tree component carries an edge; no forest realizes "
                "this degree function");
  SwitchMatrix m(e1.u, e1.v, e2.u, e2.v);
  steps.push_back(m);
  g = apply_switch(m, g);
  return steps;
}

}  // namespace detail

// p-switch sequence joining the κ(G) unicyclic components of G into one
// unicyclic graph; exactly κ(G) − 1 steps.
inline SwitchSequence glue_to_unicyclic(const Graph& g) {
  if (!is_pseudoforest(g))
    throw Error(ErrorCode::NotPseudoforest, "glue_to_unicyclic needs a pseudoforest");
  if (cycles_count(g) != kappa(g))
    throw Error(ErrorCode::ZetaPositive,
                "every component must be unicyclic (cycles = kappa)");
  SwitchSequence seq;
  seq.start = g;
  seq.family = Family::pseudoforest;
  Graph work = g;
  seq.steps = detail::glue_steps(work);
  return seq;
}

// p-switch sequence turning G into a forest; requires a tree component.
inline SwitchSequence break_to_forest(const Graph& g) {
  if (!is_pseudoforest(g))
    throw Error(ErrorCode::NotPseudoforest, "break_to_forest needs a pseudoforest");
  if (cycles_count(g) == kappa(g))
    throw Error(ErrorCode::ZetaZero,
                "no tree component available (cycles = kappa)");
  SwitchSequence seq;
  seq.start = g;
  seq.family = Family::pseudoforest;
  if (cycles_count(g) == 0) return seq;  // already a forest
  Graph work = g;
  seq.steps = detail::break_steps(work);
  return seq;
}

// p-switch sequence between two pseudoforests with the same labeled degree
// function.  Both are normalized to a common regime (unicyclic core or
// forest), bridged there, and the second graph's normalization is undone.
inline SwitchSequence pseudoforest_transition(const Graph& g, const Graph& h) {
  if (!is_pseudoforest(g) || !is_pseudoforest(h))
    throw Error(ErrorCode::NotPseudoforest,
                "pseudoforest_transition needs pseudoforests");
  detail::check_same_degrees(g, h);
  SwitchSequence seq;
  seq.start = g;
  seq.family = Family::pseudoforest;
  if (g == h) return seq;

  // Regime split: an edged tree component exists iff a forest with this
  // degree function exists; otherwise normalize to a single unicyclic core.
  auto d = degree_function(g);
  int isolated = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (d[v] == 0) ++isolated;
  int edged_tree_comps = kappa(g) - cycles_count(g) - isolated;

  Graph gw = g, hw = h;
  std::vector<SwitchMatrix> steps, hsteps, bridge;
  if (edged_tree_comps == 0 && cycles_count(g) > 0) {
    steps = detail::glue_steps(gw);
    hsteps = detail::glue_steps(hw);
    bridge = detail::plan_unicyclic(gw, hw);
  } else {
    steps = detail::break_steps(gw);
    hsteps = detail::break_steps(hw);
    bridge = detail::plan_forest(gw, hw);
  }
  steps.insert(steps.end(), bridge.begin(), bridge.end());
  auto tail = reverse_inverted(hsteps);
  steps.insert(steps.end(), tail.begin(), tail.end());
  seq.steps = std::move(steps);
  return seq;
}

}  // namespace twoswitch
