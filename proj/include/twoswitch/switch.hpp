#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twoswitch/graph.hpp"

namespace twoswitch {

// Action matrix (a b; c d): the switch removes ab, cd and adds ac, bd.
// Orientation matters: (a b; c d) and (a b; d c) generally act differently.
struct SwitchMatrix {
  Vertex a = 0, b = 0, c = 0, d = 0;

  SwitchMatrix() = default;
  SwitchMatrix(Vertex a_, Vertex b_, Vertex c_, Vertex d_)
      : a(a_), b(b_), c(c_), d(d_) {}

  Edge removed_first() const { return Edge(a, b); }
  Edge removed_second() const { return Edge(c, d); }
  Edge added_first() const { return Edge(a, c); }
  Edge added_second() const { return Edge(b, d); }

  // Undoes this switch on any image graph: removes ac, bd and adds ab, cd.
  SwitchMatrix inverse() const { return SwitchMatrix(a, c, b, d); }

  // (a b; c d), (c d; a b), (b a; d c) and (d c; b a) act identically;
  // the lexicographically least of the four names the class.
  SwitchMatrix canonical() const {
    std::array<SwitchMatrix, 4> forms = {
        SwitchMatrix(a, b, c, d), SwitchMatrix(c, d, a, b),
        SwitchMatrix(b, a, d, c), SwitchMatrix(d, c, b, a)};
    SwitchMatrix best = forms[0];
    for (const auto& f : forms)
      if (f.key() < best.key()) best = f;
    return best;
  }

  std::array<Vertex, 4> key() const { return {a, b, c, d}; }
  bool operator==(const SwitchMatrix&) const = default;
  auto operator<=>(const SwitchMatrix& o) const { return key() <=> o.key(); }
};

inline SwitchMatrix inverse(const SwitchMatrix& m) { return m.inverse(); }

inline bool is_interchangeable(const SwitchMatrix& m, const Graph& g) {
  if (!g.has_vertex(m.a) || !g.has_vertex(m.b) || !g.has_vertex(m.c) ||
      !g.has_vertex(m.d))
    return false;
  if (m.a == m.b || m.c == m.d) return false;
  if (m.a == m.c || m.a == m.d || m.b == m.c || m.b == m.d) return false;
  return g.has_edge(m.a, m.b) && g.has_edge(m.c, m.d) &&
         !g.has_edge(m.a, m.c) && !g.has_edge(m.b, m.d);
}

// τ_A(G): G - ab - cd + ac + bd when A is interchangeable, else G.
inline Graph apply_switch(const SwitchMatrix& m, const Graph& g) {
  if (!is_interchangeable(m, g)) return g;
  std::vector<Edge> edges;
  edges.reserve(g.size());
  Edge ab = m.removed_first(), cd = m.removed_second();
  for (const Edge& e : g.edges())
    if (e != ab && e != cd) edges.push_back(e);
  edges.push_back(m.added_first());
  edges.push_back(m.added_second());
  return Graph::unchecked(g.order(), std::move(edges));
}

inline bool is_breaker(const SwitchMatrix& m, const Graph& g) {
  if (!is_interchangeable(m, g)) return false;
  return kappa(apply_switch(m, g)) > kappa(g);
}

enum class SwitchTag { trivial, plain, t, f, u, p, breaker_composite };

inline const char* to_string(SwitchTag t) {
  switch (t) {
    case SwitchTag::trivial: return "trivial";
    case SwitchTag::plain: return "plain";
    case SwitchTag::t: return "t";
    case SwitchTag::f: return "f";
    case SwitchTag::u: return "u";
    case SwitchTag::p: return "p";
    case SwitchTag::breaker_composite: return "breaker-composite";
  }
  return "unknown";
}

// Classification record; not exclusive categories (a u-switch is also a
// p-switch, a t-switch also an f-switch).
struct SwitchClass {
  SwitchTag tag = SwitchTag::trivial;
  bool is_trivial = true;
  bool is_breaker = false;
  bool is_t = false;
  bool is_f = false;
  bool is_u = false;
  bool is_p = false;
  bool preserves_family = true;  // image stays in the source graph's family
};

// Ground truth: apply the switch and classify the image.
inline SwitchClass classify_switch_direct(const SwitchMatrix& m,
                                          const Graph& g) {
  SwitchClass r;
  if (!is_interchangeable(m, g)) return r;  // trivial

  Graph image = apply_switch(m, g);
  r.is_trivial = false;
  r.is_breaker = kappa(image) > kappa(g);
  r.is_t = is_tree(g) && is_tree(image);
  r.is_f = is_forest(g) && is_forest(image);
  r.is_u = is_unicyclic(g) && is_unicyclic(image);
  r.is_p = is_pseudoforest(g) && is_pseudoforest(image);

  if (r.is_t)
    r.tag = SwitchTag::t;
  else if (r.is_f)
    r.tag = SwitchTag::f;
  else if (r.is_u)
    r.tag = SwitchTag::u;
  else if (r.is_p)
    r.tag = SwitchTag::p;
  else if (r.is_breaker)
    r.tag = SwitchTag::breaker_composite;
  else
    r.tag = SwitchTag::plain;

  Family before = classify_family(g);
  Family after = classify_family(image);
  // cycle counts as unicyclic, tree as forest, for preservation purposes
  auto widen = [](Family f) {
    if (f == Family::cycle) return Family::unicyclic;
    return f;
  };
  r.preserves_family = widen(before) == widen(after);
  return r;
}

namespace detail {

// t-switch test on a tree: image connected and acyclic again.
inline bool is_t_switch_on(const SwitchMatrix& m, const Graph& tree) {
  Graph image = apply_switch(m, tree);
  return is_connected(image) && image.size() == image.order() - 1;
}

}  // namespace detail

// Characterization-based u-switch test: decides whether τ(U) is unicyclic
// from where the two removed edges sit relative to Cycles(U)/Forest(U),
// without classifying the full image.
inline bool classify_u_switch(const SwitchMatrix& m, const Graph& u) {
  if (!is_unicyclic(u))
    throw Error(ErrorCode::NotUnicyclic, "classify_u_switch needs a unicyclic graph");
  if (!is_interchangeable(m, u))
    throw Error(ErrorCode::TrivialSwitch, "matrix is trivial for this graph");

  auto dec = decompose(u);
  auto in_cycle = [&](Edge e) {
    return std::binary_search(dec.cycles_edges.begin(),
                              dec.cycles_edges.end(), e);
  };
  Edge e1 = m.removed_first(), e2 = m.removed_second();
  bool c1 = in_cycle(e1), c2 = in_cycle(e2);

  if (!c1 && !c2) {
    // both in Forest(U): u-switch iff t-switch on U - e for a cycle edge e;
    // the answer is independent of the choice of e
    Edge e = dec.cycles_edges.front();
    return detail::is_t_switch_on(m, u.without_edge(e));
  }
  if (c1 != c2) return true;  // one edge on the cycle, one off

  // both on the cycle: u-switch iff not a breaker over Cycles(U)
  Graph cyc = Graph::unchecked(u.order(), dec.cycles_edges);
  return !is_breaker(m, cyc);
}

// Characterization-based p-switch test: decides whether τ(G) is a
// pseudoforest from edge placement.  Only two placements need real work:
// both removed edges in the forest part of one unicyclic component, or of
// two different unicyclic components; every other placement preserves
// pseudoforest-ness.
inline bool classify_p_switch(const SwitchMatrix& m, const Graph& g) {
  if (!is_pseudoforest(g))
    throw Error(ErrorCode::NotPseudoforest, "classify_p_switch needs a pseudoforest");
  if (!is_interchangeable(m, g))
    throw Error(ErrorCode::TrivialSwitch, "matrix is trivial for this graph");

  auto dec = decompose(g);
  auto in_cycle = [&](Edge e) {
    return std::binary_search(dec.cycles_edges.begin(),
                              dec.cycles_edges.end(), e);
  };
  Edge e1 = m.removed_first(), e2 = m.removed_second();
  if (in_cycle(e1) || in_cycle(e2)) return true;

  auto label = component_labels(g);
  auto parts = components(g);
  std::vector<int> part_edges(parts.size(), 0);
  for (const Edge& e : g.edges()) ++part_edges[label[e.u]];
  auto comp_unicyclic = [&](int i) {
    return part_edges[i] == static_cast<int>(parts[i].size());
  };

  int k1 = label[e1.u], k2 = label[e2.u];
  bool u1 = comp_unicyclic(k1), u2 = comp_unicyclic(k2);
  if (!u1 || !u2) return true;  // a tree-component edge is always safe

  if (k1 == k2) {
    // Both edges in Forest(U) of one unicyclic component U.  Let e be a
    // cycle edge distinct from the two added edges; then τ(U) = τ(U-e) + e.
    // τ(U-e) is a tree or a unicyclic graph ⊎ a tree, and re-adding e puts
    // a cycle in the piece holding the old cycle path.  τ(U) is a
    // pseudoforest iff that piece is still acyclic.
    Edge add1 = m.added_first(), add2 = m.added_second();
    Edge e{};
    bool found = false;
    for (const Edge& ce : dec.cycles_edges) {
      if (label[ce.u] != k1) continue;
      if (ce != add1 && ce != add2) {
        e = ce;
        found = true;
        break;
      }
    }
    if (!found) return true;  // triangle fully replaced cannot happen; safe
    Graph image = apply_switch(m, g.without_edge(e));
    auto ilabel = component_labels(image);
    if (ilabel[e.u] != ilabel[e.v]) return true;  // e reconnects two pieces
    // count edges of the piece containing e's endpoints
    int piece = ilabel[e.u];
    int piece_vertices = 0, piece_edges = 0;
    for (Vertex v = 1; v <= image.order(); ++v)
      if (ilabel[v] == piece) ++piece_vertices;
    for (const Edge& x : image.edges())
      if (ilabel[x.u] == piece) ++piece_edges;
    return piece_edges == piece_vertices - 1;
  }

  // Forest(U) x Forest(U') for two distinct unicyclic components: exactly
  // one orientation keeps every piece with at most one cycle; decide by
  // applying the switch to the two components alone.
  std::vector<Edge> sub;
  for (const Edge& e : g.edges())
    if (label[e.u] == k1 || label[e.u] == k2) sub.push_back(e);
  Graph two = Graph::unchecked(g.order(), std::move(sub));
  return is_pseudoforest(apply_switch(m, two));
}

// All canonical interchangeable matrices of G: for every unordered pair of
// vertex-disjoint edges {a,b} < {c,d}, the two orientations (a b; c d) and
// (a b; d c), filtered by interchangeability.
inline std::vector<SwitchMatrix> canonical_switches(const Graph& g) {
  std::vector<SwitchMatrix> out;
  const auto& es = g.edges();
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      const Edge &e1 = es[i], &e2 = es[j];
      if (e1.incident(e2.u) || e1.incident(e2.v)) continue;
      SwitchMatrix m1(e1.u, e1.v, e2.u, e2.v);
      SwitchMatrix m2(e1.u, e1.v, e2.v, e2.u);
      if (is_interchangeable(m1, g)) out.push_back(m1);
      if (is_interchangeable(m2, g)) out.push_back(m2);
    }
  }
  return out;
}

}  // namespace twoswitch
