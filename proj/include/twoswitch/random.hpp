#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "twoswitch/graph.hpp"
#include "twoswitch/switch.hpp"

namespace twoswitch {

// Uniform labeled tree on [n] via Prüfer decoding.
inline Graph random_tree(int n, std::mt19937& rng) {
  if (n <= 1) return Graph::unchecked(n, {});
  if (n == 2) return Graph::unchecked(2, {Edge(1, 2)});
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::vector<Vertex> prufer(n - 2);
  for (Vertex& x : prufer) x = pick(rng);
  std::vector<int> count(n + 1, 0);
  for (Vertex x : prufer) ++count[x];
  std::vector<Edge> edges;
  std::vector<bool> used(n + 1, false);
  for (Vertex x : prufer) {
    Vertex leaf = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!used[v] && count[v] == 0) {
        leaf = v;
        break;
      }
    }
    used[leaf] = true;
    edges.emplace_back(leaf, x);
    --count[x];
  }
  std::vector<Vertex> last;
  for (Vertex v = 1; v <= n; ++v)
    if (!used[v] && count[v] == 0) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Graph::unchecked(n, std::move(edges));
}

// Random tree plus one closing edge.
inline Graph random_unicyclic(int n, std::mt19937& rng) {
  if (n < 3)
    throw Error(ErrorCode::Precondition, "unicyclic graphs need n >= 3");
  Graph t = random_tree(n, rng);
  std::uniform_int_distribution<Vertex> pick(1, n);
  while (true) {
    Vertex u = pick(rng), v = pick(rng);
    if (u != v && !t.has_edge(u, v)) return t.with_edge(Edge(u, v));
  }
}

namespace detail {

// Random partition of a shuffled [n] into parts of size >= min_part.
inline std::vector<std::vector<Vertex>> random_partition(int n,
                                                         std::mt19937& rng,
                                                         int min_part) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<Vertex>> parts;
  int at = 0;
  while (at < n) {
    int remaining = n - at;
    int size = remaining;
    if (remaining >= 2 * min_part) {
      std::uniform_int_distribution<int> pick(min_part,
                                              remaining - min_part);
      size = pick(rng);
    }
    parts.emplace_back(order.begin() + at, order.begin() + at + size);
    at += size;
  }
  return parts;
}

// Build a component on the given labels from a template graph on [k].
inline void relabel_into(const Graph& tpl, const std::vector<Vertex>& labels,
                         std::vector<Edge>& edges) {
  for (const Edge& e : tpl.edges())
    edges.emplace_back(labels[e.u - 1], labels[e.v - 1]);
}

}  // namespace detail

// Pseudoforest with every component unicyclic (cycles = kappa).
inline Graph random_all_unicyclic_pseudoforest(int n, std::mt19937& rng) {
  if (n < 3)
    throw Error(ErrorCode::Precondition, "need n >= 3 for a cycle");
  auto parts = detail::random_partition(n, rng, 3);
  std::vector<Edge> edges;
  for (const auto& part : parts)
    detail::relabel_into(random_unicyclic(static_cast<int>(part.size()), rng),
                         part, edges);
  return Graph::unchecked(n, std::move(edges));
}

// Pseudoforest with at least one tree component carrying an edge
// (cycles < kappa and a forest edge available).
inline Graph random_mixed_pseudoforest(int n, std::mt19937& rng) {
  if (n < 5)
    throw Error(ErrorCode::Precondition,
                "need n >= 5 for a cycle plus a tree edge");
  auto parts = detail::random_partition(n, rng, 2);
  // first big-enough part becomes unicyclic (if any), one part stays a tree
  std::vector<Edge> edges;
  bool made_cycle = false, made_tree = false;
  std::bernoulli_distribution coin(0.5);
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    bool last_chance_tree = !made_tree && i + 1 == parts.size();
    bool want_cycle = part.size() >= 3 && !last_chance_tree &&
                      (!made_cycle || coin(rng));
    if (want_cycle) {
      detail::relabel_into(
          random_unicyclic(static_cast<int>(part.size()), rng), part, edges);
      made_cycle = true;
    } else {
      detail::relabel_into(random_tree(static_cast<int>(part.size()), rng),
                           part, edges);
      if (part.size() >= 2) made_tree = true;
    }
  }
  if (!made_cycle || !made_tree)
    return random_mixed_pseudoforest(n, rng);  // unlucky partition; redraw
  return Graph::unchecked(n, std::move(edges));
}

// General random pseudoforest: random mixture of trees and unicyclic
// components.
inline Graph random_pseudoforest(int n, std::mt19937& rng) {
  auto parts = detail::random_partition(n, rng, 1);
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(0.5);
  for (const auto& part : parts) {
    Graph tpl = (part.size() >= 3 && coin(rng))
                    ? random_unicyclic(static_cast<int>(part.size()), rng)
                    : random_tree(static_cast<int>(part.size()), rng);
    detail::relabel_into(tpl, part, edges);
  }
  return Graph::unchecked(n, std::move(edges));
}

// One uniform-ish random interchangeable matrix via rejection sampling.
inline SwitchMatrix random_interchangeable(const Graph& g, std::mt19937& rng,
                                           int max_tries = 1000) {
  if (g.size() < 2)
    throw Error(ErrorCode::NoWitness, "not enough edges for a 2-switch");
  std::uniform_int_distribution<int> pick_edge(0, g.size() - 1);
  std::bernoulli_distribution flip(0.5);
  for (int tries = 0; tries < max_tries; ++tries) {
    const Edge& e1 = g.edges()[pick_edge(rng)];
    const Edge& e2 = g.edges()[pick_edge(rng)];
    SwitchMatrix m = flip(rng) ? SwitchMatrix(e1.u, e1.v, e2.u, e2.v)
                               : SwitchMatrix(e1.u, e1.v, e2.v, e2.u);
    if (is_interchangeable(m, g)) return m;
  }
  throw Error(ErrorCode::NoWitness, "no interchangeable matrix found");
}

// Random walk by family-preserving switches; returns the endpoint.
inline Graph random_family_walk(Graph g, Family family, int steps,
                                std::mt19937& rng, int max_tries = 2000) {
  for (int i = 0; i < steps; ++i) {
    for (int tries = 0;; ++tries) {
      if (tries >= max_tries) return g;  // stuck; walk ends early
      SwitchMatrix m;
      try {
        m = random_interchangeable(g, rng, max_tries);
      } catch (const Error&) {
        return g;  // no nontrivial switch exists at all
      }
      Graph image = apply_switch(m, g);
      if (member_of(image, family)) {
        g = std::move(image);
        break;
      }
    }
  }
  return g;
}

}  // namespace twoswitch
