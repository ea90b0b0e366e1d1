#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoswitch/enumerate.hpp"
#include "twoswitch/switch.hpp"

namespace twoswitch {

enum class ParameterId {
  matching,
  independence,
  domination,
  path_cover,
  edge_cover,
  vertex_cover,
  chromatic,
  clique,
  components,
};

inline constexpr std::array<ParameterId, 9> kAllParameters = {
    ParameterId::matching,   ParameterId::independence,
    ParameterId::domination, ParameterId::path_cover,
    ParameterId::edge_cover, ParameterId::vertex_cover,
    ParameterId::chromatic,  ParameterId::clique,
    ParameterId::components,
};

inline const char* to_string(ParameterId p) {
  switch (p) {
    case ParameterId::matching: return "matching";
    case ParameterId::independence: return "independence";
    case ParameterId::domination: return "domination";
    case ParameterId::path_cover: return "path_cover";
    case ParameterId::edge_cover: return "edge_cover";
    case ParameterId::vertex_cover: return "vertex_cover";
    case ParameterId::chromatic: return "chromatic";
    case ParameterId::clique: return "clique";
    case ParameterId::components: return "components";
  }
  return "unknown";
}

inline std::optional<ParameterId> parse_parameter(const std::string& name) {
  for (ParameterId p : kAllParameters)
    if (name == to_string(p)) return p;
  return std::nullopt;
}

// Exact-only evaluation budget; beyond this the subset DPs blow up.
inline constexpr int kParameterBudget = 16;

namespace detail {

// neighbor bitmasks, vertex v -> bit (v-1)
inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
  std::vector<uint32_t> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u - 1] |= 1u << (e.v - 1);
    adj[e.v - 1] |= 1u << (e.u - 1);
  }
  return adj;
}

inline int max_matching(const Graph& g) {
  int n = g.order();
  auto adj = adjacency_masks(g);
  std::vector<int8_t> f(1u << n, 0);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int v = std::countr_zero(s);
    int best = f[s & (s - 1)];  // leave v unmatched
    uint32_t mates = adj[v] & s;
    while (mates) {
      int u = std::countr_zero(mates);
      mates &= mates - 1;
      best = std::max<int>(best, 1 + f[s & ~(1u << v) & ~(1u << u)]);
    }
    f[s] = static_cast<int8_t>(best);
  }
  return f[(1u << n) - 1];
}

inline int max_independent_set(const std::vector<uint32_t>& adj, int n) {
  std::vector<int8_t> f(1u << n, 0);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int v = std::countr_zero(s);
    int skip = f[s & (s - 1)];
    int take = 1 + f[s & ~(1u << v) & ~adj[v]];
    f[s] = static_cast<int8_t>(std::max(skip, take));
  }
  return f[(1u << n) - 1];
}

inline int min_vertex_cover(const Graph& g) {
  int n = g.order();
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = n;
  for (uint32_t s = 0; s <= full; ++s) {
    if (static_cast<int>(std::popcount(s)) >= best) continue;
    bool covers = true;
    for (const Edge& e : g.edges()) {
      if (!(s & (1u << (e.u - 1))) && !(s & (1u << (e.v - 1)))) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::popcount(s);
  }
  return best;
}

inline int min_dominating_set(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  auto adj = adjacency_masks(g);
  std::vector<uint32_t> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = adj[v] | (1u << v);
  uint32_t full = (1u << n) - 1;
  int best = n;
  for (uint32_t s = 0; s <= full; ++s) {
    if (static_cast<int>(std::popcount(s)) >= best) continue;
    uint32_t dominated = 0;
    uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      dominated |= closed[v];
    }
    if (dominated == full) best = std::popcount(s);
  }
  return best;
}

inline int min_edge_cover(const Graph& g) {
  int n = g.order();
  auto d = degree_function(g);
  for (Vertex v = 1; v <= n; ++v)
    if (d[v] == 0)
      throw Error(ErrorCode::UndefinedParameter,
                  "edge cover undefined with isolated vertex " +
                      std::to_string(v));
  auto adj = adjacency_masks(g);
  constexpr int kInf = 64;
  std::vector<int8_t> f(1u << n, 0);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int v = std::countr_zero(s);
    int best = kInf;
    uint32_t mates = adj[v];
    while (mates) {
      int u = std::countr_zero(mates);
      mates &= mates - 1;
      best = std::min<int>(best, 1 + f[s & ~(1u << v) & ~(1u << u)]);
    }
    f[s] = static_cast<int8_t>(best);
  }
  return f[(1u << n) - 1];
}

inline bool k_colorable(const std::vector<uint32_t>& adj, int n, int k) {
  std::vector<int> color(n, -1);
  // colors assigned in vertex order; new colors introduced in order
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      uint32_t nb = adj[v] & ((1u << v) - 1);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline int chromatic_number(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  auto adj = adjacency_masks(g);
  for (int k = 2; k <= n; ++k)
    if (k_colorable(adj, n, k)) return k;
  return n;
}

// Minimum number of vertex-disjoint paths covering all vertices; a single
// vertex counts as a (trivial) path.
inline int min_path_cover(const Graph& g) {
  int n = g.order();
  if (n == 0) return 0;
  auto adj = adjacency_masks(g);
  uint32_t full = (1u << n) - 1;
  // ends[s] = endpoints v such that some path visits exactly s and ends at v
  std::vector<uint32_t> ends(1u << n, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (uint32_t s = 1; s <= full; ++s) {
    uint32_t es = ends[s];
    while (es) {
      int v = std::countr_zero(es);
      es &= es - 1;
      uint32_t nexts = adj[v] & ~s;
      while (nexts) {
        int u = std::countr_zero(nexts);
        nexts &= nexts - 1;
        ends[s | (1u << u)] |= 1u << u;
      }
    }
  }
  constexpr int8_t kInf = 64;
  std::vector<int8_t> f(1u << n, kInf);
  f[0] = 0;
  for (uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    // enumerate submasks of s containing v that form a single path
    uint32_t rest = s & ~(1u << v);
    for (uint32_t t = rest;; t = (t - 1) & rest) {
      uint32_t piece = t | (1u << v);
      if (ends[piece] != 0 && f[s & ~piece] + 1 < f[s])
        f[s] = static_cast<int8_t>(f[s & ~piece] + 1);
      if (t == 0) break;
    }
  }
  return f[full];
}

}  // namespace detail

inline int evaluate(ParameterId p, const Graph& g) {
  if (g.order() > kParameterBudget)
    throw Error(ErrorCode::BudgetExceeded,
                "exact evaluation limited to n <= " +
                    std::to_string(kParameterBudget));
  int n = g.order();
  switch (p) {
    case ParameterId::matching:
      return detail::max_matching(g);
    case ParameterId::independence:
      return detail::max_independent_set(detail::adjacency_masks(g), n);
    case ParameterId::domination:
      return detail::min_dominating_set(g);
    case ParameterId::path_cover:
      return detail::min_path_cover(g);
    case ParameterId::edge_cover:
      return detail::min_edge_cover(g);
    case ParameterId::vertex_cover:
      return detail::min_vertex_cover(g);
    case ParameterId::chromatic:
      return detail::chromatic_number(g);
    case ParameterId::clique: {
      auto adj = detail::adjacency_masks(g);
      uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
      std::vector<uint32_t> co(n);
      for (int v = 0; v < n; ++v) co[v] = full & ~adj[v] & ~(1u << v);
      return detail::max_independent_set(co, n);
    }
    case ParameterId::components:
      return kappa(g);
  }
  throw Error(ErrorCode::UndefinedParameter, "unknown parameter");
}

// |ξ(τ(G)) − ξ(G)| ≤ 1 — expected to hold for every stable parameter.
inline bool stability_check(ParameterId p, const Graph& g,
                            const SwitchMatrix& m) {
  int before = evaluate(p, g);
  int after = evaluate(p, apply_switch(m, g));
  return std::abs(after - before) <= 1;
}

// Realized values of a parameter over every member of 𝒰(s) or 𝒫(s).
struct IntervalReport {
  ParameterId parameter = ParameterId::matching;
  Family family = Family::unicyclic;
  DegreeFunction degrees;
  int min = 0;
  int max = 0;
  std::vector<int> realized;          // sorted distinct values
  std::map<int, Graph> witnesses;     // value -> one realizing member

  bool contiguous() const {
    for (size_t i = 1; i < realized.size(); ++i)
      if (realized[i] != realized[i - 1] + 1) return false;
    return true;
  }
};

inline IntervalReport interval_report(ParameterId p, const DegreeFunction& s,
                                      Family family, int max_n = 0) {
  auto members = enumerate_family(s, family, max_n);
  if (members.empty())
    throw Error(ErrorCode::EmptyFamily,
                "no member of the family realizes this degree function");
  IntervalReport rep;
  rep.parameter = p;
  rep.family = family;
  rep.degrees = s;
  for (const Graph& g : members) {
    int value = evaluate(p, g);
    if (!rep.witnesses.contains(value)) rep.witnesses.emplace(value, g);
  }
  for (const auto& [value, g] : rep.witnesses) rep.realized.push_back(value);
  rep.min = rep.realized.front();
  rep.max = rep.realized.back();
  return rep;
}

}  // namespace twoswitch
