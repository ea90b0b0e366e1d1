// Acceptance suite: each criterion prints one PASS/FAIL line.
// Usage: acceptance [criterion-number ...]; no arguments runs all nine.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "twoswitch/enumerate.hpp"
#include "twoswitch/io.hpp"
#include "twoswitch/parameters.hpp"
#include "twoswitch/planner.hpp"
#include "twoswitch/random.hpp"

using namespace twoswitch;

namespace {

// all degree functions on [n] with every degree in [lo, n-1] and the given sum
void for_each_degree_function(int n, int lo, int sum,
                              const std::function<void(const DegreeFunction&)>& fn) {
  std::vector<int> d(n + 1, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v > n) {
      if (left == 0) {
        DegreeFunction s;
        s.deg = d;
        fn(s);
      }
      return;
    }
    int remaining = n - v;  // slots after v
    for (int x = lo; x <= n - 1 && x <= left - lo * remaining; ++x) {
      d[v] = x;
      self(self, v + 1, left - x);
    }
  };
  rec(rec, 1, sum);
}

bool has_isolated(const DegreeFunction& d) {
  for (int v = 1; v <= d.n(); ++v)
    if (d[v] == 0) return true;
  return false;
}

Graph random_simple_graph(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> prob(0.15, 0.6);
  std::bernoulli_distribution coin(prob(rng));
  std::vector<Edge> es;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph::unchecked(n, std::move(es));
}

bool criterion1() {
  long long checked = 0;
  for (int n = 3; n <= 7; ++n) {
    bool ok = true;
    for_each_degree_function(n, 1, 2 * n, [&](const DegreeFunction& s) {
      for (const Graph& g : enumerate_with_degrees(s)) {
        if (!is_unicyclic(g)) continue;
        for (const SwitchMatrix& m : canonical_switches(g)) {
          bool fast = classify_u_switch(m, g);
          bool direct = is_unicyclic(apply_switch(m, g));
          if (fast != direct) ok = false;
          ++checked;
        }
      }
    });
    if (!ok) return false;
  }
  std::printf("  (%lld unicyclic switch cases compared)\n", checked);
  return checked > 0;
}

bool criterion2() {
  long long checked = 0;
  for (int n = 2; n <= 6; ++n) {
    bool ok = true;
    for (int sum = 0; sum <= 2 * n; sum += 2) {
      for_each_degree_function(n, 0, sum, [&](const DegreeFunction& s) {
        for (const Graph& g : enumerate_with_degrees(s)) {
          if (!is_pseudoforest(g)) continue;
          for (const SwitchMatrix& m : canonical_switches(g)) {
            bool fast = classify_p_switch(m, g);
            bool direct = is_pseudoforest(apply_switch(m, g));
            if (fast != direct) ok = false;
            ++checked;
          }
        }
      });
    }
    if (!ok) return false;
  }
  std::printf("  (%lld pseudoforest switch cases compared)\n", checked);
  return checked > 0;
}

// connectivity + planner validity over every ordered pair of family members
bool family_transition_criterion(Family family, int max_n) {
  long long pairs = 0, families = 0;
  auto plan = family == Family::unicyclic ? unicyclic_transition
                                          : pseudoforest_transition;
  for (int n = (family == Family::unicyclic ? 3 : 2); n <= max_n; ++n) {
    bool ok = true;
    int lo = family == Family::unicyclic ? 1 : 0;
    for (int sum = (family == Family::unicyclic ? 2 * n : 0);
         sum <= 2 * n; sum += 2) {
      for_each_degree_function(n, lo, sum, [&](const DegreeFunction& s) {
        std::vector<Graph> members;
        for (Graph& g : enumerate_with_degrees(s))
          if (member_of(g, family)) members.push_back(std::move(g));
        if (members.empty()) return;
        ++families;
        auto m = build_metagraph_from_nodes(members, family);
        if (!is_berge_connected(m)) {
          ok = false;
          return;
        }
        for (const Graph& a : m.nodes) {
          for (const Graph& b : m.nodes) {
            auto seq = plan(a, b);
            auto rep = verify_sequence(seq);
            if (!rep.ok || rep.final_graph != b) {
              ok = false;
              return;
            }
            ++pairs;
          }
        }
      });
      if (family == Family::unicyclic) break;  // sum fixed at 2n
    }
    if (!ok) return false;
  }
  std::printf("  (%lld families connected, %lld ordered pairs planned)\n",
              families, pairs);
  return families > 0;
}

bool criterion3() { return family_transition_criterion(Family::unicyclic, 7); }

bool criterion4() {
  return family_transition_criterion(Family::pseudoforest, 6);
}

// parameter values of one graph; edge_cover slot is -1 when undefined
using ParamValues = std::array<int, 9>;

ParamValues all_params(const Graph& g) {
  ParamValues out{};
  for (size_t i = 0; i < kAllParameters.size(); ++i) {
    ParameterId p = kAllParameters[i];
    if (p == ParameterId::edge_cover && has_isolated(degree_function(g))) {
      out[i] = -1;
      continue;
    }
    out[i] = evaluate(p, g);
  }
  return out;
}

bool stable(const ParamValues& a, const ParamValues& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) continue;  // undefined on both sides
    if (std::abs(a[i] - b[i]) > 1) return false;
  }
  return true;
}

bool criterion5() {
  long long checked = 0;
  // exhaustive at n <= 6 with a per-mask parameter table
  for (int n = 2; n <= 6; ++n) {
    std::vector<Edge> all;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    int m = static_cast<int>(all.size());
    auto edge_bit = [&](Edge e) {
      for (int i = 0; i < m; ++i)
        if (all[i] == e) return i;
      return -1;
    };
    std::vector<ParamValues> table(1u << m);
    std::vector<Graph> graphs(1u << m);
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> es;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) es.push_back(all[i]);
      graphs[mask] = Graph::unchecked(n, std::move(es));
      table[mask] = all_params(graphs[mask]);
    }
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      for (const SwitchMatrix& sw : canonical_switches(graphs[mask])) {
        uint32_t image = mask;
        image &= ~(1u << edge_bit(sw.removed_first()));
        image &= ~(1u << edge_bit(sw.removed_second()));
        image |= 1u << edge_bit(sw.added_first());
        image |= 1u << edge_bit(sw.added_second());
        if (!stable(table[mask], table[image])) return false;
        ++checked;
      }
    }
  }
  // random spot checks up to n = 12
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> pickn(4, 12);
  int done = 0;
  while (done < 10000) {
    Graph g = random_simple_graph(pickn(rng), rng);
    if (g.size() < 2) continue;
    SwitchMatrix m;
    try {
      m = random_interchangeable(g, rng, 200);
    } catch (const Error&) {
      continue;
    }
    if (!stable(all_params(g), all_params(apply_switch(m, g)))) return false;
    ++done;
  }
  std::printf("  (%lld exhaustive cases, %d random cases)\n", checked, done);
  return true;
}

bool interval_criterion(Family family, int max_n) {
  long long reports = 0;
  for (int n = (family == Family::unicyclic ? 3 : 2); n <= max_n; ++n) {
    bool ok = true;
    int lo = family == Family::unicyclic ? 1 : 0;
    for (int sum = (family == Family::unicyclic ? 2 * n : 0);
         sum <= 2 * n; sum += 2) {
      for_each_degree_function(n, lo, sum, [&](const DegreeFunction& s) {
        std::vector<Graph> members;
        for (Graph& g : enumerate_with_degrees(s))
          if (member_of(g, family)) members.push_back(std::move(g));
        if (members.empty()) return;
        bool skip_edge_cover = has_isolated(s);
        std::array<std::vector<bool>, 9> seen;
        std::array<int, 9> lo_v, hi_v;
        lo_v.fill(1 << 20);
        hi_v.fill(-1);
        for (auto& v : seen) v.assign(2 * s.n() + 2, false);
        for (const Graph& g : members) {
          for (size_t i = 0; i < kAllParameters.size(); ++i) {
            if (kAllParameters[i] == ParameterId::edge_cover &&
                skip_edge_cover)
              continue;
            int value = evaluate(kAllParameters[i], g);
            seen[i][value] = true;
            lo_v[i] = std::min(lo_v[i], value);
            hi_v[i] = std::max(hi_v[i], value);
          }
        }
        for (size_t i = 0; i < kAllParameters.size(); ++i) {
          if (hi_v[i] < 0) continue;
          for (int v = lo_v[i]; v <= hi_v[i]; ++v)
            if (!seen[i][v]) ok = false;
          ++reports;
        }
      });
      if (family == Family::unicyclic) break;
    }
    if (!ok) return false;
  }
  std::printf("  (%lld parameter/family intervals checked)\n", reports);
  return reports > 0;
}

bool criterion6() {
  return interval_criterion(Family::unicyclic, 7) &&
         interval_criterion(Family::pseudoforest, 6);
}

bool criterion7() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> pickn(1, 50);
  for (int i = 0; i < 10000; ++i) {
    Graph g = random_pseudoforest(pickn(rng), rng);
    if (g.size() + kappa(g) != g.order() + cycles_count(g)) return false;
  }
  // zeta is constant across all members of each enumerable family
  for (int n = 1; n <= 6; ++n) {
    bool ok = true;
    for (int sum = 0; sum <= 2 * n; sum += 2) {
      for_each_degree_function(n, 0, sum, [&](const DegreeFunction& s) {
        int z = -1;
        for (const Graph& g : enumerate_with_degrees(s)) {
          if (!is_pseudoforest(g)) continue;
          if (z == -1)
            z = zeta(g);
          else if (zeta(g) != z)
            ok = false;
        }
      });
    }
    if (!ok) return false;
  }
  std::printf("  (10000 random identities, zeta constancy up to n = 6)\n");
  return true;
}

bool criterion8() {
  std::mt19937 rng(99991);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    Graph a = random_unicyclic(40, rng);
    Graph b = random_family_walk(a, Family::unicyclic, 25, rng);
    auto t0 = std::chrono::steady_clock::now();
    auto seq = unicyclic_transition(a, b);
    auto rep = verify_sequence(seq);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    worst = std::max(worst, secs);
    if (!rep.ok || rep.final_graph != b || secs >= 1.0) return false;
  }
  std::printf("  (1000 pairs at n = 40, worst case %.3f s)\n", worst);
  return true;
}

bool criterion9() {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> pickn(6, 40);
  for (int i = 0; i < 1000; ++i) {
    Graph g = random_all_unicyclic_pseudoforest(pickn(rng), rng);
    auto seq = glue_to_unicyclic(g);
    auto rep = verify_sequence(seq);
    if (static_cast<int>(seq.steps.size()) != kappa(g) - 1 || !rep.ok ||
        !is_unicyclic(rep.final_graph))
      return false;
  }
  for (int i = 0; i < 1000; ++i) {
    Graph g = random_mixed_pseudoforest(pickn(rng), rng);
    auto seq = break_to_forest(g);
    auto rep = verify_sequence(seq);
    if (!rep.ok || cycles_count(rep.final_graph) != 0) return false;
  }
  std::printf("  (1000 glue runs, 1000 break runs)\n");
  return true;
}

struct Criterion {
  int number;
  const char* name;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "u-switch characterization vs direct classification", criterion1},
    {2, "p-switch characterization vs direct classification", criterion2},
    {3, "unicyclic family connectivity and planner validity", criterion3},
    {4, "pseudoforest family connectivity and planner validity", criterion4},
    {5, "parameter stability under every switch", criterion5},
    {6, "realized parameter values form intervals", criterion6},
    {7, "size-component count identity and zeta constancy", criterion7},
    {8, "planner scale check at n = 40", criterion8},
    {9, "glue step count and break acyclicity", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), c.number) == wanted.end())
      continue;
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("  (exception: %s)\n", e.what());
      ok = false;
    }
    std::printf("criterion %d (%s): %s\n", c.number, c.name,
                ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
