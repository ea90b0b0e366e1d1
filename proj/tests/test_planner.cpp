#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "twoswitch/enumerate.hpp"
#include "twoswitch/planner.hpp"
#include "twoswitch/random.hpp"

using namespace twoswitch;

namespace {

Graph tadpole() {
  return build_graph(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}});
}

Graph c5() {
  return build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
}

void check_transition(const SwitchSequence& seq, const Graph& target) {
  auto rep = verify_sequence(seq);
  CHECK(rep.ok);
  CHECK(rep.final_graph == target);
}

}  // namespace

TEST_CASE("forest_transition on equal forests is empty") {
  Graph f = build_graph(4, {{1, 2}, {3, 4}});
  auto seq = forest_transition(f, f);
  CHECK(seq.steps.empty());
  check_transition(seq, f);
}

TEST_CASE("forest_transition between two labeled paths") {
  Graph a = build_graph(4, {{1, 2}, {2, 3}, {3, 4}});  // path 1-2-3-4
  Graph b = build_graph(4, {{1, 3}, {3, 2}, {2, 4}});  // path 1-3-2-4
  auto seq = forest_transition(a, b);
  CHECK(seq.family == Family::tree);
  CHECK(!seq.steps.empty());
  check_transition(seq, b);
}

TEST_CASE("forest_transition on random tree pairs") {
  std::mt19937 rng(41);
  for (int i = 0; i < 100; ++i) {
    int n = 3 + i % 38;
    Graph a = random_tree(n, rng);
    Graph b = random_family_walk(a, Family::tree, 6, rng);
    auto seq = forest_transition(a, b);
    check_transition(seq, b);
  }
}

TEST_CASE("forest_transition on random forest pairs") {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    auto parts = 0;
    (void)parts;
    Graph a = random_pseudoforest(12, rng);
    if (cycles_count(a) != 0) continue;
    Graph b = random_family_walk(a, Family::forest, 5, rng);
    auto seq = forest_transition(a, b);
    check_transition(seq, b);
  }
}

TEST_CASE("leaf_move returns the smallest valid witness") {
  SwitchMatrix m = leaf_move(tadpole(), 5, 1);
  CHECK(m == SwitchMatrix(5, 4, 1, 2));
  Graph img = apply_switch(m, tadpole());
  CHECK(is_unicyclic(img));
  CHECK(img.has_edge(5, 1));
}

TEST_CASE("leaf_move precondition checks") {
  Graph u = build_graph(6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {4, 6}});
  try {
    leaf_move(u, 5, 6);  // deg(6) = 1 < 2
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  try {
    leaf_move(tadpole(), 5, 4);  // target is the leaf's neighbor
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  Graph adj = build_graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}});
  try {
    leaf_move(adj, 4, 1);  // already adjacent
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
}

TEST_CASE("cycle_shared_edge") {
  SwitchMatrix m = cycle_shared_edge(c5(), 1, 3);
  CHECK(m == SwitchMatrix(1, 2, 3, 4));
  Graph img = apply_switch(m, c5());
  CHECK(is_cycle_graph(img));
  CHECK(img.has_edge(1, 3));

  Graph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  Graph img4 = apply_switch(cycle_shared_edge(c4, 1, 3), c4);
  CHECK(is_cycle_graph(img4));
  CHECK(img4.has_edge(1, 3));

  try {
    cycle_shared_edge(c5(), 1, 2);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Adjacent);
  }
}

TEST_CASE("cycle_transition keeps every intermediate a cycle") {
  auto seq = cycle_transition(c5(), c5());
  CHECK(seq.steps.empty());

  Graph other = build_graph(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
  auto seq2 = cycle_transition(c5(), other);
  Graph cur = c5();
  for (const SwitchMatrix& m : seq2.steps) {
    CHECK(is_interchangeable(m, cur));
    cur = apply_switch(m, cur);
    CHECK(is_cycle_graph(cur));
  }
  CHECK(cur == other);
}

TEST_CASE("cycle_transition over all labeled 4-cycles") {
  DegreeFunction s;
  s.deg = {0, 2, 2, 2, 2};
  auto cycles = enumerate_family(s, Family::cycle);
  REQUIRE(cycles.size() == 3);
  for (const Graph& a : cycles) {
    for (const Graph& b : cycles) {
      auto seq = cycle_transition(a, b);
      Graph cur = a;
      for (const SwitchMatrix& m : seq.steps) {
        cur = apply_switch(m, cur);
        CHECK(is_cycle_graph(cur));
      }
      CHECK(cur == b);
    }
  }
}

TEST_CASE("make_shared_leaf across a small family") {
  DegreeFunction s;
  s.deg = {0, 3, 2, 2, 2, 2, 1};
  auto members = enumerate_family(s, Family::unicyclic);
  REQUIRE(!members.empty());
  auto shares_leaf = [](const Graph& a, const Graph& b) {
    auto d = degree_function(a);
    for (Vertex v = 1; v <= a.order(); ++v)
      if (d[v] == 1 && detail::sole_neighbor(a, v) == detail::sole_neighbor(b, v))
        return true;
    return false;
  };
  int checked = 0;
  for (const Graph& a : members) {
    for (const Graph& b : members) {
      if (shares_leaf(a, b)) continue;
      auto [side, m] = make_shared_leaf(a, b);
      Graph a2 = a, b2 = b;
      if (side == Side::first)
        a2 = apply_switch(m, a);
      else
        b2 = apply_switch(m, b);
      CHECK(is_unicyclic(a2));
      CHECK(is_unicyclic(b2));
      CHECK(shares_leaf(a2, b2));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("make_shared_leaf error cases") {
  Graph u = build_graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}});
  try {
    make_shared_leaf(u, u);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlreadyShared);
  }
  Graph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  try {
    make_shared_leaf(c4, c4);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsCycle);
  }
}

TEST_CASE("unicyclic_transition on equal graphs is empty") {
  auto seq = unicyclic_transition(tadpole(), tadpole());
  CHECK(seq.steps.empty());
}

TEST_CASE("unicyclic_transition exhaustively at n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    // all degree functions with sum 2n and positive entries
    std::vector<int> d(n + 1, 1);
    auto rec = [&](auto&& self, int v, int left) -> void {
      if (v == n) {
        if (left < 1 || left > n - 1) return;
        d[n] = left;
        DegreeFunction s;
        s.deg = d;
        s.deg[0] = 0;
        auto members = enumerate_family(s, Family::unicyclic);
        for (const Graph& a : members)
          for (const Graph& b : members) {
            auto seq = unicyclic_transition(a, b);
            auto rep = verify_sequence(seq);
            CHECK(rep.ok);
            CHECK(rep.final_graph == b);
          }
        return;
      }
      for (int x = 1; x <= n - 1 && x <= left - (n - v); ++x) {
        d[v] = x;
        self(self, v + 1, left - x);
      }
    };
    rec(rec, 1, 2 * n);
  }
}

TEST_CASE("unicyclic_transition on random pairs") {
  std::mt19937 rng(47);
  for (int i = 0; i < 50; ++i) {
    Graph a = random_unicyclic(14, rng);
    Graph b = random_family_walk(a, Family::unicyclic, 8, rng);
    auto seq = unicyclic_transition(a, b);
    check_transition(seq, b);
  }
}

TEST_CASE("glue_to_unicyclic on two triangles") {
  Graph g = build_graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
  auto seq = glue_to_unicyclic(g);
  CHECK(seq.steps.size() == 1);
  auto rep = verify_sequence(seq);
  CHECK(rep.ok);
  CHECK(is_unicyclic(rep.final_graph));

  Graph u = build_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(glue_to_unicyclic(u).steps.empty());
}

TEST_CASE("glue_to_unicyclic emits kappa - 1 steps, each merging two parts") {
  std::mt19937 rng(53);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_all_unicyclic_pseudoforest(6 + i % 20, rng);
    auto seq = glue_to_unicyclic(g);
    CHECK(static_cast<int>(seq.steps.size()) == kappa(g) - 1);
    Graph cur = g;
    for (const SwitchMatrix& m : seq.steps) {
      Graph next = apply_switch(m, cur);
      CHECK(kappa(next) == kappa(cur) - 1);
      CHECK(is_pseudoforest(next));
      cur = next;
    }
    CHECK(is_unicyclic(cur));
  }
}

TEST_CASE("glue_to_unicyclic rejects graphs with tree components") {
  Graph g = build_graph(5, {{1, 2}, {2, 3}, {3, 1}, {4, 5}});
  try {
    glue_to_unicyclic(g);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZetaPositive);
  }
}

TEST_CASE("break_to_forest on triangle plus an edge") {
  Graph g = build_graph(5, {{1, 2}, {2, 3}, {3, 1}, {4, 5}});
  auto seq = break_to_forest(g);
  CHECK(seq.steps.size() == 1);
  auto rep = verify_sequence(seq);
  CHECK(rep.ok);
  CHECK(cycles_count(rep.final_graph) == 0);

  Graph f = build_graph(4, {{1, 2}, {3, 4}});
  CHECK(break_to_forest(f).steps.empty());
}

TEST_CASE("break_to_forest reduces cycles to zero on random inputs") {
  std::mt19937 rng(59);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_mixed_pseudoforest(6 + i % 20, rng);
    auto seq = break_to_forest(g);
    auto rep = verify_sequence(seq);
    CHECK(rep.ok);
    CHECK(cycles_count(rep.final_graph) == 0);
    CHECK(zeta(rep.final_graph) == zeta(g));
  }
}

TEST_CASE("break_to_forest rejects all-unicyclic inputs") {
  Graph g = build_graph(3, {{1, 2}, {2, 3}, {3, 1}});
  try {
    break_to_forest(g);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZetaZero);
  }
}

TEST_CASE("pseudoforest_transition exhaustively at n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> d(n + 1, 0);
    auto rec = [&](auto&& self, int v) -> void {
      if (v > n) {
        int sum = 0;
        for (int x : d) sum += x;
        if (sum % 2 != 0 || sum > 2 * n) return;
        DegreeFunction s;
        s.deg = d;
        auto members = enumerate_family(s, Family::pseudoforest);
        for (const Graph& a : members)
          for (const Graph& b : members) {
            auto seq = pseudoforest_transition(a, b);
            auto rep = verify_sequence(seq);
            CHECK(rep.ok);
            CHECK(rep.final_graph == b);
          }
        return;
      }
      for (int x = 0; x <= n - 1; ++x) {
        d[v] = x;
        self(self, v + 1);
      }
    };
    rec(rec, 1);
  }
}

TEST_CASE("pseudoforest_transition on random pairs in both regimes") {
  std::mt19937 rng(61);
  for (int i = 0; i < 40; ++i) {
    Graph a = (i % 2 == 0) ? random_all_unicyclic_pseudoforest(12, rng)
                           : random_mixed_pseudoforest(12, rng);
    Graph b = random_family_walk(a, Family::pseudoforest, 6, rng);
    auto seq = pseudoforest_transition(a, b);
    check_transition(seq, b);
  }
}

TEST_CASE("verify_sequence flags a corrupted step") {
  Graph c6 = build_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
  SwitchSequence seq;
  seq.start = c6;
  seq.family = Family::unicyclic;
  seq.steps = {SwitchMatrix(1, 2, 5, 4)};  // breaker: image leaves the family
  auto rep = verify_sequence(seq);
  CHECK(!rep.ok);
  CHECK(rep.violation_index == 0);

  SwitchSequence empty;
  empty.start = c6;
  empty.family = Family::unicyclic;
  auto rep2 = verify_sequence(empty);
  CHECK(rep2.ok);
  CHECK(rep2.final_graph == c6);
}

TEST_CASE("reverse_inverted undoes a valid sequence") {
  std::mt19937 rng(67);
  for (int i = 0; i < 30; ++i) {
    Graph a = random_unicyclic(10, rng);
    Graph b = random_family_walk(a, Family::unicyclic, 5, rng);
    auto seq = unicyclic_transition(a, b);
    SwitchSequence back;
    back.start = b;
    back.family = Family::unicyclic;
    back.steps = reverse_inverted(seq.steps);
    auto rep = verify_sequence(back);
    CHECK(rep.ok);
    CHECK(rep.final_graph == a);
  }
}
