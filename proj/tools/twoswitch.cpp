// Command-line front end: classify graphs, apply and plan 2-switches,
// verify sequences, enumerate families, and run stability spot checks.
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "twoswitch/io.hpp"
#include "twoswitch/parameters.hpp"
#include "twoswitch/planner.hpp"
#include "twoswitch/random.hpp"

using namespace twoswitch;

namespace {

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  return j;
}

Family family_flag(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw Error(ErrorCode::ParseError, "unknown family: " + name);
  return *f;
}

int run(int argc, char** argv) {
  CLI::App app{"2-switch calculus on unicyclic graphs and pseudoforests"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string graph_path, graph2_path, matrix_text, family_name = "u";
  std::string degrees_text, param_name, sequence_path, target_path, dot_path;
  int max_n = 6, samples = 1000;
  unsigned seed = 1;

  auto* classify = app.add_subcommand("classify", "classify a graph's family");
  classify->add_option("graph", graph_path, "edge-list file")->required();

  auto* sw = app.add_subcommand("switch", "apply one 2-switch");
  sw->add_option("graph", graph_path, "edge-list file")->required();
  sw->add_option("--matrix", matrix_text, "action matrix \"a b / c d\"")
      ->required();

  auto* plan = app.add_subcommand("plan", "plan a switch sequence");
  plan->add_option("--family", family_name, "u|p|t|f")->required();
  plan->add_option("from", graph_path, "source edge-list file")->required();
  plan->add_option("to", graph2_path, "target edge-list file")->required();

  auto* verify = app.add_subcommand("verify", "replay a sequence JSON file");
  verify->add_option("sequence", sequence_path, "sequence JSON file")
      ->required();
  verify->add_option("--target", target_path,
                     "edge-list file the final graph must equal");

  auto* enumerate = app.add_subcommand("enumerate",
                                       "list family members by degrees");
  enumerate->add_option("--family", family_name, "u|p|t|f")->required();
  enumerate->add_option("--degrees", degrees_text, "\"d1,...,dn\"")
      ->required();

  auto* metagraph = app.add_subcommand(
      "metagraph", "family metagraph under single switches");
  metagraph->add_option("--family", family_name, "u|p|t|f")->required();
  metagraph->add_option("--degrees", degrees_text, "\"d1,...,dn\"")
      ->required();
  metagraph->add_option("--dot", dot_path, "write DOT rendering here");

  auto* interval = app.add_subcommand("interval",
                                      "realized parameter values over a family");
  interval->add_option("--param", param_name, "parameter name")->required();
  interval->add_option("--family", family_name, "u|p|t|f")->required();
  interval->add_option("--degrees", degrees_text, "\"d1,...,dn\"")
      ->required();

  auto* stability = app.add_subcommand(
      "stability", "random stability spot checks for all parameters");
  stability->add_option("--max-n", max_n, "largest graph order")
      ->check(CLI::Range(2, 16));
  stability->add_option("--samples", samples, "number of random cases");
  stability->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*classify) {
    Graph g = load_graph(graph_path);
    Family f = classify_family(g);
    if (as_json) {
      json out{{"family", to_string(f)},
               {"order", g.order()},
               {"size", g.size()},
               {"components", kappa(g)}};
      if (is_pseudoforest(g)) {
        out["cycles"] = cycles_count(g);
        out["zeta"] = zeta(g);
      }
      std::cout << out.dump() << "\n";
    } else {
      std::cout << to_string(f) << "\n";
    }
    return 0;
  }

  if (*sw) {
    Graph g = load_graph(graph_path);
    SwitchMatrix m = parse_matrix(matrix_text);
    Graph image = apply_switch(m, g);
    if (as_json) {
      json out{{"matrix", matrix_to_json(m)},
               {"interchangeable", is_interchangeable(m, g)},
               {"image", graph_to_json(image)}};
      std::cout << out.dump() << "\n";
    } else {
      if (!is_interchangeable(m, g))
        std::cout << "# trivial matrix; graph unchanged\n";
      std::cout << format_edge_list(image);
    }
    return 0;
  }

  if (*plan) {
    Graph a = load_graph(graph_path);
    Graph b = load_graph(graph2_path);
    Family f = family_flag(family_name);
    SwitchSequence seq;
    switch (f) {
      case Family::tree:
      case Family::forest:
        seq = forest_transition(a, b);
        break;
      case Family::cycle:
        seq = cycle_transition(a, b);
        break;
      case Family::unicyclic:
        seq = unicyclic_transition(a, b);
        break;
      case Family::pseudoforest:
        seq = pseudoforest_transition(a, b);
        break;
      default:
        throw Error(ErrorCode::ParseError, "family must be one of u, p, t, f");
    }
    std::cout << sequence_to_json(seq).dump() << "\n";
    return 0;
  }

  if (*verify) {
    SwitchSequence seq = sequence_from_json(load_json(sequence_path));
    auto rep = verify_sequence(seq);
    bool matches = true;
    if (rep.ok && !target_path.empty())
      matches = rep.final_graph == load_graph(target_path);
    if (as_json) {
      json out{{"ok", rep.ok && matches},
               {"steps", seq.steps.size()},
               {"final", graph_to_json(rep.final_graph)}};
      if (!rep.ok) {
        out["violation_index"] = rep.violation_index;
        out["message"] = rep.message;
      } else if (!matches) {
        out["message"] = "final graph differs from the target";
      }
      std::cout << out.dump() << "\n";
    } else if (rep.ok && matches) {
      std::cout << "OK, " << seq.steps.size() << " steps, final matches target\n";
    } else if (!rep.ok) {
      std::cout << "FAIL at step " << rep.violation_index << ": "
                << rep.message << "\n";
    } else {
      std::cout << "FAIL: final graph differs from the target\n";
    }
    return (rep.ok && matches) ? 0 : 1;
  }

  if (*enumerate) {
    auto members = enumerate_family(parse_degree_list(degrees_text),
                                    family_flag(family_name));
    if (as_json) {
      json out = json::array();
      for (const Graph& g : members) out.push_back(graph_to_json(g));
      std::cout << json{{"count", members.size()}, {"members", out}}.dump()
                << "\n";
    } else {
      std::cout << members.size() << " graphs\n";
      for (const Graph& g : members) std::cout << format_edge_list(g) << "\n";
    }
    return 0;
  }

  if (*metagraph) {
    auto m = build_metagraph(parse_degree_list(degrees_text),
                             family_flag(family_name));
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      if (!out) throw Error(ErrorCode::ParseError, "cannot write " + dot_path);
      out << metagraph_to_dot(m);
    }
    bool connected = is_berge_connected(m);
    if (as_json) {
      json out = metagraph_to_json(m);
      out["connected"] = connected;
      out["diameter"] = diameter(m);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << m.nodes.size() << " nodes, " << m.links.size()
                << " links, " << (connected ? "connected" : "disconnected")
                << ", diameter " << diameter(m) << "\n";
    }
    return 0;
  }

  if (*interval) {
    auto p = parse_parameter(param_name);
    if (!p)
      throw Error(ErrorCode::UndefinedParameter,
                  "unknown parameter: " + param_name);
    auto rep = interval_report(*p, parse_degree_list(degrees_text),
                               family_flag(family_name));
    if (as_json) {
      json witnesses = json::object();
      for (const auto& [value, g] : rep.witnesses)
        witnesses[std::to_string(value)] = graph_to_json(g);
      std::cout << json{{"parameter", to_string(rep.parameter)},
                        {"family", to_string(rep.family)},
                        {"min", rep.min},
                        {"max", rep.max},
                        {"realized", rep.realized},
                        {"contiguous", rep.contiguous()},
                        {"witnesses", witnesses}}
                       .dump()
                << "\n";
    } else {
      std::cout << to_string(rep.parameter) << " over "
                << to_string(rep.family) << ": min " << rep.min << ", max "
                << rep.max << ", "
                << (rep.contiguous() ? "contiguous" : "HAS GAPS") << "\n";
      for (const auto& [value, g] : rep.witnesses) {
        std::cout << "value " << value << ":\n" << format_edge_list(g);
      }
    }
    return 0;
  }

  if (*stability) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pickn(2, max_n);
    int done = 0, violations = 0;
    while (done < samples) {
      int n = pickn(rng);
      std::uniform_real_distribution<double> prob(0.15, 0.6);
      std::bernoulli_distribution coin(prob(rng));
      std::vector<Edge> es;
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
          if (coin(rng)) es.emplace_back(u, v);
      Graph g = Graph::unchecked(n, std::move(es));
      if (g.size() < 2) continue;
      SwitchMatrix m;
      try {
        m = random_interchangeable(g, rng, 200);
      } catch (const Error&) {
        continue;
      }
      auto d = degree_function(g);
      bool isolated = false;
      for (Vertex v = 1; v <= n; ++v)
        if (d[v] == 0) isolated = true;
      for (ParameterId p : kAllParameters) {
        if (p == ParameterId::edge_cover && isolated) continue;
        if (!stability_check(p, g, m)) ++violations;
      }
      ++done;
    }
    if (as_json) {
      std::cout << json{{"samples", done}, {"violations", violations}}.dump()
                << "\n";
    } else {
      std::cout << done << " samples, " << violations << " violations\n";
    }
    return violations == 0 ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    json out{{"error", e.what()}};
    std::cerr << out.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
