#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "twoswitch/enumerate.hpp"
#include "twoswitch/planner.hpp"

namespace twoswitch {

using json = nlohmann::json;

// Edge-list text: first line "n m", then m lines "u v". Blank lines and
// lines starting with "#" are skipped.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, out)) {
      size_t at = out.find_first_not_of(" \t\r");
      if (at == std::string::npos || out[at] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line))
    throw Error(ErrorCode::ParseError, "missing \"n m\" header line");
  std::istringstream head(line);
  int n = 0, m = 0;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw Error(ErrorCode::ParseError, "bad header line: " + line);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line(line))
      throw Error(ErrorCode::ParseError,
                  "expected " + std::to_string(m) + " edges, got " +
                      std::to_string(i));
    std::istringstream row(line);
    Vertex u = 0, v = 0;
    if (!(row >> u >> v))
      throw Error(ErrorCode::ParseError, "bad edge line: " + line);
    edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Matrix text form "a b / c d".
inline SwitchMatrix parse_matrix(const std::string& text) {
  std::string body = text;
  size_t slash = body.find('/');
  if (slash == std::string::npos)
    throw Error(ErrorCode::ParseError, "matrix needs \"a b / c d\" form");
  body[slash] = ' ';
  std::istringstream in(body);
  Vertex a = 0, b = 0, c = 0, d = 0;
  if (!(in >> a >> b >> c >> d))
    throw Error(ErrorCode::ParseError, "bad matrix text: " + text);
  std::string extra;
  if (in >> extra)
    throw Error(ErrorCode::ParseError, "trailing input in matrix: " + text);
  return SwitchMatrix(a, b, c, d);
}

inline std::string format_matrix(const SwitchMatrix& m) {
  std::ostringstream out;
  out << m.a << ' ' << m.b << " / " << m.c << ' ' << m.d;
  return out.str();
}

// Degree list "d1,d2,...,dn" (whitespace around commas tolerated).
inline DegreeFunction parse_degree_list(const std::string& text) {
  DegreeFunction s;
  s.deg.push_back(0);  // 1-based; slot 0 unused
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::istringstream cell(item);
    int d = 0;
    std::string extra;
    if (!(cell >> d) || (cell >> extra))
      throw Error(ErrorCode::ParseError, "bad degree entry: " + item);
    s.deg.push_back(d);
  }
  if (s.deg.size() <= 1)
    throw Error(ErrorCode::ParseError, "empty degree list");
  return s;
}

inline std::optional<Family> parse_family(const std::string& name) {
  if (name == "u" || name == "unicyclic") return Family::unicyclic;
  if (name == "p" || name == "pseudoforest") return Family::pseudoforest;
  if (name == "t" || name == "tree") return Family::tree;
  if (name == "f" || name == "forest") return Family::forest;
  if (name == "c" || name == "cycle") return Family::cycle;
  return std::nullopt;
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorCode::ParseError, "graph JSON needs n and edges");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(ErrorCode::ParseError, "edge must be a [u, v] pair");
    edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
  }
  return build_graph(j.at("n").get<int>(), edges);
}

inline json matrix_to_json(const SwitchMatrix& m) {
  return json{{"remove", {{m.a, m.b}, {m.c, m.d}}},
              {"add", {{m.a, m.c}, {m.b, m.d}}}};
}

inline SwitchMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("remove"))
    throw Error(ErrorCode::ParseError, "matrix JSON needs a remove field");
  const json& rm = j.at("remove");
  if (!rm.is_array() || rm.size() != 2 || rm[0].size() != 2 ||
      rm[1].size() != 2)
    throw Error(ErrorCode::ParseError, "remove must hold two [x, y] pairs");
  SwitchMatrix m(rm[0][0].get<Vertex>(), rm[0][1].get<Vertex>(),
                 rm[1][0].get<Vertex>(), rm[1][1].get<Vertex>());
  if (j.contains("add")) {
    const json& ad = j.at("add");
    bool ok = ad.is_array() && ad.size() == 2 && ad[0].size() == 2 &&
              ad[1].size() == 2 && ad[0][0].get<Vertex>() == m.a &&
              ad[0][1].get<Vertex>() == m.c && ad[1][0].get<Vertex>() == m.b &&
              ad[1][1].get<Vertex>() == m.d;
    if (!ok)
      throw Error(ErrorCode::ParseError,
                  "add field disagrees with remove field");
  }
  return m;
}

inline json sequence_to_json(const SwitchSequence& seq) {
  json steps = json::array();
  for (const SwitchMatrix& m : seq.steps) steps.push_back(matrix_to_json(m));
  return json{{"family", to_string(seq.family)},
              {"start", graph_to_json(seq.start)},
              {"steps", steps}};
}

inline SwitchSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("start") ||
      !j.contains("steps"))
    throw Error(ErrorCode::ParseError,
                "sequence JSON needs family, start and steps");
  SwitchSequence seq;
  auto family = parse_family(j.at("family").get<std::string>());
  if (!family)
    throw Error(ErrorCode::ParseError,
                "unknown family: " + j.at("family").get<std::string>());
  seq.family = *family;
  seq.start = graph_from_json(j.at("start"));
  for (const auto& step : j.at("steps"))
    seq.steps.push_back(matrix_from_json(step));
  return seq;
}

inline json metagraph_to_json(const Metagraph& m) {
  json nodes = json::array();
  for (const Graph& g : m.nodes) nodes.push_back(graph_to_json(g));
  json links = json::array();
  for (const MetagraphLink& link : m.links)
    links.push_back(json{{"from", link.from},
                         {"to", link.to},
                         {"via", matrix_to_json(link.via)}});
  return json{{"family", to_string(m.family)},
              {"nodes", nodes},
              {"links", links}};
}

// Undirected DOT rendering; each symmetric link pair is drawn once.
inline std::string metagraph_to_dot(const Metagraph& m) {
  std::ostringstream out;
  out << "graph metagraph {\n";
  for (int i = 0; i < static_cast<int>(m.nodes.size()); ++i) {
    out << "  g" << i << " [label=\"";
    const Graph& g = m.nodes[i];
    for (int k = 0; k < g.size(); ++k) {
      if (k) out << ' ';
      out << g.edges()[k].u << '-' << g.edges()[k].v;
    }
    out << "\"];\n";
  }
  for (const MetagraphLink& link : m.links)
    if (link.from < link.to)
      out << "  g" << link.from << " -- g" << link.to << " [label=\""
          << format_matrix(link.via) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace twoswitch
