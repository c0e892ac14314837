#include "kset/serialize.hpp"

#include <sstream>

namespace kset {

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = json{{"n", g.order()}, {"edges", std::move(edges)}};
}

void from_json(const json& j, Graph& g) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw PreconditionError("graph JSON needs fields n and edges");
  std::vector<Edge> es;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw PreconditionError("edge must be a pair");
    es.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  g = Graph::from_edges(j.at("n").get<int>(), es);
}

void to_json(json& j, const CoreMarkedGraph& g) {
  json roles = json::object();
  for (Vertex v = 0; v < g.graph.order(); ++v) roles[std::to_string(v)] = g.roles[v].label();
  j = json{{"graph", g.graph}, {"core", g.core}, {"roles", std::move(roles)}, {"k", g.k},
           {"family", g.family}};
}

void from_json(const json& j, CoreMarkedGraph& g) {
  g = CoreMarkedGraph{};
  g.graph = j.at("graph").get<Graph>();
  g.core = j.at("core").get<std::vector<Vertex>>();
  g.roles.assign(static_cast<std::size_t>(g.graph.order()), Role{});
  const json& roles = j.at("roles");
  for (Vertex v = 0; v < g.graph.order(); ++v) {
    const std::string key = std::to_string(v);
    if (!roles.contains(key)) throw PreconditionError("roles must cover every vertex");
    g.roles[v] = Role::parse(roles.at(key).get<std::string>());
  }
  for (Vertex v : g.core)
    if (v < 0 || v >= g.graph.order()) throw PreconditionError("core vertex out of range");
  g.k = j.value("k", 0);
  g.family = j.value("family", std::string{});
}

void to_json(json& j, const Separation& s) { j = json{{"a", s.a}, {"b", s.b}}; }

void from_json(const json& j, Separation& s) {
  s.a = make_set(j.at("a").get<std::vector<Vertex>>());
  s.b = make_set(j.at("b").get<std::vector<Vertex>>());
}

void to_json(json& j, const NestedSeparationSystem& n) { j = json{{"separations", n.pairs}}; }

void from_json(const json& j, NestedSeparationSystem& n) {
  n = NestedSeparationSystem::from(j.at("separations").get<std::vector<Separation>>());
}

void to_json(json& j, const TreeDecomposition& td) {
  j = json{{"tree", td.tree}, {"parts", td.parts}};
}

void from_json(const json& j, TreeDecomposition& td) {
  td.tree = j.at("tree").get<Graph>();
  td.parts.clear();
  for (const json& p : j.at("parts")) td.parts.push_back(make_set(p.get<std::vector<Vertex>>()));
}

void to_json(json& j, const Embedding& e) {
  json along = json::array();
  for (auto [x, p] : e.along) along.push_back({x, p});
  j = json{{"branch", e.branch}, {"along", std::move(along)}};
}

void from_json(const json& j, Embedding& e) {
  e.branch.clear();
  for (const json& b : j.at("branch")) e.branch.push_back(make_set(b.get<std::vector<Vertex>>()));
  e.along.clear();
  for (const json& pair : j.at("along")) e.along[pair[0].get<int>()] = pair[1].get<int>();
}

void to_json(json& j, const SubdivisionEmbedding& s) {
  json paths = json::array();
  for (const auto& [edge, path] : s.edge_path)
    paths.push_back({{"edge", {edge.first, edge.second}}, {"path", path}});
  j = json{{"branch_vertex", s.branch_vertex}, {"edge_paths", std::move(paths)}};
}

void from_json(const json& j, SubdivisionEmbedding& s) {
  s.branch_vertex = j.at("branch_vertex").get<std::vector<Vertex>>();
  s.edge_path.clear();
  for (const json& p : j.at("edge_paths")) {
    const Edge e{p.at("edge")[0].get<int>(), p.at("edge")[1].get<int>()};
    s.edge_path[e] = p.at("path").get<std::vector<Vertex>>();
  }
}

void to_json(json& j, const KConnVerdict& v) {
  j = json{{"ok", v.ok}};
  if (v.witness)
    j["witness"] = {{"z1", v.witness->z1}, {"z2", v.witness->z2}, {"separator", v.witness->separator}};
  else
    j["witness"] = nullptr;
}

void to_json(json& j, const LeanViolation& v) {
  j = json{{"parts", {v.t1, v.t2}}, {"z1", v.z1}, {"z2", v.z2}, {"max_paths", v.max_paths}};
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

const char* colour(RoleKind kind) {
  switch (kind) {
    case RoleKind::Core: return "gold";
    case RoleKind::InfiniteSide: return "khaki";
    case RoleKind::FiniteSide: return "lightblue";
    case RoleKind::Degenerate: return "steelblue";
    case RoleKind::FrayedCentre: return "plum";
    case RoleKind::Layer: return "palegreen";
    case RoleKind::Dominating: return "salmon";
    case RoleKind::BlownUp: return "lightgrey";
  }
  return "white";
}

}  // namespace

std::string to_dot(const CoreMarkedGraph& g) {
  const VertexSet core = g.core_set();
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.graph.order(); ++v)
    out << "  " << v << " [label=\"" << v << "\\n" << g.roles[v].label() << "\", fillcolor="
        << colour(g.roles[v].kind) << (contains(core, v) ? ", shape=box" : "") << "];\n";
  for (auto [u, v] : g.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t\r\n");
    std::size_t used = 0;
    const std::string trimmed = item.substr(first, last - first + 1);
    const int v = std::stoi(trimmed, &used);
    if (used != trimmed.size()) throw PreconditionError("not a vertex id: " + trimmed);
    out.push_back(v);
  }
  return make_set(out);
}

}  // namespace kset
