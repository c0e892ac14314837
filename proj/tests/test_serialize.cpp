#include <doctest.h>

#include "fixtures.hpp"
#include "kset/serialize.hpp"

using namespace kset;

template <typename T>
T round_trip(const T& value) {
  const json j = value;
  return json::parse(j.dump()).get<T>();
}

TEST_CASE("graphs survive json") {
  const Graph g = grid_graph(2, 3);
  CHECK(round_trip(g) == g);
  const json j = path_graph(3);
  CHECK(j.dump() == R"({"edges":[[0,1],[1,2]],"n":3})");
  CHECK_THROWS_AS(json::parse(R"({"n":2})").get<Graph>(), PreconditionError);
  CHECK_THROWS_AS(json::parse(R"({"n":2,"edges":[[0,1,1]]})").get<Graph>(), PreconditionError);
}

TEST_CASE("core-marked graphs keep roles and core") {
  for (const auto& f : fixtures::typical_fixtures()) {
    CAPTURE(f.name);
    const CoreMarkedGraph back = round_trip(f.graph);
    CHECK(back.graph == f.graph.graph);
    CHECK(back.core == f.graph.core);
    CHECK(back.roles == f.graph.roles);
    CHECK(back.k == f.graph.k);
    CHECK(back.family == f.graph.family);
  }
  json j = gen_complete_bipartite(2, 3);
  j["roles"].erase("0");
  CHECK_THROWS_AS(j.get<CoreMarkedGraph>(), PreconditionError);
}

TEST_CASE("separation systems and decompositions survive json") {
  const auto n = NestedSeparationSystem::from({{{0, 1, 2}, {2, 3, 4}}, {{2, 3, 4}, {0, 1, 2}}, {{0, 1}, {1, 2, 3, 4}}});
  CHECK(n.size() == 2);
  CHECK(round_trip(n) == n);
  const TreeDecomposition td{path_graph(3), {{0, 1}, {1, 2}, {2, 3}}};
  CHECK(round_trip(td) == td);
}

TEST_CASE("embeddings survive json") {
  Embedding e{{{0, 1}, {2}, {3, 4}}, {{0, 0}, {2, 1}}};
  const Embedding be = round_trip(e);
  CHECK(be.branch == e.branch);
  CHECK(be.along == e.along);
  SubdivisionEmbedding s{{0, 3, 5}, {{{0, 1}, {0, 2, 3}}, {{1, 2}, {3, 5}}}};
  const SubdivisionEmbedding bs = round_trip(s);
  CHECK(bs.branch_vertex == s.branch_vertex);
  CHECK(bs.edge_path == s.edge_path);
}

TEST_CASE("verdicts") {
  const json ok = KConnVerdict{};
  CHECK(ok.dump() == R"({"ok":true,"witness":null})");
  const json bad = KConnVerdict{false, KConnWitness{{0}, {2}, {1}}};
  CHECK(bad["witness"]["separator"] == json::array({1}));
  const json v = LeanViolation{0, 1, {2}, {3}, 0};
  CHECK(v["parts"] == json::array({0, 1}));
}

TEST_CASE("dot output") {
  const std::string plain = to_dot(path_graph(2));
  CHECK(plain == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
  const std::string marked = to_dot(gen_complete_bipartite(2, 2));
  CHECK(marked.find("shape=box") != std::string::npos);
  CHECK(marked.find("0 -- ") != std::string::npos);
}

TEST_CASE("vertex lists") {
  CHECK(parse_vertex_list(" 3, 1,,2 ") == VertexSet{1, 2, 3});
  CHECK(parse_vertex_list("").empty());
  CHECK_THROWS_AS(parse_vertex_list("1,x"), std::exception);
  CHECK_THROWS_AS(parse_vertex_list("1,2a"), PreconditionError);
}
