#include <doctest.h>

#include <climits>

#include "kset/corpus.hpp"
#include "kset/kconn.hpp"
#include "kset/lean.hpp"
#include "kset/menger.hpp"

using namespace kset;

namespace {

// Smallest adhesion set on the tree path between two nodes.
int room(const TreeDecomposition& td, int s, int t) {
  if (s == t) return INT_MAX;
  const auto path = tree_path(td.tree, s, t);
  int least = INT_MAX;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    least = std::min(least, static_cast<int>(set_intersection(td.parts[path[i]], td.parts[path[i + 1]]).size()));
  return least;
}

void check_violation(const Graph& g, const TreeDecomposition& td, int k, const LeanViolation& v) {
  const int l = static_cast<int>(v.z1.size());
  CHECK(static_cast<int>(v.z2.size()) == l);
  CHECK(l <= k);
  CHECK(is_subset(v.z1, td.parts[v.t1]));
  CHECK(is_subset(v.z2, td.parts[v.t2]));
  CHECK(v.max_paths < l);
  CHECK(menger(g, v.z1, v.z2).count == v.max_paths);
  CHECK(room(td, v.t1, v.t2) >= l);
}

void check_lean_output(const Graph& g, int k) {
  const TreeDecomposition td = build_k_lean_td(g, k);
  REQUIRE(validate_td(g, td));
  if (td.tree.order() > 1) CHECK(adhesion(td) < k);
  CHECK_FALSE(is_k_lean_td(g, td, k).has_value());
  for (const VertexSet& p : td.parts) {
    const int want = std::min(k, static_cast<int>(p.size()));
    CHECK(is_k_connected(g, p, want).ok);
  }
  CHECK_FALSE(is_k_lean_nss(g, td_to_nss(g, td), k).has_value());
}

}  // namespace

TEST_CASE("a complete graph is lean as one part") {
  const Graph g = complete_graph(5);
  CHECK_FALSE(is_k_lean_td(g, trivial_td(g), 3).has_value());
  CHECK_FALSE(is_k_lean_nss(complete_graph(4), {}, 3).has_value());
}

TEST_CASE("an uneven split of a path is not lean") {
  // Parts {0,1,2,3} and {3,4}: inside the first part, {0,1} and {1,2}
  // need two paths but only one exists, and no edge of the tree helps.
  const Graph g = path_graph(5);
  const TreeDecomposition td{path_graph(2), {{0, 1, 2, 3}, {3, 4}}};
  const auto v = is_k_lean_td(g, td, 2);
  REQUIRE(v.has_value());
  check_violation(g, td, 2, *v);
  CHECK(v->t1 == 0);
  CHECK(v->t2 == 0);

  // Across the tree edge the adhesion set {3} limits demands to one path.
  const TreeDecomposition edges{path_graph(4), {{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
  CHECK_FALSE(is_k_lean_td(g, edges, 2).has_value());
}

TEST_CASE("systems: the empty system asks the whole graph to be connected") {
  const auto v = is_k_lean_nss(path_graph(4), {}, 2);
  REQUIRE(v.has_value());
  CHECK(v->max_paths < static_cast<int>(v->z1.size()));
  CHECK_THROWS_AS(is_k_lean_nss(path_graph(4), NestedSeparationSystem::from({{{0, 1, 2}, {1, 2, 3}}}), 2),
                  PreconditionError);
}

TEST_CASE("adhesion must stay below k") {
  const Graph g = path_graph(4);
  const TreeDecomposition td{path_graph(2), {{0, 1, 2}, {1, 2, 3}}};
  CHECK_THROWS_AS(is_k_lean_td(g, td, 2), PreconditionError);
}

TEST_CASE("construction on standard graphs") {
  const TreeDecomposition kn = build_k_lean_td(complete_graph(5), 4);
  CHECK(kn.tree.order() == 1);
  const Graph tree = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}});
  const TreeDecomposition td = build_k_lean_td(tree, 2);
  CHECK(adhesion(td) <= 1);
  for (const VertexSet& p : td.parts) CHECK(p.size() <= 2);
  check_lean_output(tree, 2);
  check_lean_output(grid_graph(3, 3), 3);
  check_lean_output(cycle_graph(6), 3);
  check_lean_output(disjoint_union(cycle_graph(3), path_graph(3)), 2);
}

TEST_CASE("construction on all small connected graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& cg : connected_graphs(n))
      for (int k = 1; k <= 3; ++k) {
        CAPTURE(cg.id);
        CAPTURE(k);
        check_lean_output(cg.graph, k);
      }
}
