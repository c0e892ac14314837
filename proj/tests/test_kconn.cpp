#include <doctest.h>

#include <random>

#include "kset/combinatorics.hpp"
#include "kset/corpus.hpp"
#include "kset/kconn.hpp"
#include "kset/menger.hpp"
#include "kset/typical.hpp"
#include "oracles.hpp"

using namespace kset;

namespace {

bool valid_witness(const Graph& g, const VertexSet& a, int k, const KConnWitness& w) {
  const int l = static_cast<int>(w.z1.size());
  return l >= 1 && l <= k && static_cast<int>(w.z2.size()) == l && is_subset(w.z1, a) &&
         is_subset(w.z2, a) && static_cast<int>(w.separator.size()) < l &&
         separates(g, w.separator, w.z1, w.z2);
}

SubsetResult brute_max_subset(const Graph& g, const VertexSet& a, int k) {
  for (int size = static_cast<int>(a.size()); size >= std::max(k, 1); --size)
    for (const VertexSet& x : subsets_of_size(a, size))
      if (oracle::k_connected(g, x, k)) return {size, x};
  return {k - 1, {}};
}

}  // namespace

TEST_CASE("complete bipartite core is k-connected") {
  const CoreMarkedGraph kb = gen_complete_bipartite(4, 10);
  CHECK(is_k_connected(kb.graph, kb.core_set(), 4).ok);
}

TEST_CASE("path of four vertices is not 2-connected") {
  const Graph g = path_graph(4);
  const KConnVerdict v = is_k_connected(g, {0, 1, 2, 3}, 2);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness.has_value());
  CHECK(valid_witness(g, {0, 1, 2, 3}, 2, *v.witness));
  CHECK(v.witness->separator.size() == 1);
  const KConnVerdict by_pairs = is_k_connected_by_pairs(g, {0, 1, 2, 3}, 2);
  REQUIRE(by_pairs.witness.has_value());
  CHECK(valid_witness(g, {0, 1, 2, 3}, 2, *by_pairs.witness));
}

TEST_CASE("1-connected means one component") {
  const Graph g = disjoint_union(path_graph(3), cycle_graph(4));
  CHECK(is_k_connected(g, {0, 2}, 1).ok);
  CHECK(is_k_connected(g, {3, 5, 6}, 1).ok);
  CHECK_FALSE(is_k_connected(g, {0, 4}, 1).ok);
}

TEST_CASE("too small a set is rejected") {
  CHECK_THROWS_AS(is_k_connected(complete_graph(4), {0, 1}, 3), PreconditionError);
}

TEST_CASE("both strategies agree with the definition on small graphs") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n)
    for (const auto& cg : connected_graphs(n))
      for (int k = 1; k <= 3; ++k)
        for (int t = 0; t < 3; ++t) {
          const Graph& g = cg.graph;
          const VertexSet a = t == 0 ? full_set(n) : oracle::random_subset(rng, n, 0.7);
          if (static_cast<int>(a.size()) < k) continue;
          const bool expect = oracle::k_connected(g, a, k);
          const KConnVerdict p = is_k_connected_by_pairs(g, a, k);
          const KConnVerdict s = is_k_connected_by_separators(g, a, k);
          const KConnVerdict c = is_k_connected(g, a, k);
          REQUIRE(p.ok == expect);
          REQUIRE(s.ok == expect);
          REQUIRE(c.ok == expect);
          if (!expect) {
            CHECK(valid_witness(g, a, k, *p.witness));
            CHECK(valid_witness(g, a, k, *s.witness));
            CHECK(valid_witness(g, a, k, *c.witness));
          }
        }
}

TEST_CASE("largest k-connected subsets") {
  CHECK(max_k_connected_subset(complete_graph(5), full_set(5), 3).size == 5);
  CHECK(max_k_connected_subset(path_graph(4), full_set(4), 2).size == 2);
  const CoreMarkedGraph tb = two_bipartite_matched(5);
  CHECK(max_k_connected_subset(tb.graph, tb.core_set(), 4).size == 5);
  const SubsetResult none = max_k_connected_subset(disjoint_union(Graph(1), Graph(1)), {0, 1}, 3);
  CHECK(none.size == 2);
  CHECK(none.set.empty());
}

TEST_CASE("largest subsets match exhaustive search") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 4;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const int k = 1 + t % 3;
    const SubsetResult got = max_k_connected_subset(g, full_set(n), k);
    const SubsetResult want = brute_max_subset(g, full_set(n), k);
    CHECK(got.size == want.size);
    CHECK(got.set == want.set);
  }
}

TEST_CASE("trees: every 2-connected set is found") {
  // The three leaves of a star are 2-connected: any two pairs share a leaf,
  // and the remaining leaves are joined through the centre.
  const SubsetResult star = max_k_connected_subset(star_graph(3), full_set(4), 2);
  CHECK(star.size == 3);
  CHECK(star.set == VertexSet{1, 2, 3});
}

TEST_CASE("star or path") {
  const Graph star = star_graph(6);
  const StarOrPath s = star_or_path(star, {1, 2, 3, 4, 5, 6}, 5);
  CHECK(s.kind == StarOrPath::Kind::Star);
  CHECK(check_star_or_path(star, {1, 2, 3, 4, 5, 6}, 5, s));

  const Graph path = path_graph(10);
  const StarOrPath p = star_or_path(path, full_set(10), 8);
  CHECK(p.kind == StarOrPath::Kind::Path);
  CHECK(check_star_or_path(path, full_set(10), 8, p));

  std::mt19937 rng(40);
  for (int t = 0; t < 20; ++t) {
    std::vector<Edge> es;
    for (int v = 1; v < 40; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    const Graph tree = Graph::from_edges(40, es);
    VertexSet leaves;
    for (Vertex v = 0; v < 40; ++v)
      if (tree.degree(v) == 1) leaves.push_back(v);
    const StarOrPath r = star_or_path(tree, leaves, 4);
    CHECK(r.kind != StarOrPath::Kind::None);
    CHECK(check_star_or_path(tree, leaves, 4, r));
  }
}

TEST_CASE("largest component restriction") {
  const Graph g = cycle_graph(6);
  CHECK(largest_component_restriction(g, {0, 2, 4}, {}) == VertexSet{0, 2, 4});
  const CoreMarkedGraph kb = gen_complete_bipartite(3, 9);
  CHECK(largest_component_restriction(kb.graph, kb.core_set(), {9, 10}).size() == 9);
  CHECK(largest_component_restriction(star_graph(5), {1, 2, 3, 4, 5}, {0}).size() == 1);
}

TEST_CASE("deleting a vertex keeps a (k-1)-connected subset") {
  CHECK(kconn_after_deletion(complete_graph(5), full_set(5), 3, 2).size == 4);
  const CoreMarkedGraph kb = gen_complete_bipartite(3, 6);
  const SubsetResult r = kconn_after_deletion(kb.graph, kb.core_set(), 3, 6);
  CHECK(r.size == 6);
  // A vertex outside a's structure changes nothing.
  const Graph g = disjoint_union(complete_graph(4), Graph(1));
  CHECK(kconn_after_deletion(g, {0, 1, 2, 3}, 3, 4).size == 4);
}

TEST_CASE("interior core of a complete bipartite graph") {
  const InteriorCore ic = interior_core(gen_complete_bipartite(4, 10), 4);
  CHECK(ic.ok);
  CHECK(ic.boundary == 10);
  CHECK(ic.cutoff == 10);
  CHECK(ic.set.size() == 10);
}
