#pragma once

#include <string>
#include <vector>

#include "kset/graph.hpp"

namespace kset {

struct CorpusGraph {
  std::string id;  // graph6 of the canonical form
  Graph graph;     // the canonical form itself
};

/// All connected graphs of order exactly n up to isomorphism, sorted by id.
/// Each is grown from a smaller connected graph by one new vertex (every
/// connected graph has a vertex whose removal keeps it connected).
std::vector<CorpusGraph> connected_graphs(int n);

/// connected_graphs(1) .. connected_graphs(n_max), concatenated. n_max <= 8.
std::vector<CorpusGraph> corpus_enumerate(int n_max);

}  // namespace kset
