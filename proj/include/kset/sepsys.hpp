#pragma once

#include <vector>

#include "kset/graph.hpp"
#include "kset/separation.hpp"

namespace kset {

struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> parts;  // indexed by tree node

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// A symmetric, pairwise nested set of separations. Each pair {(A,B),(B,A)}
/// is stored once, with the lexicographically smaller side first.
struct NestedSeparationSystem {
  std::vector<Separation> pairs;

  /// Canonicalises orientations, removes duplicates and sorts.
  static NestedSeparationSystem from(std::vector<Separation> seps);
  /// Both orientations of every pair.
  std::vector<Separation> all() const;
  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }

  friend bool operator==(const NestedSeparationSystem&, const NestedSeparationSystem&) = default;
};

/// flip[i] == 0 picks pairs[i], flip[i] == 1 picks its inverse.
struct Orientation {
  std::vector<char> flip;

  std::vector<Separation> chosen(const NestedSeparationSystem& n) const;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

bool is_nested_pair(const Separation& s1, const Separation& s2);
bool is_nested(const std::vector<Separation>& seps);

/// All consistent orientations, in lexicographic order of their flip vectors.
std::vector<Orientation> consistent_orientations(const NestedSeparationSystem& n);
bool is_consistent(const NestedSeparationSystem& n, const Orientation& o);
VertexSet part_of(const Graph& g, const NestedSeparationSystem& n, const Orientation& o);

/// Tree over the consistent orientations, adjacent when they differ on
/// exactly one pair. Rejects systems containing a separation (A, V(G)).
TreeDecomposition nss_to_td(const Graph& g, const NestedSeparationSystem& n);
NestedSeparationSystem td_to_nss(const Graph& g, const TreeDecomposition& td);

bool validate_td(const Graph& g, const TreeDecomposition& td);
TreeDecomposition trivial_td(const Graph& g);

/// For every pair and every component C of G minus its separator, the
/// separation (C ∪ N(C), V \ C) and its inverse. Components with
/// C ∪ N(C) = V(G) are skipped, as they would only yield (A, V(G)).
NestedSeparationSystem clean_up(const Graph& g, const NestedSeparationSystem& n);

int adhesion(const NestedSeparationSystem& n);
int adhesion(const TreeDecomposition& td);

/// Nodes on the tree path from s to t, both included.
std::vector<Vertex> tree_path(const Graph& tree, Vertex s, Vertex t);

}  // namespace kset
