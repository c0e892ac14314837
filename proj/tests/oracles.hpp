#pragma once

// Slow, independent reference implementations used to cross-check the
// library on small inputs.

#include <cstdint>
#include <random>
#include <vector>

#include "kset/graph.hpp"
#include "kset/sepsys.hpp"

namespace oracle {

using kset::Graph;
using kset::Vertex;
using kset::VertexSet;

/// Every a--b path (inner vertices outside a ∪ b), as vertex bitmasks.
std::vector<std::uint32_t> ab_paths(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Largest family of pairwise disjoint a--b paths, by exhaustive packing.
int max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Smallest separator by trying every vertex subset in order of size.
int min_separator(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Definition-level k-connectivity: every pair of equal-size subsets, with
/// path counts from max_disjoint_paths.
bool k_connected(const Graph& g, const VertexSet& x, int k);

/// Whether some labelling of host vertices by pattern vertices (or none) is a
/// valid fbs embedding with a along c.
bool has_fbs(const Graph& host, const Graph& pattern, const VertexSet& a, const VertexSet& c);

/// Tree-width as the best elimination ordering (all permutations).
int tree_width(const Graph& g);

/// k-tree-width as the best part bound over all nested systems of proper
/// separations of order < k.
int k_tree_width(const Graph& g, int k);

/// All proper separations of order < k, one per unordered pair.
std::vector<kset::Separation> small_separations(const Graph& g, int k);

Graph random_graph(std::mt19937& rng, int n, double p);
Graph random_connected_graph(std::mt19937& rng, int n, double p);
VertexSet random_subset(std::mt19937& rng, int n, double p);

/// A random nested system: separations along random small separators with
/// random sides, kept when nested with everything accepted so far. May
/// contain separations of the form (A, V(G)) unless `proper` is set.
kset::NestedSeparationSystem random_nested_system(std::mt19937& rng, const Graph& g, int max_order,
                                                  int attempts, bool proper);

/// Multiset of the parts of all consistent orientations, sorted.
std::vector<VertexSet> part_multiset(const Graph& g, const kset::NestedSeparationSystem& n);

}  // namespace oracle
