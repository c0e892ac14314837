#pragma once

#include <optional>
#include <vector>

#include "kset/graph.hpp"
#include "kset/typical.hpp"

namespace kset {

struct KConnWitness {
  VertexSet z1;
  VertexSet z2;
  VertexSet separator;
};

struct KConnVerdict {
  bool ok = true;
  std::optional<KConnWitness> witness;
};

/// Decides whether `a` is k-connected in g. A failure comes with sets z1, z2
/// of equal size l <= k and a set of fewer than l vertices separating them.
///
/// Two exact strategies are used, whichever is cheaper for the input: the
/// pair enumeration (ascending l, lexicographic subsets, unordered pairs,
/// z1 == z2 skipped) or a sweep over small separators, which fails exactly
/// when some separation of order s < k has more than s vertices of `a` on
/// each side. Requires |a| >= k.
KConnVerdict is_k_connected(const Graph& g, const VertexSet& a, int k);

/// The pair enumeration alone; exposed for cross-checking.
KConnVerdict is_k_connected_by_pairs(const Graph& g, const VertexSet& a, int k);
/// The separator sweep alone; exposed for cross-checking.
KConnVerdict is_k_connected_by_separators(const Graph& g, const VertexSet& a, int k);

struct SubsetResult {
  int size = 0;
  VertexSet set;
};

/// A largest k-connected subset of `a`, the lexicographically least among
/// those of maximum size. If no subset of size >= k is k-connected the
/// result is the sentinel {k - 1, {}}.
SubsetResult max_k_connected_subset(const Graph& g, const VertexSet& a, int k);

struct StarOrPath {
  enum class Kind { None, Path, Star };
  Kind kind = Kind::None;
  std::vector<Vertex> path;
  Vertex centre = -1;
  std::vector<std::vector<Vertex>> legs;  // each starts at the centre
};

/// A path through at least m vertices of u, or a star whose centre reaches m
/// distinct vertices of u along paths meeting only at the centre. Tries the
/// minimal tree spanning u first and falls back to an exact search in g.
StarOrPath star_or_path(const Graph& g, const VertexSet& u, int m);
bool check_star_or_path(const Graph& g, const VertexSet& u, int m, const StarOrPath& r);

/// a \ s intersected with a component of g - s holding the most of a.
VertexSet largest_component_restriction(const Graph& g, const VertexSet& a, const VertexSet& s);

/// Largest (k-1)-connected subset of a \ {v} in g - v, in g's numbering.
SubsetResult kconn_after_deletion(const Graph& g, const VertexSet& a, int k, Vertex v);

struct InteriorCore {
  int boundary = 0;  // one past the largest growth index on the core
  int cutoff = 0;    // core vertices with growth index below this are used
  VertexSet set;
  bool ok = false;
};

/// Largest cutoff whose core prefix has at least k vertices and is
/// k-connected in the graph.
InteriorCore interior_core(const CoreMarkedGraph& g, int k);

}  // namespace kset
