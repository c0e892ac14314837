#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kset/graph.hpp"
#include "kset/kconn.hpp"
#include "kset/sepsys.hpp"

namespace kset {

struct WidthResult {
  int value = 0;
  TreeDecomposition td;
};

/// Minimum, over tree-decompositions of adhesion < k, of the largest cost
/// of a part, for a cost that never decreases on supersets. Exact, by
/// repeatedly splitting off a leaf part C ∪ N(C) along a small separator
/// N(C) and making N(C) a clique in the rest. Order <= 12.
WidthResult min_width_decomposition(const Graph& g, int k,
                                    const std::function<int(const VertexSet&)>& cost);

/// Largest part of the best decomposition of adhesion < k. Stated as a
/// strict cardinal bound, the width is this value plus one. Order <= 12.
int k_tree_width(const Graph& g, int k);

/// Exact tree-width by dynamic programming over vertex subsets. Order <= 16;
/// the empty graph has tree-width -1.
int tree_width(const Graph& g);

/// Adhesion below k and every part separable from `a` by fewer than m vertices.
bool verify_td_certificate(const Graph& g, const VertexSet& a, int k, int m,
                           const TreeDecomposition& td);

struct DualityReport {
  int max_kconn = 0;
  VertexSet max_kconn_set;
  int ktw = 0;
  int tw = 0;
  int best_separability = 0;  // optimum of the largest part separability
  std::optional<TreeDecomposition> td_certificate;
  std::optional<VertexSet> set_certificate;
  std::vector<int> separability;  // per part of the best decomposition
  TreeDecomposition best_td;
};

/// Searches for both certificates for (g, a, k, m) and reports each one
/// found. Nothing is assumed about their exclusivity. Requires m >= k.
DualityReport check_duality(const Graph& g, const VertexSet& a, int k, int m);

struct BoundsReport {
  int k = 0;
  int s = 0;        // largest (k+1)-connected set, or the sentinel k
  int s_prime = 0;  // largest k-connected set, or the sentinel k-1
  int w = 0;        // k_tree_width
  int tw = 0;
  bool djgt_ok = false;
  bool gj_applicable = false;
  bool gj_ok = true;
  std::string convention;
};

/// The tree-width bounds of Diestel, Gorbunov, Jensen and Thomassen and the
/// k-tree-width bounds of Geelen and Joeris, evaluated exactly.
BoundsReport verify_sec1_bounds(const Graph& g, int k);

struct TransferReport {
  int paths = 0;
  SubsetResult subset;
};

/// Number of disjoint a--b paths and the largest k-connected subset of a,
/// given that b is k-connected.
TransferReport inseparable_transfer(const Graph& g, const VertexSet& a, const VertexSet& b, int k);

}  // namespace kset
