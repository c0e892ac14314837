#pragma once

#include <optional>

#include "kset/graph.hpp"
#include "kset/sepsys.hpp"

namespace kset {

/// Two parts (tree nodes, or consistent orientations by index) with sets
/// z1 ⊆ part t1 and z2 ⊆ part t2 of equal size l <= k that are joined by
/// only max_paths < l disjoint paths although the decomposition offers no
/// separation of order below l between the two parts.
struct LeanViolation {
  int t1 = -1;
  int t2 = -1;
  VertexSet z1;
  VertexSet z2;
  int max_paths = 0;
};

/// First violation in deterministic order (t1 <= t2, ascending l,
/// lexicographic z1 then z2), or nothing if td is k-lean.
/// Requires adhesion(td) < k.
std::optional<LeanViolation> is_k_lean_td(const Graph& g, const TreeDecomposition& td, int k);

/// Same check over the parts of a nested separation system; requires every
/// member to have order < k.
std::optional<LeanViolation> is_k_lean_nss(const Graph& g, const NestedSeparationSystem& n, int k);

/// A k-lean tree-decomposition of adhesion < k, built by repeatedly
/// splitting along a minimum separator of the first violation.
TreeDecomposition build_k_lean_td(const Graph& g, int k);

}  // namespace kset
