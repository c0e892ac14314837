#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kset/graph.hpp"

namespace kset {

/// Stable colour refinement (1-dimensional Weisfeiler-Leman). Colours are
/// isomorphism-invariant and numbered 0..c-1 in a canonical order.
std::vector<int> refine_colours(const Graph& g);

/// Relabelling of g that is identical for isomorphic inputs. Exhaustive over
/// the refined colour classes, so intended for graphs of order <= 10.
Graph canonical_form(const Graph& g);

/// graph6 encoding (n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

/// An isomorphism g -> h as a vertex map, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace kset
