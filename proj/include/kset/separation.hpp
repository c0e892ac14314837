#pragma once

#include <compare>

#include "kset/graph.hpp"

namespace kset {

/// An ordered pair (a, b) of vertex sets. It is a separation of a graph when
/// a ∪ b covers every vertex and no edge joins a\b to b\a.
struct Separation {
  VertexSet a;
  VertexSet b;

  int order() const { return static_cast<int>(set_intersection(a, b).size()); }
  VertexSet separator() const { return set_intersection(a, b); }
  Separation inverse() const { return {b, a}; }

  friend auto operator<=>(const Separation&, const Separation&) = default;
  friend bool operator==(const Separation&, const Separation&) = default;
};

bool is_separation(const Graph& g, const Separation& s);

/// (A,B) <= (C,D) iff A ⊆ C and D ⊆ B.
inline bool precedes(const Separation& lhs, const Separation& rhs) {
  return is_subset(lhs.a, rhs.a) && is_subset(rhs.b, lhs.b);
}

}  // namespace kset
