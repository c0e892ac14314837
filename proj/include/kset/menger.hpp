#pragma once

#include <limits>
#include <vector>

#include "kset/graph.hpp"

namespace kset {

/// Pairwise vertex-disjoint paths, each listed from its a-end to its b-end.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
};

struct MengerResult {
  int count = 0;
  PathSystem paths;
  VertexSet separator;
};

/// Maximum number of disjoint a--b paths together with a minimum a--b
/// separator of the same size.
///
/// Inner vertices of every returned path avoid a and b. A vertex of a ∩ b is a
/// trivial path and belongs to every separator. Augmenting paths are searched
/// breadth-first in ascending vertex order, so witnesses are reproducible.
MengerResult menger(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Size of a smallest set S such that a\S and b\S lie in different components
/// of g - S. Proved minimal by exhausting every smaller candidate when the
/// graph is small enough, otherwise certified through the flow cut.
int min_separator_size(const Graph& g, const VertexSet& a, const VertexSet& b);

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// True iff no path of g - s joins a\s and b\s.
bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);

/// Reusable unit-capacity flow on the vertex-split network of one graph.
/// Cheap to query many (a, b) pairs against the same host.
class MengerSolver {
 public:
  explicit MengerSolver(const Graph& g);
  explicit MengerSolver(Graph&&) = delete;  // the solver keeps a reference

  /// Number of disjoint a--b paths, stopping early once `limit` are found.
  int max_paths(const VertexSet& a, const VertexSet& b, int limit = kUnbounded);

  MengerResult solve(const VertexSet& a, const VertexSet& b);

 private:
  enum : int { kNone = -1, kSource = -2, kSink = -3 };

  int run(const VertexSet& a, const VertexSet& b, int limit);
  bool augment();
  VertexSet cut() const;
  PathSystem extract(const VertexSet& a, const VertexSet& b) const;

  const Graph* g_;
  std::vector<char> in_a_, in_b_, through_;
  std::vector<int> next_, prev_;
  // BFS scratch: node id 2v is v_in, 2v+1 is v_out.
  std::vector<int> parent_;
  std::vector<int> queue_;
  std::vector<Vertex> sources_;
};

}  // namespace kset
