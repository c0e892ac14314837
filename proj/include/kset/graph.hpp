#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kset {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids. Every operation in the library
/// that takes a VertexSet expects this normal form; use make_set() to get it.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

VertexSet make_set(std::vector<Vertex> vs);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& sub, const VertexSet& super);
bool contains(const VertexSet& s, Vertex v);
VertexSet full_set(int n);

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Values are immutable once built; every transformation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges (in either direction)
  /// are merged; loops and out-of-range endpoints are rejected.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep` (relabelled to 0..|keep|-1 in ascending order).
  Graph induced(const VertexSet& keep) const;
  /// Deletes the given vertices and relabels the rest in ascending order.
  Graph without(const VertexSet& removed) const;

  /// Neighbourhood of a vertex set: vertices outside `s` adjacent to it.
  VertexSet neighbourhood(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Components as sorted vertex sets, ordered by their least vertex.
std::vector<VertexSet> components(const Graph& g);

/// Components of g - removed, restricted to the remaining vertices (ids of g).
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_tree(const Graph& g);

/// Shortest path inside `allowed` (ids of g), ties broken by ascending ids.
/// Returns an empty vector if none exists.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<char>& allowed);

// Small named families used throughout tests and fixtures.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace kset
