#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kset/graph.hpp"
#include "kset/typical.hpp"

namespace kset {

/// Branch sets of a pattern inside a host, plus the bijection from the host
/// set A onto the pattern set C.
struct Embedding {
  std::vector<VertexSet> branch;  // indexed by pattern vertex
  std::map<Vertex, Vertex> along; // host vertex of A -> pattern vertex of C
};

struct SubdivisionEmbedding {
  std::vector<Vertex> branch_vertex;             // indexed by pattern vertex
  std::map<Edge, std::vector<Vertex>> edge_path; // pattern edge (u < v) -> host path u..v
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct FbsResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Embedding> embedding;
  long expansions = 0;
};

struct SubdivisionResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<SubdivisionEmbedding> embedding;
  long expansions = 0;
};

/// Checks that `e` exhibits `pattern` as a minor of `host` with finite
/// branch sets and `a` along `c`: branch sets are non-empty, disjoint and
/// connected, every pattern edge is realised by a host edge between the
/// corresponding branch sets, and each branch set of c holds exactly one
/// vertex of a (while the others hold none), as recorded by e.along.
bool verify_fbs(const Graph& host, const Graph& pattern, const Embedding& e, const VertexSet& a,
                const VertexSet& c);

/// Exact backtracking search. Pattern vertices are placed by descending
/// degree; each takes a connected host set, smaller sets first. A budget of
/// 0 means unlimited; otherwise the search gives up after that many
/// placements and reports BudgetExhausted.
FbsResult find_fbs(const Graph& host, const Graph& pattern, const VertexSet& a, const VertexSet& c,
                   long budget = 0);

/// Removes branch-set vertices one at a time (highest id first) while the
/// embedding stays valid, leaving inclusion-minimal branch sets.
Embedding prune_branch_sets(const Graph& host, const Graph& pattern, Embedding e,
                            const VertexSet& a, const VertexSet& c);

bool verify_subdivision(const Graph& host, const Graph& pattern, const SubdivisionEmbedding& s,
                        const VertexSet& core_pattern, const VertexSet& core_host);

/// Exact search for a subdivision of `pattern` in `host` whose branch
/// vertices map core_pattern onto core_host. Vertices of core_host are used
/// only as images of core_pattern.
SubdivisionResult find_subdivision(const Graph& host, const Graph& pattern,
                                   const VertexSet& core_pattern, const VertexSet& core_host,
                                   long budget = 0);

/// Turns a subdivision of a generalised graph into an fbs-minor of its
/// parent: each parent vertex collects the images of its blown-up tree and
/// the interiors of the paths of its tree edges; a path between different
/// trees is given to the owner of its first end. The host set A is the
/// image of the generalised core and runs along the parent's core.
Embedding subdivision_implies_fbs(const SubdivisionEmbedding& s, const CoreMarkedGraph& generalised);

}  // namespace kset
