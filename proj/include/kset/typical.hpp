#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "kset/graph.hpp"

namespace kset {

enum class RoleKind {
  Core,          // (block, index) of a complete-bipartite block
  InfiniteSide,  // (copy, index) of a non-core infinite side
  FiniteSide,    // (slot, block); block is -1 for a single K_{k,m}
  Degenerate,    // (slot)
  FrayedCentre,  // (slot)
  Layer,         // (tree node, layer)
  Dominating,    // (tree node)
  BlownUp,       // (parent vertex, template tree node)
};

struct Role {
  RoleKind kind = RoleKind::Core;
  int first = -1;
  int second = -1;

  std::string label() const;
  static Role parse(const std::string& label);
  friend bool operator==(const Role&, const Role&) = default;
};

/// A graph with a designated ordered core and a role label on every vertex.
/// Generalised graphs also carry their parent and, per vertex, the parent
/// vertex it was blown up from.
struct CoreMarkedGraph {
  Graph graph;
  std::vector<Vertex> core;
  std::vector<Role> roles;
  int k = 0;
  std::string family;

  std::shared_ptr<const CoreMarkedGraph> parent;
  std::vector<Vertex> origin;

  VertexSet core_set() const { return make_set(core); }
  std::vector<Vertex> with_role(RoleKind kind) const;
  /// First vertex carrying exactly this role, or -1.
  Vertex find(const Role& role) const;
};

/// Trees with named nodes, as used by blueprints and templates.
struct NamedTree {
  Graph tree;
  std::vector<std::string> names;

  Vertex node(const std::string& name) const;
  std::string name(Vertex v) const;
  /// Path tree from a string of single-character node names, e.g. "cabd".
  static NamedTree path(const std::string& nodes);
  /// Tree from a parent array; parent[root] == -1. Nodes are named by index.
  static NamedTree from_parents(const std::vector<int>& parent);
};

struct RegularBlueprint {
  NamedTree b;
  VertexSet d;
  Vertex c = 0;

  int k() const { return b.tree.order(); }
};

struct SingularBlueprint {
  int ell = 0;
  int f = 0;
  NamedTree b;
  VertexSet d;
  /// sigma[i - ell - f] for i in [ell + f, k): (node of b - d, parity bit).
  std::vector<std::pair<Vertex, int>> sigma;

  int k() const { return ell + f + b.tree.order(); }
};

/// Finite stand-in for a good sequence of cardinals: strictly ascending block sizes.
struct GoodSequence {
  std::vector<int> sizes;
  int total() const;
};

struct Type1Template {
  Graph tree;
  std::vector<Vertex> gamma;  // slot i -> node of tree
  Vertex c = 0;
};

/// Blow-up path for one blueprint node: nodes 0..length, with v0 = 0 and
/// v1 = length; bottom/top mark the segment receiving the tree neighbours.
struct PathBlowUp {
  int length = 0;
  int bottom = 0;
  int top = 0;
  std::map<Vertex, int> gamma;  // blueprint neighbour -> path node
};

struct Type2Template {
  std::map<Vertex, PathBlowUp> paths;  // keyed by node of b - d
  bool simple() const;
};

struct Type3Template {
  Type1Template t1;
  Type2Template t2;
};

void validate(const RegularBlueprint& bp);
void validate(const SingularBlueprint& bp);
void validate(const GoodSequence& seq);
void validate(const Type1Template& t, int k);
void validate(const Type2Template& t, const NamedTree& b, const VertexSet& d, int k);

CoreMarkedGraph gen_complete_bipartite(int k, int m);
CoreMarkedGraph gen_layer_product(const NamedTree& b, const VertexSet& d, int layers);
CoreMarkedGraph gen_regular_typical(const RegularBlueprint& bp, int layers);
CoreMarkedGraph gen_degenerate_frayed(int k, int ell, const GoodSequence& seq);
/// layers == 0 picks the smallest admissible count, 2*|seq| + |V(b)|.
CoreMarkedGraph gen_singular_typical(const SingularBlueprint& bp, const GoodSequence& seq,
                                     int layers = 0);
CoreMarkedGraph two_bipartite_matched(int m);

/// Layer at which slot i of block alpha is attached.
int singular_attachment_layer(const SingularBlueprint& bp, int slot, int alpha);

/// Replaces v by a copy of `tree`; each former neighbour w is joined to the
/// copy of gamma[w]. The copy takes v's position in the numbering.
Graph blow_up(const Graph& g, Vertex v, const Graph& tree, const std::map<Vertex, Vertex>& gamma);

struct BlowUp {
  Vertex v;
  Graph tree;
  std::map<Vertex, Vertex> gamma;
};

struct BlowUpResult {
  Graph graph;
  std::vector<Vertex> origin;     // new vertex -> old vertex
  std::vector<Vertex> tree_node;  // new vertex -> tree node, or -1
};

/// Applies a set of blow-ups at pairwise distinct vertices simultaneously.
BlowUpResult apply_blow_ups(const Graph& g, const std::vector<BlowUp>& ops);

struct GeneralisedK {
  int k;
  int m;
  Type1Template t1;
};
struct GeneralisedFrayed {
  int k;
  int ell;
  GoodSequence seq;
  Type1Template t1;
};
struct GeneralisedRegular {
  RegularBlueprint bp;
  int layers;
  Type2Template t2;
};
struct GeneralisedSingular {
  SingularBlueprint bp;
  GoodSequence seq;
  int layers;
  Type3Template t3;
};
using GeneralisedSpec =
    std::variant<GeneralisedK, GeneralisedFrayed, GeneralisedRegular, GeneralisedSingular>;

CoreMarkedGraph gen_generalised(const GeneralisedSpec& spec);

/// Position of a core vertex along its family's growth direction: the block
/// index for bipartite blocks, the layer for layered products.
int growth_index(const CoreMarkedGraph& g, Vertex v);

}  // namespace kset
