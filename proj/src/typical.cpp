#include "kset/typical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <type_traits>

namespace kset {

namespace {

const char* role_name(RoleKind kind) {
  switch (kind) {
    case RoleKind::Core: return "core";
    case RoleKind::InfiniteSide: return "infinite-side";
    case RoleKind::FiniteSide: return "finite-side";
    case RoleKind::Degenerate: return "degenerate";
    case RoleKind::FrayedCentre: return "frayed-centre";
    case RoleKind::Layer: return "layer";
    case RoleKind::Dominating: return "dominating";
    case RoleKind::BlownUp: return "blown-up";
  }
  return "?";
}

bool has_second(RoleKind kind) {
  return kind != RoleKind::Degenerate && kind != RoleKind::FrayedCentre &&
         kind != RoleKind::Dominating;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

std::string Role::label() const {
  std::string out = role_name(kind);
  out += "(" + std::to_string(first);
  if (has_second(kind) && !(kind == RoleKind::FiniteSide && second < 0))
    out += "," + std::to_string(second);
  return out + ")";
}

Role Role::parse(const std::string& label) {
  const auto open = label.find('(');
  require(open != std::string::npos && label.back() == ')', "malformed role label: " + label);
  const std::string name = label.substr(0, open);
  Role r;
  bool found = false;
  for (RoleKind k : {RoleKind::Core, RoleKind::InfiniteSide, RoleKind::FiniteSide,
                     RoleKind::Degenerate, RoleKind::FrayedCentre, RoleKind::Layer,
                     RoleKind::Dominating, RoleKind::BlownUp})
    if (name == role_name(k)) {
      r.kind = k;
      found = true;
    }
  require(found, "unknown role: " + name);
  std::string args = label.substr(open + 1, label.size() - open - 2);
  std::replace(args.begin(), args.end(), ',', ' ');
  std::istringstream in(args);
  require(static_cast<bool>(in >> r.first), "malformed role label: " + label);
  if (!(in >> r.second)) r.second = -1;
  return r;
}

std::vector<Vertex> CoreMarkedGraph::with_role(RoleKind kind) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v)
    if (roles[v].kind == kind) out.push_back(v);
  return out;
}

Vertex CoreMarkedGraph::find(const Role& role) const {
  for (Vertex v = 0; v < graph.order(); ++v)
    if (roles[v] == role) return v;
  return -1;
}

Vertex NamedTree::node(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  require(it != names.end(), "unknown tree node: " + name);
  return static_cast<Vertex>(it - names.begin());
}

std::string NamedTree::name(Vertex v) const { return names.at(v); }

NamedTree NamedTree::path(const std::string& nodes) {
  NamedTree t;
  t.tree = path_graph(static_cast<int>(nodes.size()));
  for (char ch : nodes) t.names.emplace_back(1, ch);
  require(std::set<std::string>(t.names.begin(), t.names.end()).size() == t.names.size(),
          "duplicate node name in path " + nodes);
  return t;
}

NamedTree NamedTree::from_parents(const std::vector<int>& parent) {
  NamedTree t;
  std::vector<Edge> es;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] >= 0) es.emplace_back(parent[v], static_cast<int>(v));
    t.names.push_back(std::to_string(v));
  }
  t.tree = Graph::from_edges(static_cast<int>(parent.size()), es);
  require(is_tree(t.tree), "parent array does not describe a tree");
  return t;
}

int GoodSequence::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

bool Type2Template::simple() const {
  return std::all_of(paths.begin(), paths.end(), [](const auto& entry) {
    return entry.second.bottom == 0 && entry.second.top == entry.second.length;
  });
}

void validate(const RegularBlueprint& bp) {
  const Graph& t = bp.b.tree;
  require(is_tree(t), "blueprint graph is not a tree");
  require(static_cast<int>(bp.b.names.size()) == t.order(), "blueprint names do not match tree");
  for (Vertex v : bp.d) {
    require(v >= 0 && v < t.order(), "blueprint leaf out of range");
    require(t.degree(v) <= 1, "blueprint set d contains a non-leaf");
  }
  require(static_cast<int>(bp.d.size()) < t.order(), "blueprint set d covers the whole tree");
  require(bp.c >= 0 && bp.c < t.order() && !contains(bp.d, bp.c), "blueprint node c invalid");
}

void validate(const SingularBlueprint& bp) {
  require(bp.ell >= 0 && bp.f >= 0, "negative blueprint parameter");
  const Graph& t = bp.b.tree;
  require(is_tree(t), "blueprint graph is not a tree");
  require(static_cast<int>(bp.b.names.size()) == t.order(), "blueprint names do not match tree");
  for (Vertex v : bp.d) {
    require(v >= 0 && v < t.order(), "blueprint leaf out of range");
    require(t.degree(v) <= 1, "blueprint set d contains a non-leaf");
  }
  require(static_cast<int>(bp.d.size()) < t.order(), "blueprint set d covers the whole tree");
  require(2 * static_cast<int>(bp.d.size()) <= t.order(), "singular blueprint needs 2|d| <= |b|");
  require(static_cast<int>(bp.sigma.size()) == t.order(), "sigma must be defined on [ell+f, k)");
  std::set<std::pair<Vertex, int>> seen;
  for (auto [node, bit] : bp.sigma) {
    require(node >= 0 && node < t.order() && !contains(bp.d, node), "sigma leaves b - d");
    require(bit == 0 || bit == 1, "sigma parity must be 0 or 1");
    require(seen.insert({node, bit}).second, "sigma is not injective");
  }
}

void validate(const GoodSequence& seq) {
  require(!seq.sizes.empty(), "good sequence is empty");
  for (std::size_t i = 0; i < seq.sizes.size(); ++i) {
    require(seq.sizes[i] >= 1, "good sequence entries must be positive");
    require(i == 0 || seq.sizes[i - 1] < seq.sizes[i], "good sequence must be strictly ascending");
  }
}

void validate(const Type1Template& t, int k) {
  require(is_tree(t.tree), "template graph is not a tree");
  require(t.tree.order() <= 2 * k + 1, "template tree has more than 2k+1 nodes");
  require(static_cast<int>(t.gamma.size()) == k, "template map must be defined on [0, k)");
  require(t.c >= 0 && t.c < t.tree.order(), "template node c out of range");
  for (Vertex x : t.gamma) require(x >= 0 && x < t.tree.order(), "template map leaves the tree");
  for (Vertex v = 0; v < t.tree.order(); ++v) {
    const int deg = t.tree.degree(v);
    if (deg == 1 || deg == 2)
      require(v == t.c || std::find(t.gamma.begin(), t.gamma.end(), v) != t.gamma.end(),
              "template node of degree 1 or 2 is neither c nor in the image of gamma");
  }
}

void validate(const Type2Template& t, const NamedTree& b, const VertexSet& d, int k) {
  for (Vertex v = 0; v < b.tree.order(); ++v) {
    if (contains(d, v)) {
      require(!t.paths.contains(v), "type-2 template has a path for a node of d");
      continue;
    }
    auto it = t.paths.find(v);
    require(it != t.paths.end(), "type-2 template lacks a path for node " + b.name(v));
    const PathBlowUp& p = it->second;
    require(p.length >= 0 && p.length <= k + 2, "template path longer than k+2");
    require(p.bottom >= 0 && p.bottom <= 1 && p.bottom <= p.top, "template bottom node invalid");
    require(p.top <= p.length && p.top >= p.length - 1, "template top node invalid");
    for (Vertex w : b.tree.neighbours(v)) {
      auto g = p.gamma.find(w);
      require(g != p.gamma.end(), "template path map not total on the neighbourhood");
      require(g->second >= p.bottom && g->second <= p.top,
              "template path map leaves the bottom-top segment");
    }
    require(p.gamma.size() == b.tree.neighbours(v).size(), "template path map has extra keys");
  }
}

CoreMarkedGraph gen_complete_bipartite(int k, int m) {
  require(k >= 0 && m >= 1, "complete bipartite needs k >= 0 and m >= 1");
  CoreMarkedGraph out;
  out.k = k;
  out.family = "complete-bipartite";
  std::vector<Edge> es;
  for (int j = 0; j < m; ++j) {
    out.core.push_back(j);
    out.roles.push_back({RoleKind::Core, 0, j});
    for (int i = 0; i < k; ++i) es.emplace_back(j, m + i);
  }
  for (int i = 0; i < k; ++i) out.roles.push_back({RoleKind::FiniteSide, i, -1});
  out.graph = Graph::from_edges(m + k, es);
  return out;
}

namespace {

// Layer product laid out at `base`: non-d nodes layer-major, then one
// dominating vertex per node of d.
struct LayerLayout {
  int base;
  int layers;
  std::vector<int> rank;  // node -> index among non-d nodes, or among d
  VertexSet d;
  int width;

  Vertex at(Vertex node, int layer) const {
    if (contains(d, node)) return base + width * layers + rank[node];
    return base + layer * width + rank[node];
  }
  int count() const { return width * layers + static_cast<int>(d.size()); }
};

LayerLayout make_layout(const NamedTree& b, const VertexSet& d, int layers, int base) {
  LayerLayout lay{base, layers, std::vector<int>(static_cast<std::size_t>(b.tree.order())), d, 0};
  int dominating = 0;
  for (Vertex v = 0; v < b.tree.order(); ++v)
    lay.rank[v] = contains(d, v) ? dominating++ : lay.width++;
  return lay;
}

void add_layer_product(const NamedTree& b, const LayerLayout& lay, std::vector<Edge>& es,
                       std::vector<Role>& roles) {
  for (int n = 0; n < lay.layers; ++n)
    for (Vertex v = 0; v < b.tree.order(); ++v)
      if (!contains(lay.d, v)) roles[lay.at(v, n)] = {RoleKind::Layer, v, n};
  for (Vertex v : lay.d) roles[lay.at(v, 0)] = {RoleKind::Dominating, v, -1};
  for (int n = 0; n < lay.layers; ++n)
    for (auto [u, v] : b.tree.edges()) es.emplace_back(lay.at(u, n), lay.at(v, n));
  for (int n = 0; n + 1 < lay.layers; ++n)
    for (Vertex v = 0; v < b.tree.order(); ++v)
      if (!contains(lay.d, v)) es.emplace_back(lay.at(v, n), lay.at(v, n + 1));
}

void check_pair(const NamedTree& b, const VertexSet& d) {
  require(is_tree(b.tree), "blueprint graph is not a tree");
  for (Vertex v : d) require(v >= 0 && v < b.tree.order() && b.tree.degree(v) <= 1,
                             "blueprint set d must consist of leaves");
  require(static_cast<int>(d.size()) < b.tree.order(), "blueprint set d covers the whole tree");
}

}  // namespace

CoreMarkedGraph gen_layer_product(const NamedTree& b, const VertexSet& d, int layers) {
  require(layers >= 1, "layer product needs at least one layer");
  check_pair(b, d);
  const LayerLayout lay = make_layout(b, d, layers, 0);
  CoreMarkedGraph out;
  out.k = b.tree.order();
  out.family = "layer-product";
  out.roles.resize(static_cast<std::size_t>(lay.count()));
  std::vector<Edge> es;
  add_layer_product(b, lay, es, out.roles);
  out.graph = Graph::from_edges(lay.count(), es);
  return out;
}

CoreMarkedGraph gen_regular_typical(const RegularBlueprint& bp, int layers) {
  validate(bp);
  CoreMarkedGraph out = gen_layer_product(bp.b, bp.d, layers);
  out.family = "regular-typical";
  const LayerLayout lay = make_layout(bp.b, bp.d, layers, 0);
  for (int n = 0; n < layers; ++n) out.core.push_back(lay.at(bp.c, n));
  return out;
}

namespace {

// Numbering shared by frayed and singular graphs: the Z blocks, then the
// degenerate vertices, then the remaining finite-side vertices block by
// block, then the frayed centres.
struct FrayedLayout {
  std::vector<int> block_start;
  int blocks_end = 0;
  int degenerate_start = 0;
  int leaf_start = 0;
  int leaf_slots = 0;  // slots per block that get their own vertex
  int centre_start = 0;
  int centres = 0;
  int end = 0;
};

FrayedLayout make_frayed_layout(int ell, int own_slots, int centres, const GoodSequence& seq) {
  FrayedLayout lay;
  int at = 0;
  for (int s : seq.sizes) {
    lay.block_start.push_back(at);
    at += s;
  }
  lay.blocks_end = at;
  lay.degenerate_start = at;
  at += ell;
  lay.leaf_start = at;
  lay.leaf_slots = own_slots;
  at += own_slots * static_cast<int>(seq.sizes.size());
  lay.centre_start = at;
  lay.centres = centres;
  at += centres;
  lay.end = at;
  return lay;
}

}  // namespace

CoreMarkedGraph gen_degenerate_frayed(int k, int ell, const GoodSequence& seq) {
  require(ell >= 0 && ell <= k, "degenerate count must lie in [0, k]");
  validate(seq);
  const int blocks = static_cast<int>(seq.sizes.size());
  const FrayedLayout lay = make_frayed_layout(ell, k - ell, k - ell, seq);
  CoreMarkedGraph out;
  out.k = k;
  out.family = "degenerate-frayed";
  out.roles.resize(static_cast<std::size_t>(lay.end));
  std::vector<Edge> es;
  for (int i = 0; i < ell; ++i) out.roles[lay.degenerate_start + i] = {RoleKind::Degenerate, i, -1};
  for (int i = ell; i < k; ++i)
    out.roles[lay.centre_start + i - ell] = {RoleKind::FrayedCentre, i, -1};
  for (int a = 0; a < blocks; ++a) {
    for (int i = ell; i < k; ++i) {
      const Vertex y = lay.leaf_start + a * lay.leaf_slots + (i - ell);
      out.roles[y] = {RoleKind::FiniteSide, i, a};
      es.emplace_back(y, lay.centre_start + i - ell);
    }
    for (int j = 0; j < seq.sizes[a]; ++j) {
      const Vertex z = lay.block_start[a] + j;
      out.core.push_back(z);
      out.roles[z] = {RoleKind::Core, a, j};
      for (int i = 0; i < ell; ++i) es.emplace_back(z, lay.degenerate_start + i);
      for (int i = ell; i < k; ++i) es.emplace_back(z, lay.leaf_start + a * lay.leaf_slots + i - ell);
    }
  }
  out.graph = Graph::from_edges(lay.end, es);
  return out;
}

int singular_attachment_layer(const SingularBlueprint& bp, int slot, int alpha) {
  const auto [node, bit] = bp.sigma.at(static_cast<std::size_t>(slot - bp.ell - bp.f));
  (void)node;
  return 2 * alpha + bit + bp.b.tree.order();
}

CoreMarkedGraph gen_singular_typical(const SingularBlueprint& bp, const GoodSequence& seq,
                                     int layers) {
  validate(bp);
  validate(seq);
  const int k = bp.k();
  const int blocks = static_cast<int>(seq.sizes.size());
  const int needed = 2 * blocks + bp.b.tree.order();
  if (layers == 0) layers = needed;
  require(layers >= needed, "singular typical graph needs at least 2|seq| + |b| layers");

  const int lf = bp.ell + bp.f;
  const FrayedLayout fl = make_frayed_layout(bp.ell, bp.f, bp.f, seq);
  const LayerLayout ll = make_layout(bp.b, bp.d, layers, fl.end);
  CoreMarkedGraph out;
  out.k = k;
  out.family = "singular-typical";
  out.roles.resize(static_cast<std::size_t>(fl.end + ll.count()));
  std::vector<Edge> es;
  for (int i = 0; i < bp.ell; ++i) out.roles[fl.degenerate_start + i] = {RoleKind::Degenerate, i, -1};
  for (int i = bp.ell; i < lf; ++i)
    out.roles[fl.centre_start + i - bp.ell] = {RoleKind::FrayedCentre, i, -1};
  for (int a = 0; a < blocks; ++a) {
    for (int i = bp.ell; i < lf; ++i) {
      const Vertex y = fl.leaf_start + a * fl.leaf_slots + (i - bp.ell);
      out.roles[y] = {RoleKind::FiniteSide, i, a};
      es.emplace_back(y, fl.centre_start + i - bp.ell);
    }
    for (int j = 0; j < seq.sizes[a]; ++j) {
      const Vertex z = fl.block_start[a] + j;
      out.core.push_back(z);
      out.roles[z] = {RoleKind::Core, a, j};
      for (int i = 0; i < bp.ell; ++i) es.emplace_back(z, fl.degenerate_start + i);
      for (int i = bp.ell; i < lf; ++i) es.emplace_back(z, fl.leaf_start + a * fl.leaf_slots + i - bp.ell);
      for (int i = lf; i < k; ++i) {
        const Vertex node = bp.sigma[i - lf].first;
        es.emplace_back(z, ll.at(node, singular_attachment_layer(bp, i, a)));
      }
    }
  }
  add_layer_product(bp.b, ll, es, out.roles);
  out.graph = Graph::from_edges(fl.end + ll.count(), es);
  return out;
}

CoreMarkedGraph two_bipartite_matched(int m) {
  require(m >= 1, "matched bipartite pair needs m >= 1");
  CoreMarkedGraph out;
  out.k = 4;
  out.family = "two-bipartite-matched";
  out.roles.resize(static_cast<std::size_t>(2 * m + 4));
  std::vector<Edge> es;
  for (int j = 0; j < m; ++j) {
    out.core.push_back(j);
    out.roles[j] = {RoleKind::Core, 0, j};
    out.roles[m + j] = {RoleKind::InfiniteSide, 1, j};
    es.emplace_back(j, m + j);
    for (int copy = 0; copy < 2; ++copy)
      for (int i = 0; i < 2; ++i) es.emplace_back(copy * m + j, 2 * m + 2 * copy + i);
  }
  for (int copy = 0; copy < 2; ++copy)
    for (int i = 0; i < 2; ++i) out.roles[2 * m + 2 * copy + i] = {RoleKind::FiniteSide, i, copy};
  out.graph = Graph::from_edges(2 * m + 4, es);
  return out;
}

BlowUpResult apply_blow_ups(const Graph& g, const std::vector<BlowUp>& ops) {
  const int n = g.order();
  std::vector<const BlowUp*> op_at(static_cast<std::size_t>(n), nullptr);
  for (const BlowUp& op : ops) {
    require(op.v >= 0 && op.v < n, "blow-up vertex out of range");
    require(op_at[op.v] == nullptr, "two blow-ups at the same vertex");
    require(is_tree(op.tree), "blow-up graph is not a tree");
    for (Vertex w : g.neighbours(op.v)) {
      auto it = op.gamma.find(w);
      require(it != op.gamma.end(), "blow-up map is not total on the neighbourhood");
      require(it->second >= 0 && it->second < op.tree.order(), "blow-up map leaves the tree");
    }
    op_at[op.v] = &op;
  }
  BlowUpResult out;
  std::vector<Vertex> first(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    first[v] = static_cast<Vertex>(out.origin.size());
    const int copies = op_at[v] ? op_at[v]->tree.order() : 1;
    for (int t = 0; t < copies; ++t) {
      out.origin.push_back(v);
      out.tree_node.push_back(op_at[v] ? t : -1);
    }
  }
  auto image = [&](Vertex v, Vertex towards) {
    return op_at[v] ? first[v] + op_at[v]->gamma.at(towards) : first[v];
  };
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(image(u, v), image(v, u));
  for (Vertex v = 0; v < n; ++v)
    if (op_at[v])
      for (auto [a, b] : op_at[v]->tree.edges()) es.emplace_back(first[v] + a, first[v] + b);
  out.graph = Graph::from_edges(static_cast<int>(out.origin.size()), es);
  return out;
}

Graph blow_up(const Graph& g, Vertex v, const Graph& tree, const std::map<Vertex, Vertex>& gamma) {
  return apply_blow_ups(g, {BlowUp{v, tree, gamma}}).graph;
}

namespace {

Graph path_tree(const PathBlowUp& p) { return path_graph(p.length + 1); }

// Blow-ups O2 on the layer vertices of a (possibly embedded) layer product.
// `extra` supplies the image of neighbours outside the layer product.
template <typename Extra>
void layer_blow_ups(const CoreMarkedGraph& parent, const NamedTree& b, const VertexSet& d,
                    const Type2Template& t2, Extra extra, std::vector<BlowUp>& ops) {
  const Graph& g = parent.graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Role& r = parent.roles[v];
    if (r.kind != RoleKind::Layer) continue;
    const Vertex node = r.first;
    const int n = r.second;
    const PathBlowUp& p = t2.paths.at(node);
    BlowUp op{v, path_tree(p), {}};
    for (Vertex w : g.neighbours(v)) {
      const Role& rw = parent.roles[w];
      if (rw.kind == RoleKind::Layer && rw.first == node)
        op.gamma[w] = rw.second == n + 1 ? p.top : p.bottom;
      else if (rw.kind == RoleKind::Layer || rw.kind == RoleKind::Dominating)
        op.gamma[w] = p.gamma.at(rw.first);
      else
        op.gamma[w] = extra(n, p);
    }
    ops.push_back(std::move(op));
  }
  (void)b;
  (void)d;
}

CoreMarkedGraph finish(std::shared_ptr<const CoreMarkedGraph> parent, BlowUpResult r,
                       const std::string& family,
                       const std::function<bool(Vertex, Vertex)>& in_core) {
  CoreMarkedGraph out;
  out.graph = std::move(r.graph);
  out.k = parent->k;
  out.family = family;
  out.origin = r.origin;
  for (std::size_t v = 0; v < out.origin.size(); ++v) {
    const Vertex o = out.origin[v];
    const Vertex t = r.tree_node[v];
    out.roles.push_back(t < 0 ? parent->roles[o] : Role{RoleKind::BlownUp, o, t});
  }
  // Core in the parent's core order.
  for (Vertex pc : parent->core)
    for (std::size_t v = 0; v < out.origin.size(); ++v)
      if (out.origin[v] == pc && in_core(pc, r.tree_node[v])) out.core.push_back(static_cast<Vertex>(v));
  out.parent = std::move(parent);
  return out;
}

std::vector<BlowUp> core_blow_ups(const CoreMarkedGraph& parent, const Type1Template& t1,
                                  int slots) {
  std::vector<BlowUp> ops;
  for (Vertex z : parent.core) {
    BlowUp op{z, t1.tree, {}};
    for (Vertex w : parent.graph.neighbours(z)) {
      const Role& rw = parent.roles[w];
      int slot = -1;
      if (rw.kind == RoleKind::FiniteSide || rw.kind == RoleKind::Degenerate) slot = rw.first;
      op.gamma[w] = slot >= 0 && slot < slots ? t1.gamma[slot] : t1.c;
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace

CoreMarkedGraph gen_generalised(const GeneralisedSpec& spec) {
  return std::visit(
      [](const auto& s) -> CoreMarkedGraph {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, GeneralisedK>) {
          validate(s.t1, s.k);
          auto parent = std::make_shared<const CoreMarkedGraph>(gen_complete_bipartite(s.k, s.m));
          auto r = apply_blow_ups(parent->graph, core_blow_ups(*parent, s.t1, s.k));
          const Vertex c = s.t1.c;
          return finish(parent, std::move(r), "generalised-complete-bipartite",
                        [c](Vertex, Vertex t) { return t == c; });
        } else if constexpr (std::is_same_v<S, GeneralisedFrayed>) {
          validate(s.t1, s.k);
          auto parent =
              std::make_shared<const CoreMarkedGraph>(gen_degenerate_frayed(s.k, s.ell, s.seq));
          auto r = apply_blow_ups(parent->graph, core_blow_ups(*parent, s.t1, s.k));
          const Vertex c = s.t1.c;
          return finish(parent, std::move(r), "generalised-degenerate-frayed",
                        [c](Vertex, Vertex t) { return t == c; });
        } else if constexpr (std::is_same_v<S, GeneralisedRegular>) {
          validate(s.bp);
          validate(s.t2, s.bp.b, s.bp.d, s.bp.k());
          auto parent = std::make_shared<const CoreMarkedGraph>(gen_regular_typical(s.bp, s.layers));
          std::vector<BlowUp> ops;
          layer_blow_ups(*parent, s.bp.b, s.bp.d, s.t2,
                         [](int, const PathBlowUp&) -> Vertex {
                           throw PreconditionError("unexpected neighbour of a layer vertex");
                         },
                         ops);
          auto r = apply_blow_ups(parent->graph, ops);
          const int v1 = s.t2.paths.at(s.bp.c).length;
          return finish(parent, std::move(r), "generalised-regular-typical",
                        [v1](Vertex, Vertex t) { return t == v1; });
        } else {
          validate(s.bp);
          const int lf = s.bp.ell + s.bp.f;
          validate(s.t3.t1, lf);
          validate(s.t3.t2, s.bp.b, s.bp.d, s.bp.k() - lf);
          auto parent =
              std::make_shared<const CoreMarkedGraph>(gen_singular_typical(s.bp, s.seq, s.layers));
          std::vector<BlowUp> ops = core_blow_ups(*parent, s.t3.t1, lf);
          layer_blow_ups(*parent, s.bp.b, s.bp.d, s.t3.t2,
                         [](int n, const PathBlowUp& p) { return n % 2 == 0 ? p.length : 0; },
                         ops);
          std::sort(ops.begin(), ops.end(),
                    [](const BlowUp& a, const BlowUp& b) { return a.v < b.v; });
          auto r = apply_blow_ups(parent->graph, ops);
          const Vertex c = s.t3.t1.c;
          return finish(parent, std::move(r), "generalised-singular-typical",
                        [c](Vertex, Vertex t) { return t == c; });
        }
      },
      spec);
}

int growth_index(const CoreMarkedGraph& g, Vertex v) {
  const Role& r = g.roles.at(v);
  switch (r.kind) {
    case RoleKind::Core:
    case RoleKind::InfiniteSide:
      return g.family == "complete-bipartite" || g.family == "two-bipartite-matched" ? r.second
                                                                                    : r.first;
    case RoleKind::Layer: return r.second;
    case RoleKind::BlownUp: return growth_index(*g.parent, r.first);
    default: return -1;
  }
}

}  // namespace kset
