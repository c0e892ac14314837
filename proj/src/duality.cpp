#include "kset/duality.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <unordered_map>

#include "kset/combinatorics.hpp"
#include "kset/menger.hpp"

namespace kset {

namespace {

using Mask = std::uint32_t;

class WidthSearch {
 public:
  WidthSearch(const Graph& g, int k, const std::function<int(const VertexSet&)>& cost)
      : n_(g.order()), k_(k), cost_fn_(cost) {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
  }

  WidthResult run() {
    const Mask all = n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1);
    WidthResult out;
    out.value = best(all, adj_);
    out.td = build(all, adj_);
    return out;
  }

 private:
  struct Entry {
    int value;
    Mask choice;
  };

  int cost(Mask m) {
    auto it = cost_memo_.find(m);
    if (it != cost_memo_.end()) return it->second;
    const int c = cost_fn_(from_mask(m));
    cost_memo_.emplace(m, c);
    return c;
  }

  static std::string key(Mask v, const std::vector<Mask>& adj) {
    std::string out(reinterpret_cast<const char*>(&v), sizeof v);
    for (int x = 0; v >> x; ++x)
      if (v >> x & 1) {
        const Mask row = adj[x] & v;
        out.append(reinterpret_cast<const char*>(&row), sizeof row);
      }
    return out;
  }

  static bool connected(Mask x, const std::vector<Mask>& adj) {
    Mask seen = x & (~x + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= x & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == x;
  }

  static Mask boundary(Mask x, Mask v, const std::vector<Mask>& adj) {
    Mask out = 0;
    for (Mask f = x; f; f &= f - 1) out |= adj[std::countr_zero(f)];
    return out & v & ~x;
  }

  static std::vector<Mask> with_clique(std::vector<Mask> adj, Mask s) {
    for (Mask f = s; f; f &= f - 1) {
      const int x = std::countr_zero(f);
      adj[x] |= s & ~(Mask{1} << x);
    }
    return adj;
  }

  int best(Mask v, const std::vector<Mask>& adj) {
    const std::string k = key(v, adj);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second.value;
    Entry e{cost(v), 0};
    for (Mask x = (v - 1) & v; x; x = (x - 1) & v) {
      const Mask s = boundary(x, v, adj);
      if (std::popcount(s) >= k_ || (x | s) == v) continue;
      if (!connected(x, adj)) continue;
      const int here = cost(x | s);
      if (here >= e.value) continue;
      const int rest = best(v & ~x, with_clique(adj, s));
      if (std::max(here, rest) < e.value) e = {std::max(here, rest), x};
    }
    memo_.emplace(k, e);
    return e.value;
  }

  TreeDecomposition build(Mask v, const std::vector<Mask>& adj) {
    best(v, adj);
    const Entry e = memo_.at(key(v, adj));
    if (e.choice == 0) return {Graph(1), {from_mask(v)}};
    const Mask s = boundary(e.choice, v, adj);
    TreeDecomposition rest = build(v & ~e.choice, with_clique(adj, s));
    const VertexSet sep = from_mask(s);
    int host = 0;
    while (!is_subset(sep, rest.parts[host])) ++host;
    std::vector<Edge> es = rest.tree.edges();
    const int leaf = rest.tree.order();
    es.emplace_back(host, leaf);
    rest.parts.push_back(from_mask(e.choice | s));
    rest.tree = Graph::from_edges(leaf + 1, es);
    return rest;
  }

  int n_;
  int k_;
  const std::function<int(const VertexSet&)>& cost_fn_;
  std::vector<Mask> adj_;
  std::unordered_map<std::string, Entry> memo_;
  std::unordered_map<Mask, int> cost_memo_;
};

void guard(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw PreconditionError(std::string(what) + ": graph order exceeds " + std::to_string(limit));
}

}  // namespace

WidthResult min_width_decomposition(const Graph& g, int k,
                                    const std::function<int(const VertexSet&)>& cost) {
  guard(g, 12, "min_width_decomposition");
  return WidthSearch(g, k, cost).run();
}

int k_tree_width(const Graph& g, int k) {
  return min_width_decomposition(g, k, [](const VertexSet& p) { return static_cast<int>(p.size()); })
      .value;
}

int tree_width(const Graph& g) {
  guard(g, 16, "tree_width");
  const int n = g.order();
  if (n == 0) return -1;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  // q(s, v): vertices outside s ∪ {v} reachable from v through s.
  auto q = [&](Mask s, int v) {
    Mask seen = Mask{1} << v, frontier = seen, out = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~seen;
      out |= next & ~s;
      frontier = next & s;
      seen |= next;
    }
    return std::popcount(out);
  };
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<int> tw(std::size_t{1} << n, INT_MAX);
  tw[0] = -1;
  for (Mask s = 1; s <= all; ++s)
    for (Mask f = s; f; f &= f - 1) {
      const int v = std::countr_zero(f);
      const Mask rest = s & ~(Mask{1} << v);
      tw[s] = std::min(tw[s], std::max(tw[rest], q(rest, v)));
    }
  return tw[all];
}

bool verify_td_certificate(const Graph& g, const VertexSet& a, int k, int m,
                           const TreeDecomposition& td) {
  if (!validate_td(g, td)) throw PreconditionError("invalid tree-decomposition");
  if (td.tree.order() > 1 && adhesion(td) >= k) return false;
  for (const VertexSet& p : td.parts)
    if (min_separator_size(g, a, p) >= m) return false;
  return true;
}

DualityReport check_duality(const Graph& g, const VertexSet& a, int k, int m) {
  if (m < k) throw PreconditionError("check_duality needs m >= k");
  guard(g, 12, "check_duality");
  DualityReport r;
  const SubsetResult best_set = max_k_connected_subset(g, a, k);
  r.max_kconn = best_set.size;
  r.max_kconn_set = best_set.set;
  if (best_set.size >= m && best_set.size >= k) r.set_certificate = best_set.set;
  r.ktw = k_tree_width(g, k);
  r.tw = tree_width(g);
  const WidthResult sep = min_width_decomposition(
      g, k, [&](const VertexSet& p) { return min_separator_size(g, a, p); });
  r.best_separability = sep.value;
  r.best_td = sep.td;
  for (const VertexSet& p : sep.td.parts) r.separability.push_back(min_separator_size(g, a, p));
  if (sep.value < m) r.td_certificate = sep.td;
  return r;
}

BoundsReport verify_sec1_bounds(const Graph& g, int k) {
  guard(g, 12, "verify_sec1_bounds");
  BoundsReport r;
  r.k = k;
  const VertexSet all = full_set(g.order());
  r.s = max_k_connected_subset(g, all, k + 1).size;
  r.s_prime = max_k_connected_subset(g, all, k).size;
  r.w = k_tree_width(g, k);
  r.tw = tree_width(g);
  r.djgt_ok = r.s >= 3 * k ? r.tw >= k : r.tw < 4 * k;
  // The upper bound vanishes at k = 1, so the bounds are only read for k >= 2.
  r.gj_applicable = r.s_prime >= k && k >= 2;
  if (r.gj_applicable) {
    const double upper = binomial(r.w + 1, k - 1) * (k - 1);
    r.gj_ok = r.w <= r.s_prime && r.s_prime <= upper;
  }
  r.convention =
      "w is the largest part of an optimal decomposition of adhesion < k (cardinal bound w + 1)";
  return r;
}

TransferReport inseparable_transfer(const Graph& g, const VertexSet& a, const VertexSet& b, int k) {
  if (static_cast<int>(b.size()) < k || !is_k_connected(g, b, k).ok)
    throw PreconditionError("b must be k-connected");
  TransferReport r;
  r.paths = menger(g, a, b).count;
  r.subset = max_k_connected_subset(g, a, k);
  return r;
}

}  // namespace kset
