#include "kset/kconn.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "kset/combinatorics.hpp"
#include "kset/menger.hpp"

namespace kset {

namespace {

void check_size(const VertexSet& a, int k) {
  if (static_cast<int>(a.size()) < k)
    throw PreconditionError("a k-connected set needs at least k vertices");
}

// Subset of `counts` (by index) whose sum lies in [lo, hi], if any.
std::optional<std::vector<char>> split(const std::vector<int>& counts, int lo, int hi) {
  int total = 0;
  for (int c : counts) total += c;
  // from[i][s]: sum s reachable with the first i items; choice recorded.
  std::vector<std::vector<char>> reach(counts.size() + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (int s = 0; s <= total; ++s)
      if (reach[i][s]) {
        reach[i + 1][s] = 1;
        reach[i + 1][s + counts[i]] = 1;
      }
  for (int s = lo; s <= hi && s <= total; ++s) {
    if (!reach[counts.size()][s]) continue;
    std::vector<char> take(counts.size(), 0);
    int cur = s;
    for (std::size_t i = counts.size(); i-- > 0;) {
      if (reach[i][cur]) continue;
      take[i] = 1;
      cur -= counts[i];
    }
    return take;
  }
  return std::nullopt;
}

VertexSet pick(const VertexSet& first, const VertexSet& then, std::size_t count) {
  VertexSet out;
  for (const VertexSet* src : {&first, &then})
    for (Vertex v : *src)
      if (out.size() < count) out.push_back(v);
  return make_set(out);
}

}  // namespace

KConnVerdict is_k_connected_by_pairs(const Graph& g, const VertexSet& a, int k) {
  check_size(a, k);
  MengerSolver solver(g);
  KConnVerdict out;
  for (int l = 1; l <= k && out.ok; ++l) {
    const auto subs = subsets_of_size(a, l);
    for (std::size_t i = 0; i < subs.size() && out.ok; ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        if (solver.max_paths(subs[i], subs[j], l) < l) {
          out.ok = false;
          out.witness = KConnWitness{subs[i], subs[j], solver.solve(subs[i], subs[j]).separator};
          break;
        }
  }
  return out;
}

KConnVerdict is_k_connected_by_separators(const Graph& g, const VertexSet& a, int k) {
  check_size(a, k);
  std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : a) in_a[v] = 1;
  const VertexSet all = full_set(g.order());
  KConnVerdict out;
  for (int s = 0; s < k && out.ok; ++s) {
    for_each_subset(all, s, [&](const VertexSet& sep) {
      int xs = 0;
      for (Vertex v : sep) xs += in_a[v];
      const int t = s + 1 - xs;
      std::vector<VertexSet> comps;
      std::vector<int> counts;
      int total = 0;
      for (VertexSet& c : components_without(g, sep)) {
        int x = 0;
        for (Vertex v : c) x += in_a[v];
        if (x == 0) continue;
        counts.push_back(x);
        total += x;
        comps.push_back(std::move(c));
      }
      if (total < 2 * t) return true;
      auto take = split(counts, t, total - t);
      if (!take) return true;
      VertexSet side_a, side_b;
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (Vertex v : comps[i])
          if (in_a[v]) (take->at(i) ? side_a : side_b).push_back(v);
      const VertexSet sep_a = set_intersection(sep, a);
      out.ok = false;
      out.witness = KConnWitness{pick(make_set(side_a), sep_a, s + 1),
                                 pick(make_set(side_b), sep_a, s + 1), sep};
      return false;
    });
  }
  return out;
}

KConnVerdict is_k_connected(const Graph& g, const VertexSet& a, int k) {
  check_size(a, k);
  if (k <= 0) return {};
  const int n = g.order();
  const int x = static_cast<int>(a.size());
  double pair_cost = 0, sep_cost = 0;
  for (int l = 1; l <= k; ++l) pair_cost += binomial(x, l) * binomial(x, l) / 2 * l;
  for (int s = 0; s < k; ++s) sep_cost += binomial(n, s);
  return pair_cost <= sep_cost ? is_k_connected_by_pairs(g, a, k)
                               : is_k_connected_by_separators(g, a, k);
}

namespace {

// Precomputed small separators of a graph with at most 64 vertices, for
// testing many candidate sets against the same host.
class SeparatorTable {
 public:
  SeparatorTable(const Graph& g, int k) {
    const VertexSet all = full_set(g.order());
    for (int s = 0; s < k; ++s)
      for_each_subset(all, s, [&](const VertexSet& sep) {
        auto comps = components_without(g, sep);
        if (comps.size() < 2) return true;
        Entry e{to_mask(sep), s, {}};
        for (const VertexSet& c : comps) e.comps.push_back(to_mask(c));
        entries_.push_back(std::move(e));
        return true;
      });
  }

  bool connected(std::uint64_t x) const {
    for (const Entry& e : entries_) {
      const int t = e.order + 1 - std::popcount(x & e.sep);
      int total = 0;
      std::uint64_t reach = 1;
      for (std::uint64_t c : e.comps) {
        const int cnt = std::popcount(x & c);
        if (cnt == 0) continue;
        total += cnt;
        reach |= reach << cnt;
      }
      if (total < 2 * t) continue;
      for (int s = t; s <= total - t; ++s)
        if (reach >> s & 1) return false;
    }
    return true;
  }

 private:
  struct Entry {
    std::uint64_t sep;
    int order;
    std::vector<std::uint64_t> comps;
  };
  std::vector<Entry> entries_;
};

}  // namespace

SubsetResult max_k_connected_subset(const Graph& g, const VertexSet& a, int k) {
  if (k <= 0) return {static_cast<int>(a.size()), a};
  const int n = g.order();
  double table_size = 0;
  for (int s = 0; s < k; ++s) table_size += binomial(n, s);
  std::optional<SeparatorTable> table;
  if (n <= 64 && table_size <= 2e6) table.emplace(g, k);
  auto ok = [&](const VertexSet& y) {
    return table ? table->connected(to_mask(y)) : is_k_connected(g, y, k).ok;
  };
  for (int size = static_cast<int>(a.size()); size >= std::max(k, 1); --size) {
    std::optional<VertexSet> found;
    for_each_subset(a, size, [&](const VertexSet& y) {
      if (!ok(y)) return true;
      found = y;
      return false;
    });
    if (found) return {size, *found};
  }
  return {k - 1, {}};
}

namespace {

// Smallest subtree of the spanning forest containing u: a BFS tree of u's
// component with non-u leaves pruned repeatedly.
Graph minimal_tree(const Graph& g, const VertexSet& u, std::vector<char>& alive) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<Vertex> queue{u.front()};
  parent[u.front()] = -1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Vertex w : g.neighbours(queue[h]))
      if (parent[w] == -2) {
        parent[w] = queue[h];
        queue.push_back(w);
      }
  std::vector<Edge> es;
  for (Vertex v : queue)
    if (parent[v] >= 0) es.emplace_back(parent[v], v);
  Graph t = Graph::from_edges(n, es);
  alive.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (Vertex v : queue) {
    alive[v] = 1;
    deg[v] = t.degree(v);
  }
  std::vector<Vertex> leaves;
  for (Vertex v : queue)
    if (deg[v] <= 1 && !contains(u, v)) leaves.push_back(v);
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex w : t.neighbours(v))
      if (alive[w] && --deg[w] <= 1 && !contains(u, w)) leaves.push_back(w);
  }
  std::vector<Edge> kept;
  for (auto [x, y] : t.edges())
    if (alive[x] && alive[y]) kept.emplace_back(x, y);
  return Graph::from_edges(n, kept);
}

// Path from `from` into the branch entered at `first`, ending at the nearest u-vertex.
std::vector<Vertex> leg(const Graph& t, const VertexSet& u, Vertex from, Vertex first) {
  std::vector<int> parent(static_cast<std::size_t>(t.order()), -2);
  parent[from] = -1;
  parent[first] = from;
  std::vector<Vertex> queue{first};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex v = queue[h];
    if (contains(u, v)) {
      std::vector<Vertex> out;
      for (Vertex x = v; x != -1; x = parent[x]) out.push_back(x);
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (Vertex w : t.neighbours(v))
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  return {};
}

// Path of the tree carrying the most u-vertices.
std::vector<Vertex> best_tree_path(const Graph& t, const VertexSet& u, const std::vector<char>& alive) {
  std::vector<Vertex> best;
  int best_count = -1;
  // Trees are small here; try every endpoint pair through a BFS per root.
  for (Vertex r = 0; r < t.order(); ++r) {
    if (!alive[r] || t.degree(r) > 1) continue;
    std::vector<int> parent(static_cast<std::size_t>(t.order()), -2), count(parent.size(), 0);
    parent[r] = -1;
    count[r] = contains(u, r);
    std::vector<Vertex> queue{r};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      if (count[v] > best_count) {
        best_count = count[v];
        best.clear();
        for (Vertex x = v; x != -1; x = parent[x]) best.push_back(x);
      }
      for (Vertex w : t.neighbours(v))
        if (parent[w] == -2) {
          parent[w] = v;
          count[w] = count[v] + contains(u, w);
          queue.push_back(w);
        }
    }
  }
  return best;
}

}  // namespace

StarOrPath star_or_path(const Graph& g, const VertexSet& u, int m) {
  StarOrPath out;
  if (u.empty()) return out;
  for (const VertexSet& c : components(g))
    if (contains(c, u.front()) && !is_subset(u, c))
      throw PreconditionError("star_or_path needs u inside one component");
  if (m <= 1) {
    out.kind = StarOrPath::Kind::Path;
    out.path = {u.front()};
    return out;
  }
  std::vector<char> alive;
  const Graph t = minimal_tree(g, u, alive);
  for (Vertex c = 0; c < t.order(); ++c) {
    if (!alive[c] || t.degree(c) < m) continue;
    out.kind = StarOrPath::Kind::Star;
    out.centre = c;
    for (Vertex w : t.neighbours(c)) {
      if (static_cast<int>(out.legs.size()) == m) break;
      out.legs.push_back(leg(t, u, c, w));
    }
    return out;
  }
  auto path = best_tree_path(t, u, alive);
  int hits = 0;
  for (Vertex v : path) hits += contains(u, v);
  if (hits >= m) {
    out.kind = StarOrPath::Kind::Path;
    out.path = std::move(path);
    return out;
  }

  // Exact fallback in g: fans through menger, paths by bounded search.
  for (Vertex c = 0; c < g.order(); ++c) {
    VertexSet removed{c};
    const VertexSet targets = set_difference(u, removed);
    const VertexSet nb = make_set(g.neighbours(c));
    std::vector<Vertex> keep = set_difference(full_set(g.order()), removed);
    const Graph h = g.without(removed);
    auto shift = [c](Vertex v) { return v > c ? v - 1 : v; };
    VertexSet hn, ht;
    for (Vertex v : nb) hn.push_back(shift(v));
    for (Vertex v : targets) ht.push_back(shift(v));
    const MengerResult r = menger(h, hn, ht);
    if (r.count < m) continue;
    out.kind = StarOrPath::Kind::Star;
    out.centre = c;
    for (int i = 0; i < m; ++i) {
      std::vector<Vertex> legp{c};
      for (Vertex v : r.paths.paths[i]) legp.push_back(keep[v]);
      out.legs.push_back(std::move(legp));
    }
    return out;
  }
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> cur;
  long budget = 2'000'000;
  std::function<bool(Vertex, int)> dfs = [&](Vertex v, int count) {
    if (--budget < 0) return false;
    if (count >= m) return true;
    for (Vertex w : g.neighbours(v))
      if (!on[w]) {
        on[w] = 1;
        cur.push_back(w);
        if (dfs(w, count + contains(u, w))) return true;
        cur.pop_back();
        on[w] = 0;
      }
    return false;
  };
  for (Vertex s = 0; s < g.order() && budget > 0; ++s) {
    cur = {s};
    std::fill(on.begin(), on.end(), 0);
    on[s] = 1;
    if (dfs(s, contains(u, s))) {
      out.kind = StarOrPath::Kind::Path;
      out.path = cur;
      return out;
    }
  }
  return out;
}

bool check_star_or_path(const Graph& g, const VertexSet& u, int m, const StarOrPath& r) {
  auto is_walk = [&](const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.adjacent(p[i], p[i + 1])) return false;
    return true;
  };
  switch (r.kind) {
    case StarOrPath::Kind::None: return false;
    case StarOrPath::Kind::Path: {
      if (make_set(r.path).size() != r.path.size() || !is_walk(r.path)) return false;
      return static_cast<int>(set_intersection(make_set(r.path), u).size()) >= m;
    }
    case StarOrPath::Kind::Star: {
      if (static_cast<int>(r.legs.size()) < m) return false;
      std::vector<Vertex> seen;
      VertexSet ends;
      for (const auto& l : r.legs) {
        if (l.size() < 2 || l.front() != r.centre || !is_walk(l) || !contains(u, l.back()))
          return false;
        seen.insert(seen.end(), l.begin() + 1, l.end());
        ends.push_back(l.back());
      }
      return make_set(seen).size() == seen.size() && !contains(make_set(seen), r.centre);
    }
  }
  return false;
}

VertexSet largest_component_restriction(const Graph& g, const VertexSet& a, const VertexSet& s) {
  VertexSet best;
  for (const VertexSet& c : components_without(g, s)) {
    VertexSet here = set_intersection(a, c);
    if (here.size() > best.size()) best = std::move(here);
  }
  return best;
}

SubsetResult kconn_after_deletion(const Graph& g, const VertexSet& a, int k, Vertex v) {
  if (k < 1) throw PreconditionError("kconn_after_deletion needs k >= 1");
  if (!is_k_connected(g, a, k).ok) throw PreconditionError("a is not k-connected");
  const Graph h = g.without({v});
  auto down = [v](Vertex x) { return x > v ? x - 1 : x; };
  auto up = [v](Vertex x) { return x >= v ? x + 1 : x; };
  VertexSet ha;
  for (Vertex x : a)
    if (x != v) ha.push_back(down(x));
  SubsetResult r = max_k_connected_subset(h, ha, k - 1);
  for (Vertex& x : r.set) x = up(x);
  return r;
}

InteriorCore interior_core(const CoreMarkedGraph& g, int k) {
  InteriorCore out;
  for (Vertex v : g.core) out.boundary = std::max(out.boundary, growth_index(g, v) + 1);
  for (int cutoff = out.boundary; cutoff >= 1; --cutoff) {
    VertexSet y;
    for (Vertex v : g.core)
      if (growth_index(g, v) < cutoff) y.push_back(v);
    y = make_set(y);
    if (static_cast<int>(y.size()) < k) break;
    if (is_k_connected(g.graph, y, k).ok) {
      out.cutoff = cutoff;
      out.set = std::move(y);
      out.ok = true;
      return out;
    }
  }
  return out;
}

}  // namespace kset
