#include "kset/minor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kset {

bool verify_fbs(const Graph& host, const Graph& pattern, const Embedding& e, const VertexSet& a,
                const VertexSet& c) {
  if (static_cast<int>(e.branch.size()) != pattern.order() || a.size() != c.size()) return false;
  std::vector<int> owner(static_cast<std::size_t>(host.order()), -1);
  for (Vertex p = 0; p < pattern.order(); ++p) {
    const VertexSet& b = e.branch[p];
    if (b.empty() || make_set(b) != b) return false;
    for (Vertex x : b) {
      if (x < 0 || x >= host.order() || owner[x] >= 0) return false;
      owner[x] = p;
    }
    if (!is_connected_subset(host, b)) return false;
  }
  for (auto [p, q] : pattern.edges()) {
    bool realised = false;
    for (Vertex x : e.branch[p]) {
      for (Vertex y : host.neighbours(x))
        if (owner[y] == q) {
          realised = true;
          break;
        }
      if (realised) break;
    }
    if (!realised) return false;
  }
  if (e.along.size() != a.size()) return false;
  for (auto [x, p] : e.along)
    if (!contains(a, x) || !contains(c, p) || owner[x] != p) return false;
  for (Vertex p = 0; p < pattern.order(); ++p) {
    const std::size_t hits = set_intersection(e.branch[p], a).size();
    if (hits != (contains(c, p) ? 1u : 0u)) return false;
  }
  return true;
}

namespace {

// Enumerates connected vertex sets of exactly `size` vertices drawn from
// `allowed`, each once (the ESU scheme). With a root, only sets containing
// it; otherwise each set is grown from its smallest vertex.
class ConnectedSets {
 public:
  ConnectedSets(const Graph& g, const std::vector<char>& allowed)
      : g_(g), allowed_(allowed), blocked_(static_cast<std::size_t>(g.order()), 0) {}

  bool run(int size, Vertex root, const std::function<bool(const VertexSet&)>& cb) {
    size_ = size;
    cb_ = &cb;
    if (root >= 0) {
      if (!allowed_[root]) return true;
      restrict_ = false;
      return start(root);
    }
    restrict_ = true;
    for (Vertex r = 0; r < g_.order(); ++r)
      if (allowed_[r] && !start(r)) return false;
    return true;
  }

 private:
  bool start(Vertex r) {
    root_ = r;
    std::vector<Vertex> ext;
    for (Vertex u : g_.neighbours(r))
      if (usable(u)) ext.push_back(u);
    add(r);
    const bool go = grow(ext);
    remove(r);
    return go;
  }

  bool usable(Vertex u) const { return allowed_[u] && (!restrict_ || u > root_); }

  void add(Vertex w) {
    sub_.push_back(w);
    ++blocked_[w];
    for (Vertex u : g_.neighbours(w)) ++blocked_[u];
  }
  void remove(Vertex w) {
    sub_.pop_back();
    --blocked_[w];
    for (Vertex u : g_.neighbours(w)) --blocked_[u];
  }

  bool grow(std::vector<Vertex> ext) {
    if (static_cast<int>(sub_.size()) == size_) return (*cb_)(make_set(sub_));
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbours(w))
        if (usable(u) && blocked_[u] == 0) next.push_back(u);
      add(w);
      const bool go = grow(std::move(next));
      remove(w);
      if (!go) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::vector<char>& allowed_;
  std::vector<int> blocked_;
  std::vector<Vertex> sub_;
  int size_ = 0;
  Vertex root_ = 0;
  bool restrict_ = true;
  const std::function<bool(const VertexSet&)>* cb_ = nullptr;
};

std::vector<Vertex> by_descending_degree(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  return order;
}

struct AbortSearch {};

}  // namespace

FbsResult find_fbs(const Graph& host, const Graph& pattern, const VertexSet& a, const VertexSet& c,
                   long budget) {
  if (a.size() != c.size()) throw PreconditionError("find_fbs needs |a| == |c|");
  FbsResult out;
  const int n = host.order();
  const int p = pattern.order();
  if (p > n) return out;
  const std::vector<Vertex> order = by_descending_degree(pattern);
  std::vector<int> position(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) position[order[i]] = i;
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (Vertex x : a) in_a[x] = 1;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  Embedding e;
  e.branch.assign(static_cast<std::size_t>(p), {});
  int used = 0;

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == p) return true;
    const Vertex pv = order[i];
    const bool in_c = contains(c, pv);
    std::vector<Vertex> placed_nb;
    for (Vertex q : pattern.neighbours(pv))
      if (position[q] < i) placed_nb.push_back(q);
    const int capacity = n - used - (p - i - 1);
    std::vector<char> allowed(static_cast<std::size_t>(n), 0);
    auto try_set = [&](const VertexSet& b) -> bool {
      // Every placed neighbour must see the new set.
      for (Vertex q : placed_nb) {
        bool seen = false;
        for (Vertex x : b) {
          for (Vertex y : host.neighbours(x))
            if (owner[y] == q) {
              seen = true;
              break;
            }
          if (seen) break;
        }
        if (!seen) return true;
      }
      if (budget > 0 && out.expansions >= budget) throw AbortSearch{};
      ++out.expansions;
      for (Vertex x : b) owner[x] = pv;
      used += static_cast<int>(b.size());
      e.branch[pv] = b;
      if (place(i + 1)) return false;
      for (Vertex x : b) owner[x] = -1;
      used -= static_cast<int>(b.size());
      return true;
    };
    for (int size = 1; size <= capacity; ++size) {
      if (in_c) {
        for (Vertex root : a) {
          if (owner[root] >= 0) continue;
          for (Vertex x = 0; x < n; ++x) allowed[x] = owner[x] < 0 && (!in_a[x] || x == root);
          ConnectedSets sets(host, allowed);
          if (!sets.run(size, root, try_set)) return true;
        }
      } else {
        for (Vertex x = 0; x < n; ++x) allowed[x] = owner[x] < 0 && !in_a[x];
        ConnectedSets sets(host, allowed);
        if (!sets.run(size, -1, try_set)) return true;
      }
    }
    return false;
  };

  try {
    if (place(0)) {
      for (Vertex pv = 0; pv < p; ++pv)
        for (Vertex x : e.branch[pv])
          if (in_a[x]) e.along[x] = pv;
      out.embedding = prune_branch_sets(host, pattern, std::move(e), a, c);
      out.status = SearchStatus::Found;
    }
  } catch (const AbortSearch&) {
    out.status = SearchStatus::BudgetExhausted;
  }
  return out;
}

Embedding prune_branch_sets(const Graph& host, const Graph& pattern, Embedding e,
                            const VertexSet& a, const VertexSet& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex pv = 0; pv < pattern.order(); ++pv) {
      const VertexSet b = e.branch[pv];
      for (auto it = b.rbegin(); it != b.rend(); ++it) {
        if (contains(a, *it)) continue;
        Embedding trial = e;
        trial.branch[pv] = set_difference(e.branch[pv], {*it});
        if (verify_fbs(host, pattern, trial, a, c)) {
          e = std::move(trial);
          changed = true;
        }
      }
    }
  }
  return e;
}

bool verify_subdivision(const Graph& host, const Graph& pattern, const SubdivisionEmbedding& s,
                        const VertexSet& core_pattern, const VertexSet& core_host) {
  if (static_cast<int>(s.branch_vertex.size()) != pattern.order()) return false;
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  VertexSet core_image;
  for (Vertex pv = 0; pv < pattern.order(); ++pv) {
    const Vertex x = s.branch_vertex[pv];
    if (x < 0 || x >= host.order() || used[x]) return false;
    used[x] = 1;
    if (contains(core_pattern, pv)) core_image.push_back(x);
    else if (contains(core_host, x)) return false;
  }
  if (make_set(core_image) != core_host) return false;
  if (s.edge_path.size() != pattern.size()) return false;
  for (auto [u, v] : pattern.edges()) {
    auto it = s.edge_path.find({u, v});
    if (it == s.edge_path.end()) return false;
    const auto& path = it->second;
    if (path.size() < 2 || path.front() != s.branch_vertex[u] || path.back() != s.branch_vertex[v])
      return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!host.adjacent(path[i], path[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const Vertex x = path[i];
      if (used[x] || contains(core_host, x)) return false;
      used[x] = 1;
    }
  }
  return true;
}

SubdivisionResult find_subdivision(const Graph& host, const Graph& pattern,
                                   const VertexSet& core_pattern, const VertexSet& core_host,
                                   long budget) {
  if (core_pattern.size() != core_host.size())
    throw PreconditionError("find_subdivision needs |core_pattern| == |core_host|");
  SubdivisionResult out;
  const int n = host.order();
  const int p = pattern.order();
  if (p > n) return out;
  const std::vector<Vertex> order = by_descending_degree(pattern);
  std::vector<int> position(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) position[order[i]] = i;
  // 0 free, 1 branch vertex, 2 path interior, 3 reserved core vertex
  std::vector<char> state(static_cast<std::size_t>(n), 0);
  for (Vertex x : core_host) state[x] = 3;
  SubdivisionEmbedding s;
  s.branch_vertex.assign(static_cast<std::size_t>(p), -1);

  auto tick = [&] {
    if (budget > 0 && out.expansions >= budget) throw AbortSearch{};
    ++out.expansions;
  };

  std::function<bool(int)> place;
  // Routes the edges from order[i] back to already placed vertices, then
  // continues with the next pattern vertex.
  std::function<bool(int, std::size_t, const std::vector<Vertex>&)> route =
      [&](int i, std::size_t e, const std::vector<Vertex>& back) -> bool {
    if (e == back.size()) return place(i + 1);
    const Vertex pv = order[i];
    const Vertex q = back[e];
    const Vertex from = s.branch_vertex[pv];
    const Vertex to = s.branch_vertex[q];
    const Edge key{std::min(pv, q), std::max(pv, q)};
    std::vector<Vertex> path{from};
    std::function<bool(Vertex)> dfs = [&](Vertex x) -> bool {
      for (Vertex y : host.neighbours(x)) {
        if (y == to) {
          tick();
          path.push_back(y);
          auto stored = path;
          if (key.first != pv) std::reverse(stored.begin(), stored.end());
          s.edge_path[key] = std::move(stored);
          if (route(i, e + 1, back)) return true;
          s.edge_path.erase(key);
          path.pop_back();
          continue;
        }
        if (state[y] != 0) continue;
        state[y] = 2;
        path.push_back(y);
        if (dfs(y)) return true;
        path.pop_back();
        state[y] = 0;
      }
      return false;
    };
    return dfs(from);
  };

  place = [&](int i) -> bool {
    if (i == p) return true;
    const Vertex pv = order[i];
    const bool in_core = contains(core_pattern, pv);
    std::vector<Vertex> back;
    for (Vertex q : pattern.neighbours(pv))
      if (position[q] < i) back.push_back(q);
    std::sort(back.begin(), back.end(), [&](Vertex x, Vertex y) { return position[x] < position[y]; });
    for (Vertex x = 0; x < n; ++x) {
      if (in_core ? state[x] != 3 : state[x] != 0) continue;
      if (host.degree(x) < pattern.degree(pv)) continue;
      tick();
      const char before = state[x];
      state[x] = 1;
      s.branch_vertex[pv] = x;
      if (route(i, 0, back)) return true;
      s.branch_vertex[pv] = -1;
      state[x] = before;
    }
    return false;
  };

  try {
    if (place(0)) {
      out.status = SearchStatus::Found;
      out.embedding = std::move(s);
    }
  } catch (const AbortSearch&) {
    out.status = SearchStatus::BudgetExhausted;
  }
  return out;
}

Embedding subdivision_implies_fbs(const SubdivisionEmbedding& s, const CoreMarkedGraph& generalised) {
  if (!generalised.parent) throw PreconditionError("generalised graph carries no parent");
  const CoreMarkedGraph& parent = *generalised.parent;
  const Graph& g = generalised.graph;
  if (static_cast<int>(s.branch_vertex.size()) != g.order())
    throw PreconditionError("subdivision does not embed the generalised graph");
  Embedding e;
  e.branch.assign(static_cast<std::size_t>(parent.graph.order()), {});
  for (Vertex v = 0; v < g.order(); ++v) e.branch[generalised.origin[v]].push_back(s.branch_vertex[v]);
  for (const auto& [edge, path] : s.edge_path) {
    const Vertex owner = generalised.origin[edge.first];
    for (std::size_t i = 1; i + 1 < path.size(); ++i) e.branch[owner].push_back(path[i]);
  }
  for (VertexSet& b : e.branch) b = make_set(b);
  for (Vertex v : generalised.core) e.along[s.branch_vertex[v]] = generalised.origin[v];
  return e;
}

}  // namespace kset
