#include "kset/lean.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

#include "kset/combinatorics.hpp"
#include "kset/menger.hpp"

namespace kset {

namespace {

// Shared scan: for each pair of parts (i <= j), `room(i, j)` is the smallest
// order of a separation the decomposition puts between them; a pair of
// l-sets with l <= room and fewer than l disjoint paths is a violation.
template <typename Room>
std::optional<LeanViolation> scan(const Graph& g, const std::vector<VertexSet>& parts, int k,
                                  Room room) {
  MengerSolver solver(g);
  std::map<std::pair<VertexSet, VertexSet>, int> cache;
  auto paths = [&](const VertexSet& z1, const VertexSet& z2, int l) {
    auto key = z1 < z2 ? std::pair(z1, z2) : std::pair(z2, z1);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const int r = solver.max_paths(z1, z2, l);
    cache.emplace(std::move(key), r);
    return r;
  };
  const int count = static_cast<int>(parts.size());
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) {
      const int limit = std::min({k, room(i, j), static_cast<int>(parts[i].size()),
                                  static_cast<int>(parts[j].size())});
      for (int l = 1; l <= limit; ++l) {
        const auto left = subsets_of_size(parts[i], l);
        const auto right = i == j ? left : subsets_of_size(parts[j], l);
        for (const VertexSet& z1 : left)
          for (const VertexSet& z2 : right) {
            if (z1 == z2) continue;
            const int r = paths(z1, z2, l);
            if (r < l) return LeanViolation{i, j, z1, z2, r};
          }
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<LeanViolation> is_k_lean_td(const Graph& g, const TreeDecomposition& td, int k) {
  if (!validate_td(g, td)) throw PreconditionError("invalid tree-decomposition");
  if (adhesion(td) >= k && td.tree.order() > 1)
    throw PreconditionError("tree-decomposition adhesion must be below k");
  return scan(g, td.parts, k, [&](int i, int j) {
    if (i == j) return INT_MAX;
    const auto path = tree_path(td.tree, i, j);
    int least = INT_MAX;
    for (std::size_t x = 0; x + 1 < path.size(); ++x)
      least = std::min(least, static_cast<int>(
                                  set_intersection(td.parts[path[x]], td.parts[path[x + 1]]).size()));
    return least;
  });
}

std::optional<LeanViolation> is_k_lean_nss(const Graph& g, const NestedSeparationSystem& n, int k) {
  for (const Separation& s : n.pairs)
    if (s.order() >= k) throw PreconditionError("system member of order >= k");
  std::vector<VertexSet> parts;
  for (const Orientation& o : consistent_orientations(n)) parts.push_back(part_of(g, n, o));
  const auto seps = n.all();
  return scan(g, parts, k, [&](int i, int j) {
    int least = INT_MAX;
    for (const Separation& s : seps)
      if (is_subset(parts[i], s.a) && is_subset(parts[j], s.b)) least = std::min(least, s.order());
    return least;
  });
}

namespace {

// Deletes nodes whose part lies inside a neighbouring part.
TreeDecomposition simplify(TreeDecomposition td) {
  bool changed = true;
  while (changed && td.tree.order() > 1) {
    changed = false;
    for (auto [s, t] : td.tree.edges()) {
      Vertex drop = -1, keep = -1;
      if (is_subset(td.parts[s], td.parts[t])) drop = s, keep = t;
      else if (is_subset(td.parts[t], td.parts[s])) drop = t, keep = s;
      if (drop < 0) continue;
      std::vector<Edge> es;
      auto rename = [&](Vertex x) {
        if (x == drop) x = keep;
        return x > drop ? x - 1 : x;
      };
      for (auto [x, y] : td.tree.edges()) {
        if ((x == drop && y == keep) || (x == keep && y == drop)) continue;
        es.emplace_back(rename(x), rename(y));
      }
      TreeDecomposition next;
      next.tree = Graph::from_edges(td.tree.order() - 1, es);
      for (int x = 0; x < td.tree.order(); ++x)
        if (x != drop) next.parts.push_back(td.parts[x]);
      td = std::move(next);
      changed = true;
      break;
    }
  }
  return td;
}

}  // namespace

TreeDecomposition build_k_lean_td(const Graph& g, int k) {
  TreeDecomposition td = trivial_td(g);
  const VertexSet all = full_set(g.order());
  for (int round = 0; round < 100000; ++round) {
    const auto bad = is_k_lean_td(g, td, k);
    if (!bad) return td;
    const MengerResult mr = menger(g, bad->z1, bad->z2);
    const VertexSet& x = mr.separator;
    VertexSet side_a = x;
    for (const VertexSet& comp : components_without(g, x))
      if (!set_intersection(comp, bad->z1).empty()) side_a = set_union(side_a, comp);
    const VertexSet side_b = set_union(set_difference(all, side_a), x);

    // Each path meets x exactly once; split it there.
    std::vector<Vertex> cross;
    std::vector<VertexSet> before, after;
    for (const auto& p : mr.paths.paths) {
      std::size_t at = 0;
      while (!contains(x, p[at])) ++at;
      cross.push_back(p[at]);
      before.push_back(make_set({p.begin(), p.begin() + static_cast<long>(at)}));
      after.push_back(make_set({p.begin() + static_cast<long>(at) + 1, p.end()}));
    }
    const int t = td.tree.order();
    TreeDecomposition next;
    std::vector<Edge> es;
    for (int copy = 0; copy < 2; ++copy) {
      for (int node = 0; node < t; ++node) {
        const VertexSet& part = td.parts[node];
        VertexSet built = set_intersection(part, copy == 0 ? side_a : side_b);
        for (std::size_t i = 0; i < cross.size(); ++i)
          if (!set_intersection(part, copy == 0 ? after[i] : before[i]).empty())
            built = set_union(built, {cross[i]});
        next.parts.push_back(std::move(built));
      }
      for (auto [u, v] : td.tree.edges()) es.emplace_back(copy * t + u, copy * t + v);
    }
    es.emplace_back(bad->t2, t + bad->t1);
    next.tree = Graph::from_edges(2 * t, es);
    td = simplify(std::move(next));
  }
  throw std::runtime_error("build_k_lean_td did not converge");
}

}  // namespace kset
