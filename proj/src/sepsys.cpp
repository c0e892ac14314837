#include "kset/sepsys.hpp"

#include <algorithm>
#include <functional>

namespace kset {

NestedSeparationSystem NestedSeparationSystem::from(std::vector<Separation> seps) {
  for (Separation& s : seps)
    if (s.b < s.a) s = s.inverse();
  std::sort(seps.begin(), seps.end());
  seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
  return {std::move(seps)};
}

std::vector<Separation> NestedSeparationSystem::all() const {
  std::vector<Separation> out;
  for (const Separation& s : pairs) {
    out.push_back(s);
    if (s.a != s.b) out.push_back(s.inverse());
  }
  return out;
}

std::vector<Separation> Orientation::chosen(const NestedSeparationSystem& n) const {
  std::vector<Separation> out;
  for (std::size_t i = 0; i < n.pairs.size(); ++i)
    out.push_back(flip[i] ? n.pairs[i].inverse() : n.pairs[i]);
  return out;
}

bool is_nested_pair(const Separation& s1, const Separation& s2) {
  const Separation t = s2.inverse();
  return precedes(s1, s2) || precedes(s2, s1) || precedes(s1, t) || precedes(t, s1);
}

bool is_nested(const std::vector<Separation>& seps) {
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j)
      if (!is_nested_pair(seps[i], seps[j])) return false;
  return true;
}

namespace {

// An orientation is consistent iff no chosen y has its inverse below a chosen x.
bool compatible(const Separation& x, const Separation& y) {
  return !(precedes(y.inverse(), x) && y.inverse() != x) &&
         !(precedes(x.inverse(), y) && x.inverse() != y);
}

}  // namespace

bool is_consistent(const NestedSeparationSystem& n, const Orientation& o) {
  const auto chosen = o.chosen(n);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (precedes(chosen[i].inverse(), chosen[i]) && chosen[i].a != chosen[i].b) return false;
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (!compatible(chosen[i], chosen[j])) return false;
  }
  return true;
}

std::vector<Orientation> consistent_orientations(const NestedSeparationSystem& n) {
  const std::size_t p = n.pairs.size();
  std::vector<Orientation> out;
  std::vector<Separation> chosen;
  Orientation cur{std::vector<char>(p, 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p) {
      out.push_back(cur);
      return;
    }
    for (char f : {char{0}, char{1}}) {
      if (f == 1 && n.pairs[i].a == n.pairs[i].b) continue;
      const Separation s = f ? n.pairs[i].inverse() : n.pairs[i];
      if (precedes(s.inverse(), s) && s.a != s.b) continue;
      bool ok = true;
      for (const Separation& x : chosen)
        if (!compatible(x, s)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.flip[i] = f;
      chosen.push_back(s);
      rec(i + 1);
      chosen.pop_back();
    }
    cur.flip[i] = 0;
  };
  rec(0);
  return out;
}

VertexSet part_of(const Graph& g, const NestedSeparationSystem& n, const Orientation& o) {
  if (!is_consistent(n, o)) throw PreconditionError("orientation is not consistent");
  VertexSet part = full_set(g.order());
  for (const Separation& s : o.chosen(n)) part = set_intersection(part, s.b);
  return part;
}

TreeDecomposition nss_to_td(const Graph& g, const NestedSeparationSystem& n) {
  const VertexSet all = full_set(g.order());
  for (const Separation& s : n.pairs)
    if (s.a == all || s.b == all)
      throw PreconditionError("system contains a separation of the form (A, V(G))");
  const auto orients = consistent_orientations(n);
  TreeDecomposition td;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < orients.size(); ++i) {
    td.parts.push_back(part_of(g, n, orients[i]));
    for (std::size_t j = 0; j < i; ++j) {
      int diff = 0;
      for (std::size_t x = 0; x < n.pairs.size(); ++x) diff += orients[i].flip[x] != orients[j].flip[x];
      if (diff == 1) es.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
  }
  td.tree = Graph::from_edges(static_cast<int>(orients.size()), es);
  return td;
}

namespace {

VertexSet union_of_parts(const TreeDecomposition& td, const VertexSet& nodes) {
  VertexSet out;
  for (Vertex t : nodes) out = set_union(out, td.parts[t]);
  return out;
}

}  // namespace

NestedSeparationSystem td_to_nss(const Graph& g, const TreeDecomposition& td) {
  if (!validate_td(g, td)) throw PreconditionError("invalid tree-decomposition");
  std::vector<Separation> seps;
  for (auto [s, t] : td.tree.edges()) {
    // Side of s after deleting the edge st.
    std::vector<char> allowed(static_cast<std::size_t>(td.tree.order()), 1);
    VertexSet side_s;
    std::vector<Vertex> stack{s};
    allowed[s] = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      side_s.push_back(u);
      for (Vertex w : td.tree.neighbours(u))
        if (allowed[w] && !(u == s && w == t)) {
          allowed[w] = 0;
          stack.push_back(w);
        }
    }
    side_s = make_set(side_s);
    const VertexSet side_t = set_difference(full_set(td.tree.order()), side_s);
    seps.push_back({union_of_parts(td, side_s), union_of_parts(td, side_t)});
  }
  return NestedSeparationSystem::from(std::move(seps));
}

bool validate_td(const Graph& g, const TreeDecomposition& td) {
  if (static_cast<int>(td.parts.size()) != td.tree.order() || !is_tree(td.tree)) return false;
  for (const VertexSet& p : td.parts)
    for (Vertex v : p)
      if (v < 0 || v >= g.order()) return false;
  // (T1) and (T3): every vertex lies in a non-empty connected set of nodes.
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet nodes;
    for (int t = 0; t < td.tree.order(); ++t)
      if (contains(td.parts[t], v)) nodes.push_back(t);
    if (!is_connected_subset(td.tree, nodes)) return false;
  }
  // (T2)
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const VertexSet& p : td.parts)
      if (contains(p, u) && contains(p, v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

TreeDecomposition trivial_td(const Graph& g) { return {Graph(1), {full_set(g.order())}}; }

NestedSeparationSystem clean_up(const Graph& g, const NestedSeparationSystem& n) {
  const VertexSet all = full_set(g.order());
  std::vector<Separation> out;
  for (const Separation& s : n.pairs) {
    for (const VertexSet& c : components_without(g, s.separator())) {
      const VertexSet closed = set_union(c, g.neighbourhood(c));
      if (closed == all) continue;
      out.push_back({closed, set_difference(all, c)});
    }
  }
  return NestedSeparationSystem::from(std::move(out));
}

int adhesion(const NestedSeparationSystem& n) {
  int out = 0;
  for (const Separation& s : n.pairs) out = std::max(out, s.order());
  return out;
}

int adhesion(const TreeDecomposition& td) {
  int out = 0;
  for (auto [s, t] : td.tree.edges())
    out = std::max(out, static_cast<int>(set_intersection(td.parts[s], td.parts[t]).size()));
  return out;
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex s, Vertex t) {
  return shortest_path(tree, s, t, std::vector<char>(static_cast<std::size_t>(tree.order()), 1));
}

}  // namespace kset
