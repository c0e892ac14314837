#include "kset/graph.hpp"
#include "kset/separation.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

namespace kset {

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet full_set(int n) {
  VertexSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw PreconditionError("graph order must be non-negative");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + "-" +
                              std::to_string(v));
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (Vertex u : keep)
    for (Vertex v : adj_[u])
      if (u < v && index[v] >= 0) es.emplace_back(index[u], index[v]);
  return from_edges(static_cast<int>(keep.size()), es);
}

Graph Graph::without(const VertexSet& removed) const {
  return induced(set_difference(full_set(order()), removed));
}

VertexSet Graph::neighbourhood(const VertexSet& s) const {
  std::vector<Vertex> out;
  for (Vertex u : s)
    for (Vertex v : adj_[u])
      if (!contains(s, v)) out.push_back(v);
  return make_set(std::move(out));
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbours(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_without(g, {}); }

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) allowed[v] = 1;
  std::vector<Vertex> stack{s.front()};
  allowed[s.front()] = 0;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex v : g.neighbours(u))
      if (allowed[v]) {
        allowed[v] = 0;
        stack.push_back(v);
      }
  }
  return reached == s.size();
}

bool is_tree(const Graph& g) {
  if (g.order() == 0) return false;
  return g.size() + 1 == static_cast<std::size_t>(g.order()) && components(g).size() == 1;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<char>& allowed) {
  if (!allowed[from] || !allowed[to]) return {};
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
  std::deque<Vertex> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Vertex v : g.neighbours(u))
      if (allowed[v] && parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
  }
  if (parent[to] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_separation(const Graph& g, const Separation& s) {
  for (const VertexSet* side : {&s.a, &s.b})
    for (Vertex v : *side)
      if (v < 0 || v >= g.order()) return false;
  if (set_union(s.a, s.b) != full_set(g.order())) return false;
  const VertexSet only_a = set_difference(s.a, s.b);
  for (Vertex u : only_a)
    for (Vertex v : g.neighbours(u))
      if (!contains(s.a, v)) return false;
  return true;
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph complete_bipartite_graph(int p, int q) {
  std::vector<Edge> es;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) es.emplace_back(i, p + j);
  return Graph::from_edges(p + q, es);
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> es;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), es);
}

}  // namespace kset
