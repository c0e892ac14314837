#include "kset/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kset {

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig;
    sig.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      for (Vertex w : g.neighbours(v)) s.push_back(colour[w]);
      std::sort(s.begin() + 1, s.end());
      sig.emplace_back(std::move(s), v);
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(static_cast<std::size_t>(n), 0);
    int c = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      next[sig[i].second] = c;
    }
    const int now = n == 0 ? 0 : c + 1;
    colour = std::move(next);
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw PreconditionError("canonical_form supports graphs of order <= 12");
  const std::vector<int> colour = refine_colours(g);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // Cells in colour order; each cell is permuted independently.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  auto encode = [&](const std::vector<Vertex>& ord) {
    // Upper triangle, row-major; earlier pairs are more significant.
    std::vector<std::uint64_t> words((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64 + 1, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (adj[ord[i]] >> ord[j] & 1u) words[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    return words;
  };

  std::vector<Vertex> best = order;
  auto best_code = encode(order);
  std::vector<Vertex> cur = order;
  while (true) {
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(cur.begin() + b, cur.begin() + e)) break;
    }
    if (c == cells.size()) break;
    auto code = encode(cur);
    if (code > best_code) {
      best_code = std::move(code);
      best = cur;
    }
  }
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[best[i]] = i;
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(position[u], position[v]);
  return Graph::from_edges(n, es);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw PreconditionError("graph6 encoding supports order <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty() || s[0] < 63 || s[0] > 125) throw PreconditionError("malformed graph6 string");
  const int n = s[0] - 63;
  std::vector<Edge> es;
  std::size_t pos = 1;
  int bit = 6, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bit == 6) {
        if (pos >= s.size()) throw PreconditionError("truncated graph6 string");
        cur = s[pos++] - 63;
        bit = 0;
      }
      if (cur >> (5 - bit) & 1) es.emplace_back(i, j);
      ++bit;
    }
  return Graph::from_edges(n, es);
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> cg, ch;
  std::vector<Vertex> order;
  std::vector<Vertex> map, inverse;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (inverse[w] >= 0 || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order[i];
        ok = g.adjacent(u, v) == h.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      inverse[w] = v;
      if (extend(depth + 1)) return true;
      map[v] = -1;
      inverse[w] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  const std::vector<int> joint = refine_colours(disjoint_union(g, h));
  IsoSearch s{g, h, {}, {}, {}, std::vector<Vertex>(n, -1), std::vector<Vertex>(n, -1)};
  s.cg.assign(joint.begin(), joint.begin() + n);
  s.ch.assign(joint.begin() + n, joint.end());
  {
    auto a = s.cg, b = s.ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Breadth-first from rare colours so every vertex after the first has a
  // mapped neighbour whenever its component allows it.
  std::map<int, int> freq;
  for (int c : s.cg) ++freq[c];
  std::vector<Vertex> by_rarity(static_cast<std::size_t>(n));
  std::iota(by_rarity.begin(), by_rarity.end(), 0);
  std::stable_sort(by_rarity.begin(), by_rarity.end(), [&](Vertex a, Vertex b) {
    return std::pair(freq[s.cg[a]], s.cg[a]) < std::pair(freq[s.cg[b]], s.cg[b]);
  });
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex root : by_rarity) {
    if (placed[root]) continue;
    std::size_t head = s.order.size();
    s.order.push_back(root);
    placed[root] = 1;
    for (; head < s.order.size(); ++head)
      for (Vertex w : g.neighbours(s.order[head]))
        if (!placed[w]) {
          placed[w] = 1;
          s.order.push_back(w);
        }
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

}  // namespace kset
