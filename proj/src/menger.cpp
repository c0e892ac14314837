#include "kset/menger.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace kset {

namespace {

constexpr int kUnvisited = -10;
constexpr int kFromSource = -11;

}  // namespace

MengerSolver::MengerSolver(const Graph& g)
    : g_(&g),
      in_a_(static_cast<std::size_t>(g.order()), 0),
      in_b_(static_cast<std::size_t>(g.order()), 0),
      through_(static_cast<std::size_t>(g.order()), 0),
      next_(static_cast<std::size_t>(g.order()), kNone),
      prev_(static_cast<std::size_t>(g.order()), kNone),
      parent_(2 * static_cast<std::size_t>(g.order()), kUnvisited) {}

int MengerSolver::max_paths(const VertexSet& a, const VertexSet& b, int limit) {
  return run(a, b, limit);
}

MengerResult MengerSolver::solve(const VertexSet& a, const VertexSet& b) {
  MengerResult out;
  out.count = run(a, b, kUnbounded);
  out.paths = extract(a, b);
  out.separator = cut();
  return out;
}

int MengerSolver::run(const VertexSet& a, const VertexSet& b, int limit) {
  const int n = g_->order();
  std::fill(in_a_.begin(), in_a_.end(), 0);
  std::fill(in_b_.begin(), in_b_.end(), 0);
  std::fill(through_.begin(), through_.end(), 0);
  std::fill(next_.begin(), next_.end(), kNone);
  std::fill(prev_.begin(), prev_.end(), kNone);
  for (Vertex v : a) in_a_[v] = 1;
  for (Vertex v : b) in_b_[v] = 1;
  sources_.assign(a.begin(), a.end());
  int count = 0;
  if (n == 0) return 0;
  while (count < limit && augment()) ++count;
  return count;
}

// One breadth-first search in the residual split network. Source and sink arcs
// have unbounded capacity, so every minimum cut consists of internal arcs only.
bool MengerSolver::augment() {
  std::fill(parent_.begin(), parent_.end(), kUnvisited);
  queue_.clear();
  for (Vertex v : sources_) {
    const int node = 2 * v;
    if (parent_[node] == kUnvisited) {
      parent_[node] = kFromSource;
      queue_.push_back(node);
    }
  }
  int sink_from = -1;
  for (std::size_t head = 0; head < queue_.size() && sink_from < 0; ++head) {
    const int node = queue_[head];
    const Vertex v = node / 2;
    auto visit = [&](int to) {
      if (parent_[to] == kUnvisited) {
        parent_[to] = node;
        queue_.push_back(to);
      }
    };
    if (node % 2 == 0) {
      if (!through_[v]) {
        visit(node + 1);
      } else if (prev_[v] >= 0) {
        visit(2 * prev_[v] + 1);  // cancel the arc prev -> v
      }
    } else {
      if (in_b_[v] && next_[v] != kSink) {
        sink_from = v;
        break;
      }
      if (through_[v]) visit(node - 1);  // cancel v_in -> v_out
      for (Vertex w : g_->neighbours(v)) visit(2 * w);
    }
  }
  if (sink_from < 0) return false;

  // Walk back from the sink, applying each residual arc.
  next_[sink_from] = kSink;
  int node = 2 * sink_from + 1;
  while (true) {
    const int from = parent_[node];
    const Vertex v = node / 2;
    if (from == kFromSource) {
      prev_[v] = kSource;
      break;
    }
    const Vertex u = from / 2;
    const bool node_is_in = node % 2 == 0;
    const bool from_is_in = from % 2 == 0;
    if (u == v) {
      through_[v] = from_is_in ? 1 : 0;  // forward or cancelled internal arc
    } else if (!from_is_in && node_is_in) {
      next_[u] = v;  // u_out -> v_in
      prev_[v] = u;
    } else {
      // from = u_in, node = v_out: cancels the flow arc v_out -> u_in.
      if (next_[v] == u) next_[v] = kNone;
      if (prev_[u] == v) prev_[u] = kNone;
    }
    node = from;
  }
  return true;
}

VertexSet MengerSolver::cut() const {
  // parent_ holds the final (failed) search: the residual-reachable nodes.
  VertexSet out;
  for (Vertex v = 0; v < g_->order(); ++v)
    if (parent_[2 * v] != kUnvisited && parent_[2 * v + 1] == kUnvisited) out.push_back(v);
  return out;
}

PathSystem MengerSolver::extract(const VertexSet& a, const VertexSet& b) const {
  PathSystem ps;
  for (Vertex s : a) {
    if (prev_[s] != kSource) continue;
    std::vector<Vertex> walk{s};
    Vertex v = s;
    while (next_[v] != kSink) {
      v = next_[v];
      walk.push_back(v);
    }
    // Trim to an a--b path: first b-vertex, then the last a-vertex before it.
    std::size_t j = 0;
    while (!contains(b, walk[j])) ++j;
    std::size_t i = j;
    while (!contains(a, walk[i])) --i;
    ps.paths.emplace_back(walk.begin() + static_cast<std::ptrdiff_t>(i),
                          walk.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  return ps;
}

MengerResult menger(const Graph& g, const VertexSet& a, const VertexSet& b) {
  MengerSolver solver(g);
  return solver.solve(a, b);
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) seen[v] = 1;
  std::vector<Vertex> stack;
  for (Vertex v : a)
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (contains(b, u)) return false;
    for (Vertex w : g.neighbours(u))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return true;
}

int min_separator_size(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const MengerResult flow = menger(g, a, b);
  if (!separates(g, flow.separator, a, b)) return kUnbounded;
  const int upper = static_cast<int>(flow.separator.size());
  const int n = g.order();
  if (n > 16 || upper == 0) return upper;

  // Every separator contains a ∩ b; try all smaller supersets of it.
  const VertexSet forced = set_intersection(a, b);
  if (static_cast<int>(forced.size()) >= upper) return upper;
  std::uint32_t forced_mask = 0;
  for (Vertex v : forced) forced_mask |= 1u << v;
  const std::uint32_t all = (1u << n) - 1;
  const std::uint32_t free_mask = all & ~forced_mask;
  for (int extra = 0; static_cast<int>(forced.size()) + extra < upper; ++extra) {
    // Enumerate subsets of free_mask with `extra` bits.
    for (std::uint32_t sub = free_mask;; sub = (sub - 1) & free_mask) {
      if (std::popcount(sub) == extra) {
        VertexSet s;
        const std::uint32_t m = sub | forced_mask;
        for (int v = 0; v < n; ++v)
          if (m >> v & 1u) s.push_back(v);
        if (separates(g, s, a, b)) return static_cast<int>(s.size());
      }
      if (sub == 0) break;
    }
  }
  return upper;
}

}  // namespace kset
