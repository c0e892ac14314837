#include "kset/corpus.hpp"

#include <map>

#include "kset/iso.hpp"

namespace kset {

namespace {

std::vector<CorpusGraph> grow(const std::vector<CorpusGraph>& smaller, int n) {
  std::map<std::string, Graph> seen;
  for (const CorpusGraph& base : smaller) {
    const std::vector<Edge> old = base.graph.edges();
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> es = old;
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) es.emplace_back(v, n - 1);
      Graph canon = canonical_form(Graph::from_edges(n, es));
      std::string id = to_graph6(canon);
      seen.try_emplace(std::move(id), std::move(canon));
    }
  }
  std::vector<CorpusGraph> out;
  for (auto& [id, g] : seen) out.push_back({id, g});
  return out;
}

}  // namespace

std::vector<CorpusGraph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw PreconditionError("corpus size guard: order must lie in [1, 8]");
  Graph one(1);
  std::vector<CorpusGraph> level{{to_graph6(one), one}};
  for (int m = 2; m <= n; ++m) level = grow(level, m);
  return level;
}

std::vector<CorpusGraph> corpus_enumerate(int n_max) {
  if (n_max < 1 || n_max > 8) throw PreconditionError("corpus size guard: n_max must lie in [1, 8]");
  std::vector<CorpusGraph> out;
  Graph one(1);
  std::vector<CorpusGraph> level{{to_graph6(one), one}};
  out.insert(out.end(), level.begin(), level.end());
  for (int m = 2; m <= n_max; ++m) {
    level = grow(level, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace kset
