// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "kset/corpus.hpp"
#include "kset/duality.hpp"
#include "kset/iso.hpp"
#include "kset/kconn.hpp"
#include "kset/lean.hpp"
#include "kset/menger.hpp"
#include "kset/minor.hpp"
#include "properties.hpp"

using namespace kset;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // printed under the result line
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<CorpusGraph>& corpus() {
  static const std::vector<CorpusGraph> graphs = corpus_enumerate(7);
  return graphs;
}

Outcome menger_equivalence() {
  std::mt19937 rng(1);
  long pairs = 0, bad = 0;
  std::string first;
  for (const CorpusGraph& cg : corpus()) {
    const int n = cg.graph.order();
    for (int i = 0; i < 200; ++i) {
      const VertexSet a = oracle::random_subset(rng, n, 0.4);
      const VertexSet b = oracle::random_subset(rng, n, 0.4);
      const int flow = menger(cg.graph, a, b).count;
      const int packed = oracle::max_disjoint_paths(cg.graph, a, b);
      const int cut = min_separator_size(cg.graph, a, b);
      const int brute_cut = oracle::min_separator(cg.graph, a, b);
      ++pairs;
      if (flow != packed || flow != cut || cut != brute_cut) {
        if (bad++ == 0) first = cg.id;
      }
    }
  }
  Outcome o{bad == 0, fmt("%zu graphs, %ld pairs, %ld mismatches", corpus().size(), pairs, bad), {}};
  if (bad) o.notes.push_back("first mismatch on " + first);
  return o;
}

Outcome djgt() {
  long checks = 0, bad = 0;
  for (const CorpusGraph& cg : corpus())
    for (int k = 1; k <= 2; ++k) {
      ++checks;
      if (!verify_sec1_bounds(cg.graph, k).djgt_ok) ++bad;
    }
  return {bad == 0, fmt("%ld graph/k checks, %ld violations", checks, bad), {}};
}

Outcome gj() {
  long checks = 0, skipped = 0, bad = 0;
  for (const CorpusGraph& cg : corpus())
    for (int k = 2; k <= 3; ++k) {
      const BoundsReport r = verify_sec1_bounds(cg.graph, k);
      if (!r.gj_applicable) {
        ++skipped;
        continue;
      }
      ++checks;
      if (!r.gj_ok) ++bad;
    }
  return {bad == 0, fmt("%ld checks (%ld with no k-connected set of size k), %ld violations", checks,
                        skipped, bad),
          {}};
}

Outcome typical_cores() {
  Outcome o;
  std::set<std::string> families;
  int passed = 0;
  const auto all = fixtures::typical_fixtures();
  for (const auto& f : all) {
    const int k = f.graph.k;
    const InteriorCore ic = interior_core(f.graph, k);
    const bool ok = ic.ok && ic.boundary - ic.cutoff <= k + 2 && is_k_connected(f.graph.graph, ic.set, k).ok;
    families.insert(f.graph.family);
    if (ok) ++passed;
    else o.notes.push_back("fails: " + f.name);
  }
  o.pass = passed == static_cast<int>(all.size()) && all.size() >= 12;
  o.detail = fmt("%d of %zu fixtures over %zu families", passed, all.size(), families.size());
  return o;
}

Outcome matched_hosts() {
  Outcome o;
  const CoreMarkedGraph host = two_bipartite_matched(4);
  const CoreMarkedGraph plain = gen_complete_bipartite(4, 4);
  const auto direct = find_subdivision(host.graph, plain.graph, plain.core_set(), host.core_set());
  const CoreMarkedGraph gen = gen_generalised(GeneralisedK{4, 4, fixtures::edge_template()});
  const auto lifted = find_subdivision(host.graph, gen.graph, gen.core_set(), host.core_set());
  bool verified = false, fbs = false;
  if (lifted.status == SearchStatus::Found) {
    verified = verify_subdivision(host.graph, gen.graph, *lifted.embedding, gen.core_set(), host.core_set());
    const Embedding e = subdivision_implies_fbs(*lifted.embedding, gen);
    fbs = verify_fbs(host.graph, plain.graph, e, host.core_set(), plain.core_set());
  }
  o.pass = direct.status == SearchStatus::NotFound && lifted.status == SearchStatus::Found && verified && fbs;
  o.detail = fmt("plain K(4,4): %s; generalised K(4,4): %s, verified %s; fbs minor with core along A: %s",
                 direct.status == SearchStatus::NotFound ? "not found" : "found",
                 lifted.status == SearchStatus::Found ? "found" : "not found", verified ? "yes" : "no",
                 fbs ? "verified" : "missing");
  return o;
}

Outcome lean_pipeline() {
  long runs = 0, bad = 0;
  Outcome o;
  for (const CorpusGraph& cg : corpus())
    for (int k = 1; k <= 3; ++k) {
      ++runs;
      const Graph& g = cg.graph;
      const TreeDecomposition td = build_k_lean_td(g, k);
      bool ok = validate_td(g, td) && (td.tree.order() == 1 || adhesion(td) < k) &&
                !is_k_lean_td(g, td, k).has_value();
      for (const VertexSet& p : td.parts)
        ok = ok && is_k_connected(g, p, std::min(k, static_cast<int>(p.size()))).ok;
      if (!ok) {
        if (bad++ < 3) o.notes.push_back(fmt("fails on %s with k = %d", cg.id.c_str(), k));
      }
    }
  o.pass = bad == 0;
  o.detail = fmt("%ld graph/k runs, %ld failures", runs, bad);
  return o;
}

// The 500 nested systems shared by the clean-up and round-trip criteria:
// graphs of order 3..7, connected or not, orders up to 3, with and without
// separations of the form (A, V(G)).
struct Sample {
  Graph g;
  NestedSeparationSystem n;
  bool proper;
};

const std::vector<Sample>& samples() {
  static const std::vector<Sample> out = [] {
    std::mt19937 rng(2024);
    std::vector<Sample> s;
    for (int i = 0; i < 500; ++i) {
      const int n = 3 + i % 5;
      const Graph g = i % 2 ? oracle::random_graph(rng, n, 0.4) : oracle::random_connected_graph(rng, n, 0.3);
      const bool proper = (i / 2) % 2 == 0;
      auto sys = oracle::random_nested_system(rng, g, 1 + i % 3, 6, proper);
      const VertexSet all = full_set(n);
      bool has_improper = false;
      for (const Separation& x : sys.pairs) has_improper = has_improper || x.a == all || x.b == all;
      s.push_back({g, std::move(sys), !has_improper});
    }
    return s;
  }();
  return out;
}

Outcome clean_up_properties() {
  int nested = 0, crossing = 0, proper = 0, inside = 0, chains = 0, nonempty = 0;
  int first_crossing = -1;
  const auto& all = samples();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Sample& s = all[i];
    if (!s.n.empty()) ++nonempty;
    const NestedSeparationSystem out = clean_up(s.g, s.n);
    const auto r = props::check_clean_up(s.g, s.n, out);
    crossing += !is_nested(out.all());
    if (!r.nested) {
      ++nested;
      if (first_crossing < 0) first_crossing = static_cast<int>(i);
    }
    proper += !r.proper;
    inside += !r.parts_inside;
    chains += !r.no_chain;
  }
  Outcome o;
  o.pass = nested + proper + inside + chains == 0;
  o.detail = fmt("%zu systems (%d non-empty); failures: nested %d, no (A,V) %d, parts inside %d, "
                 "no same-separator chain %d",
                 all.size(), nonempty, nested, proper, inside, chains);
  if (nested) {
    o.notes.push_back(fmt("%d of the %d non-nested outputs contain a crossing pair; first is system #%d",
                          crossing, nested, first_crossing));
    o.notes.push_back(
        "the clean-up of a nested system need not be nested. Smallest case: G on {0..4} with "
        "edges 04 14 23 24 34 and N = {({0,2,3,4},{1,2,4}), ({0,3,4},{1,2,3,4})}.");
    o.notes.push_back(
        "Both members are proper and nested (the second is below the first), yet the clean-up holds "
        "({2,3,4},{0,1,2,4}) and ({2,3,4},{0,1,3,4}), which cross.");
    o.notes.push_back(
        "Cause: the component {3} of G - {2,4} is cut off along {2,4}, but vertex 3 lies in the "
        "separator {3,4} of the other member. Nestedness of two cut-off separations then needs "
        "containment on both sides, and only one side is guaranteed.");
  }
  return o;
}

Outcome round_trips() {
  int used = 0, bad = 0;
  Outcome o;
  for (const Sample& s : samples()) {
    if (!s.proper) continue;
    ++used;
    const std::string why = props::round_trip_violation(s.g, s.n);
    if (!why.empty()) {
      if (bad++ < 3) o.notes.push_back(why);
    }
  }
  o.pass = bad == 0 && used > 0;
  o.detail = fmt("%d systems without (A,V(G)), %d failures", used, bad);
  return o;
}

struct Tally {
  int instances = 0;
  int failures = 0;
  bool ok() const { return instances >= 200 && failures == 0; }
};

Tally subset_monotonicity() {
  std::mt19937 rng(31);
  Tally t;
  while (t.instances < 250) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.6);
    const int k = 1 + static_cast<int>(rng() % 3);
    const VertexSet a = oracle::random_subset(rng, n, 0.7);
    if (static_cast<int>(a.size()) <= k || !is_k_connected(g, a, k).ok) continue;
    VertexSet sub;
    for (Vertex v : a)
      if (rng() % 3) sub.push_back(v);
    if (static_cast<int>(sub.size()) < k) continue;
    ++t.instances;
    if (!is_k_connected(g, sub, k).ok || !oracle::k_connected(g, sub, k)) ++t.failures;
  }
  return t;
}

Graph random_tree(std::mt19937& rng, int n) { return oracle::random_connected_graph(rng, n, 0.0); }

Tally minor_lifting() {
  std::mt19937 rng(32);
  Tally t;
  while (t.instances < 250) {
    const int pn = 3 + static_cast<int>(rng() % 3);
    const Graph pattern = oracle::random_connected_graph(rng, pn, 0.6);
    const int k = 1 + static_cast<int>(rng() % 3);
    const SubsetResult best = max_k_connected_subset(pattern, full_set(pn), k);
    if (best.size < k) continue;

    // Inflate: blow up some vertices into small trees, then add spare
    // vertices and edges. The pattern stays a minor with branch sets given
    // by the origin of each host vertex.
    std::vector<BlowUp> ops;
    for (Vertex v = 0; v < pn; ++v) {
      if (rng() % 2) continue;
      BlowUp op{v, random_tree(rng, 1 + static_cast<int>(rng() % 3)), {}};
      for (Vertex w : pattern.neighbours(v))
        op.gamma[w] = static_cast<Vertex>(rng() % static_cast<unsigned>(op.tree.order()));
      ops.push_back(std::move(op));
    }
    const BlowUpResult blown = apply_blow_ups(pattern, ops);
    const int spare = static_cast<int>(rng() % 3);
    const int hn = blown.graph.order() + spare;
    std::vector<Edge> es = blown.graph.edges();
    for (int x = blown.graph.order(); x < hn; ++x) es.emplace_back(x, static_cast<Vertex>(rng() % x));
    for (int e = static_cast<int>(rng() % 3); e > 0; --e) {
      const Vertex u = static_cast<Vertex>(rng() % hn), v = static_cast<Vertex>(rng() % hn);
      if (u != v) es.emplace_back(std::min(u, v), std::max(u, v));
    }
    const Graph host = Graph::from_edges(hn, es);

    Embedding e;
    e.branch.resize(static_cast<std::size_t>(pn));
    for (Vertex x = 0; x < blown.graph.order(); ++x) e.branch[blown.origin[x]].push_back(x);
    VertexSet transversal;
    for (Vertex v : best.set) {
      const VertexSet& b = e.branch[v];
      const Vertex x = b[rng() % b.size()];
      transversal.push_back(x);
      e.along[x] = v;
    }
    transversal = make_set(transversal);
    ++t.instances;
    if (!verify_fbs(host, pattern, e, transversal, best.set) || !is_k_connected(host, transversal, k).ok)
      ++t.failures;
  }
  return t;
}

Tally blow_up_commutativity() {
  std::mt19937 rng(33);
  Tally t;
  while (t.instances < 250) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_connected_graph(rng, n, 0.4);
    const Vertex v = static_cast<Vertex>(rng() % n);
    const Vertex w = static_cast<Vertex>(rng() % n);
    if (v == w) continue;
    const Graph tv = random_tree(rng, 1 + static_cast<int>(rng() % 3));
    const Graph tw = random_tree(rng, 1 + static_cast<int>(rng() % 3));
    std::map<Vertex, Vertex> gv, gw;
    for (Vertex x : g.neighbours(v)) gv[x] = static_cast<Vertex>(rng() % tv.order());
    for (Vertex x : g.neighbours(w)) gw[x] = static_cast<Vertex>(rng() % tw.order());

    // One blow-up after the other, in both orders, against both at once.
    auto sequential = [&](Vertex p, const Graph& tp, const std::map<Vertex, Vertex>& gp, Vertex q,
                          const Graph& tq, const std::map<Vertex, Vertex>& gq) {
      const BlowUpResult first = apply_blow_ups(g, {BlowUp{p, tp, gp}});
      Vertex at = 0;
      while (first.origin[at] != q) ++at;
      std::map<Vertex, Vertex> lifted;
      for (Vertex x : first.graph.neighbours(at)) lifted[x] = gq.at(first.origin[x]);
      return blow_up(first.graph, at, tq, lifted);
    };
    const Graph vw = sequential(v, tv, gv, w, tw, gw);
    const Graph wv = sequential(w, tw, gw, v, tv, gv);
    const Graph both = apply_blow_ups(g, {BlowUp{v, tv, gv}, BlowUp{w, tw, gw}}).graph;
    ++t.instances;
    if (!are_isomorphic(vw, wv) || !are_isomorphic(vw, both)) ++t.failures;
  }
  return t;
}

Tally restriction_bound() {
  std::mt19937 rng(34);
  Tally t;
  const auto fx = fixtures::typical_fixtures();
  auto check = [&](const Graph& g, const VertexSet& a, int k) {
    const int size = static_cast<int>(rng() % k);  // |s| < k
    std::vector<Vertex> pool(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    const VertexSet s = make_set({pool.begin(), pool.begin() + size});
    const int a_size = static_cast<int>(a.size());
    const int bound = static_cast<int>(std::ceil((a_size / k - 1) / static_cast<double>(k)));
    ++t.instances;
    if (static_cast<int>(largest_component_restriction(g, a, s).size()) < bound) ++t.failures;
  };
  while (t.instances < 250) {
    if (t.instances % 2) {
      const auto& f = fx[rng() % fx.size()];
      check(f.graph.graph, f.graph.core_set(), f.graph.k);
      continue;
    }
    const int n = 4 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, 0.6);
    const int k = 1 + static_cast<int>(rng() % 3);
    const VertexSet a = oracle::random_subset(rng, n, 0.8);
    if (static_cast<int>(a.size()) < k || !is_k_connected(g, a, k).ok) continue;
    check(g, a, k);
  }
  return t;
}

Outcome micro_suites() {
  const std::pair<const char*, std::function<Tally()>> suites[] = {
      {"subset monotonicity", subset_monotonicity},
      {"minor lifting", minor_lifting},
      {"blow-up commutativity", blow_up_commutativity},
      {"component restriction bound", restriction_bound},
  };
  Outcome o;
  for (const auto& [name, run] : suites) {
    const Tally t = run();
    o.pass = o.pass && t.ok();
    o.notes.push_back(fmt("%s: %d instances, %d failures", name, t.instances, t.failures));
  }
  o.detail = "four suites";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"menger agrees with path packing and separator search", menger_equivalence},
      {"tree-width bounds from large (k+1)-connected sets", djgt},
      {"k-tree-width bounds on the largest k-connected set", gj},
      {"interior cores of typical graphs are k-connected", typical_cores},
      {"matched bipartite host: subdivision only of the generalised graph", matched_hosts},
      {"k-lean decompositions of all small connected graphs", lean_pipeline},
      {"clean-up properties", clean_up_properties},
      {"system to decomposition round trip", round_trips},
      {"invariant micro-suites", micro_suites},
  };
  int failed = 0;
  int id = 0;
  for (const auto& [title, run] : criteria) {
    ++id;
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    for (const std::string& note : o.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %d criteria passed\n", id - failed, id);
  return failed ? 1 : 0;
}
