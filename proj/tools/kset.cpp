// Command-line frontend: generators, checkers, decompositions, embeddings
// and the corpus harness.
//
// Exit status: 0 when a verdict was computed, 1 on usage or input errors,
// 2 when a result fails its own verification or a bound is violated.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "kset/corpus.hpp"
#include "kset/duality.hpp"
#include "kset/iso.hpp"
#include "kset/kconn.hpp"
#include "kset/lean.hpp"
#include "kset/menger.hpp"
#include "kset/minor.hpp"
#include "kset/serialize.hpp"
#include "kset/typical.hpp"

using namespace kset;

namespace {

constexpr int kVerificationFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts either a plain graph or a core-marked graph.
CoreMarkedGraph load_graph(const std::string& path) {
  const json j = read_json(path);
  if (j.contains("graph")) return j.get<CoreMarkedGraph>();
  CoreMarkedGraph g;
  g.graph = j.get<Graph>();
  g.roles.assign(static_cast<std::size_t>(g.graph.order()), Role{});
  return g;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const std::string& item : split(s, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

// A tree is either a string of one-letter node names read as a path
// ("cabd") or a parent array with nodes named by index ("-1,0,0,0").
NamedTree parse_tree(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isalpha(ch); }))
    return NamedTree::path(s);
  return NamedTree::from_parents(parse_ints(s));
}

VertexSet parse_names(const NamedTree& t, const std::string& s) {
  std::vector<Vertex> out;
  for (const std::string& name : split(s, ','))
    if (!name.empty()) out.push_back(t.node(name));
  return make_set(out);
}

// <tree>:<D>:<c>, e.g. "cabd:d:c".
RegularBlueprint parse_regular(const std::string& s) {
  const auto f = split(s, ':');
  if (f.size() != 3) throw UsageError("regular blueprint is <tree>:<D>:<c>");
  RegularBlueprint bp{parse_tree(f[0]), {}, 0};
  bp.d = parse_names(bp.b, f[1]);
  bp.c = bp.b.node(f[2]);
  return bp;
}

// Blueprint <tree>:<D> and sigma entries <node>/<parity>, e.g. "c/0,a/0,b/1,c/1".
SingularBlueprint parse_singular(int ell, int f, const std::string& s, const std::string& sigma) {
  const auto fields = split(s, ':');
  if (fields.size() != 2) throw UsageError("singular blueprint is <tree>:<D>");
  SingularBlueprint bp{ell, f, parse_tree(fields[0]), {}, {}};
  bp.d = parse_names(bp.b, fields[1]);
  for (const std::string& entry : split(sigma, ',')) {
    if (entry.empty()) continue;
    const auto parts = split(entry, '/');
    if (parts.size() != 2) throw UsageError("sigma entry is <node>/<parity>: " + entry);
    bp.sigma.emplace_back(bp.b.node(parts[0]), parse_ints(parts[1]).at(0));
  }
  return bp;
}

// Type-1 template <parents>/<slot nodes>/<c>, e.g. "-1,0/0,0,1,1/0".
Type1Template parse_template(const std::string& s) {
  const auto f = split(s, '/');
  if (f.size() != 3) throw UsageError("template is <parents>/<slot nodes>/<c>");
  Type1Template t;
  t.tree = NamedTree::from_parents(parse_ints(f[0])).tree;
  t.gamma = parse_ints(f[1]);
  t.c = parse_ints(f[2]).at(0);
  return t;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

struct GenOptions {
  std::string family;
  int k = 0, m = 0, ell = 0, f = 0, layers = 0, n = 0;
  double p = 0.5;
  std::optional<unsigned> seed;
  std::string blueprint, sigma, seq, tmpl, format = "json";
};

int run_gen(const GenOptions& o) {
  CoreMarkedGraph g;
  auto good_sequence = [&] { return GoodSequence{parse_ints(o.seq)}; };
  if (o.family == "random") {
    if (!o.seed) throw UsageError("random graphs need --seed");
    if (o.n < 0) throw UsageError("--n must be non-negative");
    std::mt19937 rng(*o.seed);
    std::bernoulli_distribution coin(o.p);
    std::vector<Edge> es;
    for (int u = 0; u < o.n; ++u)
      for (int v = u + 1; v < o.n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    // No core or roles: a plain graph.
    const Graph plain = Graph::from_edges(o.n, es);
    if (o.format == "dot") std::cout << to_dot(plain);
    else emit(plain);
    return 0;
  }
  if (o.family == "bipartite") {
    g = o.tmpl.empty() ? gen_complete_bipartite(o.k, o.m)
                       : gen_generalised(GeneralisedK{o.k, o.m, parse_template(o.tmpl)});
  } else if (o.family == "regular") {
    const RegularBlueprint bp = parse_regular(o.blueprint);
    if (o.k && o.k != bp.k()) throw UsageError("--k does not match the blueprint, which gives " + std::to_string(bp.k()));
    g = gen_regular_typical(bp, o.layers);
  } else if (o.family == "frayed") {
    g = o.tmpl.empty() ? gen_degenerate_frayed(o.k, o.ell, good_sequence())
                       : gen_generalised(GeneralisedFrayed{o.k, o.ell, good_sequence(), parse_template(o.tmpl)});
  } else if (o.family == "singular") {
    const SingularBlueprint bp = parse_singular(o.ell, o.f, o.blueprint, o.sigma);
    if (o.k && o.k != bp.k()) throw UsageError("--k does not match the blueprint, which gives " + std::to_string(bp.k()));
    g = gen_singular_typical(bp, good_sequence(), o.layers);
  } else if (o.family == "matched") {
    g = two_bipartite_matched(o.m);
  } else {
    throw UsageError("unknown family " + o.family);
  }
  if (o.format == "dot") std::cout << to_dot(g);
  else emit(g);
  return 0;
}

struct SetChoice {
  std::string list;
  bool core = false;
  bool interior = false;
};

VertexSet choose_set(const CoreMarkedGraph& g, const SetChoice& c, int k) {
  if (c.interior) return interior_core(g, k).set;
  if (c.core) return g.core_set();
  if (!c.list.empty()) return parse_vertex_list(c.list);
  return full_set(g.graph.order());
}

int run_check(const std::string& path, std::optional<int> k_flag, const SetChoice& choice) {
  const CoreMarkedGraph g = load_graph(path);
  const int k = k_flag.value_or(g.k);
  if (k < 1) throw UsageError("--k is required for graphs without a recorded k");
  const VertexSet a = choose_set(g, choice, k);
  const KConnVerdict v = is_k_connected(g.graph, a, k);
  json out = v;
  out["k"] = k;
  out["set"] = a;
  emit(out);
  // A failure must come with a separator that really separates.
  if (!v.ok && (!v.witness || !separates(g.graph, v.witness->separator, v.witness->z1, v.witness->z2)))
    return kVerificationFailed;
  return 0;
}

int run_menger(const std::string& path, const std::string& a_list, const std::string& b_list) {
  const Graph g = load_graph(path).graph;
  const VertexSet a = parse_vertex_list(a_list), b = parse_vertex_list(b_list);
  const MengerResult r = menger(g, a, b);
  emit(json{{"count", r.count}, {"paths", r.paths.paths}, {"separator", r.separator}});
  const bool ok = static_cast<int>(r.separator.size()) == r.count && separates(g, r.separator, a, b);
  return ok ? 0 : kVerificationFailed;
}

struct EmbedOptions {
  std::string host, pattern, a, c;
  bool subdivision = false;
  long budget = 0;
};

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

int run_embed(const EmbedOptions& o) {
  const CoreMarkedGraph host = load_graph(o.host);
  const CoreMarkedGraph pattern = load_graph(o.pattern);
  // Unless given, A and C are the recorded cores.
  const VertexSet a = o.a.empty() ? host.core_set() : parse_vertex_list(o.a);
  const VertexSet c = o.c.empty() ? pattern.core_set() : parse_vertex_list(o.c);
  json out;
  bool verified = true;
  if (o.subdivision) {
    const SubdivisionResult r = find_subdivision(host.graph, pattern.graph, c, a, o.budget);
    out = {{"kind", "subdivision"}, {"status", status_name(r.status)}, {"expansions", r.expansions}};
    if (r.embedding) {
      out["embedding"] = *r.embedding;
      verified = verify_subdivision(host.graph, pattern.graph, *r.embedding, c, a);
    }
  } else {
    const FbsResult r = find_fbs(host.graph, pattern.graph, a, c, o.budget);
    out = {{"kind", "fbs"}, {"status", status_name(r.status)}, {"expansions", r.expansions}};
    if (r.embedding) {
      out["embedding"] = *r.embedding;
      verified = verify_fbs(host.graph, pattern.graph, *r.embedding, a, c);
    }
  }
  out["verified"] = verified;
  emit(out);
  return verified ? 0 : kVerificationFailed;
}

int run_decompose(const std::string& path, int k, const std::string& format) {
  const Graph g = load_graph(path).graph;
  const TreeDecomposition td = build_k_lean_td(g, k);
  const bool ok = validate_td(g, td) && !is_k_lean_td(g, td, k);
  if (format == "dot") {
    std::cout << "graph T {\n";
    for (std::size_t t = 0; t < td.parts.size(); ++t) {
      std::cout << "  " << t << " [label=\"";
      for (std::size_t i = 0; i < td.parts[t].size(); ++i) std::cout << (i ? "," : "") << td.parts[t][i];
      std::cout << "\"];\n";
    }
    for (auto [s, t] : td.tree.edges()) std::cout << "  " << s << " -- " << t << ";\n";
    std::cout << "}\n";
  } else {
    emit(json{{"k", k}, {"decomposition", td}, {"adhesion", adhesion(td)}, {"lean", ok}});
  }
  return ok ? 0 : kVerificationFailed;
}

int run_ktw(const std::string& path, int k) {
  const Graph g = load_graph(path).graph;
  const WidthResult r = min_width_decomposition(g, k, [](const VertexSet& p) { return static_cast<int>(p.size()); });
  emit(json{{"k", k}, {"k_tree_width", r.value}, {"tree_width", tree_width(g)}, {"decomposition", r.td}});
  const bool ok = validate_td(g, r.td) && (r.td.tree.order() == 1 || adhesion(r.td) < k);
  return ok ? 0 : kVerificationFailed;
}

int run_duality(const std::string& path, int k, int m, const std::string& set_file) {
  const Graph g = load_graph(path).graph;
  const VertexSet a = set_file.empty() ? full_set(g.order()) : parse_vertex_list(read_text(set_file));
  const DualityReport r = check_duality(g, a, k, m);
  json out{{"k", k},
           {"m", m},
           {"a", a},
           {"max_kconn", r.max_kconn},
           {"max_kconn_set", r.max_kconn_set},
           {"k_tree_width", r.ktw},
           {"tree_width", r.tw},
           {"best_separability", r.best_separability},
           {"separability", r.separability},
           {"set_certificate", nullptr},
           {"td_certificate", nullptr}};
  bool ok = true;
  if (r.set_certificate) {
    out["set_certificate"] = *r.set_certificate;
    ok = ok && static_cast<int>(r.set_certificate->size()) >= m && is_k_connected(g, *r.set_certificate, k).ok;
  }
  if (r.td_certificate) {
    out["td_certificate"] = *r.td_certificate;
    ok = ok && verify_td_certificate(g, a, k, m, *r.td_certificate);
  }
  emit(out);
  return ok ? 0 : kVerificationFailed;
}

int workers() {
  const char* env = std::getenv("KSET_WORKERS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

int run_corpus(int n_max, int k) {
  const std::vector<CorpusGraph> graphs = corpus_enumerate(n_max);
  std::vector<BoundsReport> reports(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) reports[i] = verify_sec1_bounds(graphs[i].graph, k);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers(); ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  bool ok = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const BoundsReport& r = reports[i];
    ok = ok && r.djgt_ok && (!r.gj_applicable || r.gj_ok);
    const json line{{"id", graphs[i].id}, {"n", graphs[i].graph.order()}, {"k", k},
                    {"s", r.s},           {"s_prime", r.s_prime},      {"w", r.w},
                    {"tw", r.tw},         {"djgt_ok", r.djgt_ok},      {"gj_applicable", r.gj_applicable},
                    {"gj_ok", r.gj_ok}};
    std::cout << line.dump() << '\n';
  }
  return ok ? 0 : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tools for k-connected sets, typical graphs and tree-decompositions"};
  app.require_subcommand(1);
  int status = 0;

  GenOptions gen;
  std::string kind;
  auto* g = app.add_subcommand("gen", "generate a graph");
  g->add_option("kind", kind, "k-typical or random")->required()->check(CLI::IsMember({"k-typical", "random"}));
  g->add_option("--family", gen.family, "bipartite | regular | frayed | singular | matched");
  g->add_option("--k", gen.k);
  g->add_option("--m", gen.m, "number of core vertices");
  g->add_option("--ell", gen.ell);
  g->add_option("--f", gen.f);
  g->add_option("--layers", gen.layers);
  g->add_option("--blueprint", gen.blueprint, "<tree>:<D>[:<c>]");
  g->add_option("--sigma", gen.sigma, "<node>/<parity>,...");
  g->add_option("--seq", gen.seq, "ascending block sizes, e.g. 2,3,4");
  g->add_option("--template", gen.tmpl, "<parents>/<slot nodes>/<c>");
  g->add_option("--n", gen.n, "order of a random graph");
  g->add_option("--p", gen.p, "edge probability of a random graph");
  g->add_option("--seed", gen.seed);
  g->add_option("--format", gen.format)->check(CLI::IsMember({"json", "dot"}));
  g->callback([&] {
    if (kind == "random") gen.family = "random";
    else if (gen.family.empty() || gen.family == "random") throw UsageError("k-typical graphs need --family");
    status = run_gen(gen);
  });

  std::string input;
  std::optional<int> check_k;
  SetChoice choice;
  auto* c = app.add_subcommand("check-kconn", "decide whether a vertex set is k-connected");
  c->add_option("graph", input, "graph JSON, or - for stdin")->required();
  c->add_option("--k", check_k, "defaults to the k recorded in the file");
  c->add_option("--set", choice.list, "comma-separated vertices");
  auto* core_flag = c->add_flag("--core", choice.core, "use the recorded core");
  c->add_flag("--interior", choice.interior, "use the interior core")->excludes(core_flag);
  c->callback([&] { status = run_check(input, check_k, choice); });

  std::string a_list, b_list;
  auto* mg = app.add_subcommand("menger", "disjoint a-b paths and a minimum separator");
  mg->add_option("graph", input)->required();
  mg->add_option("--a", a_list)->required();
  mg->add_option("--b", b_list)->required();
  mg->callback([&] { status = run_menger(input, a_list, b_list); });

  EmbedOptions embed;
  auto* e = app.add_subcommand("embed", "search for an fbs-minor or a subdivision");
  e->add_option("host", embed.host)->required();
  e->add_option("pattern", embed.pattern)->required();
  e->add_option("--a", embed.a, "host vertices (default: host core)");
  e->add_option("--c", embed.c, "pattern vertices (default: pattern core)");
  e->add_flag("--subdivision", embed.subdivision);
  e->add_option("--budget", embed.budget, "0 for unlimited");
  e->callback([&] { status = run_embed(embed); });

  int k = 0, m = 0;
  std::string format = "json";
  auto* d = app.add_subcommand("decompose", "k-lean tree-decomposition");
  d->add_option("graph", input)->required();
  d->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  d->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  d->callback([&] { status = run_decompose(input, k, format); });

  auto* w = app.add_subcommand("ktw", "k-tree-width and tree-width");
  w->add_option("graph", input)->required();
  w->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  w->callback([&] { status = run_ktw(input, k); });

  std::string set_file;
  auto* du = app.add_subcommand("duality", "look for a large k-connected set or a decomposition");
  du->add_option("graph", input)->required();
  du->add_option("--k", k)->required();
  du->add_option("--m", m)->required();
  du->add_option("--set", set_file, "file with the vertex set a (default: all vertices)");
  du->callback([&] { status = run_duality(input, k, m, set_file); });

  int n_max = 0;
  auto* cp = app.add_subcommand("corpus", "bounds over all connected graphs up to n vertices");
  cp->add_option("--n", n_max)->required()->check(CLI::Range(1, 8));
  cp->add_option("--k", k)->required()->check(CLI::Range(1, 8));
  cp->callback([&] { status = run_corpus(n_max, k); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return status;
}
