#pragma once

// Typical and generalised typical graphs at small parameters, shared by the
// unit tests and the acceptance run.

#include <string>
#include <vector>

#include "kset/typical.hpp"

namespace fixtures {

using namespace kset;

struct Fixture {
  std::string name;
  CoreMarkedGraph graph;
};

// T_4 on the path cabd with d = {d}.
inline RegularBlueprint cabd() { return {NamedTree::path("cabd"), {3}, 0}; }

// T_7(1, 2, cabd, {d}, sigma) with sigma = (c,0), (a,0), (b,1), (c,1).
inline SingularBlueprint singular_cabd() {
  return {1, 2, NamedTree::path("cabd"), {3}, {{0, 0}, {1, 0}, {2, 1}, {0, 1}}};
}

// Each core vertex becomes an edge; slots 0, 1 go to one end and 2, 3 to the other.
inline Type1Template edge_template() { return {path_graph(2), {0, 0, 1, 1}, 0}; }

// A path u - c - w with the finite side split between the ends.
inline Type1Template path_template() { return {path_graph(3), {0, 0, 2, 2}, 1}; }

// Paths for the non-d nodes c, a, b of cabd, with one non-simple path.
inline Type2Template cabd_paths() {
  Type2Template t;
  t.paths[0] = {2, 0, 1, {{1, 1}}};
  t.paths[1] = {1, 0, 1, {{0, 0}, {2, 1}}};
  t.paths[2] = {0, 0, 0, {{1, 0}, {3, 0}}};
  return t;
}

inline std::vector<Fixture> typical_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"K(4,10)", gen_complete_bipartite(4, 10)});
  out.push_back({"K(3,6)", gen_complete_bipartite(3, 6)});
  out.push_back({"regular T_4 on cabd, 5 layers", gen_regular_typical(cabd(), 5)});
  {
    // Star with centre 0 and leaves 1, 2, 3; c = 1, d = {2, 3}.
    RegularBlueprint star{NamedTree::from_parents({-1, 0, 0, 0}), {2, 3}, 1};
    out.push_back({"regular T_4 on a star, 6 layers", gen_regular_typical(star, 6)});
  }
  out.push_back({"regular T_1, 6 layers", gen_regular_typical({NamedTree::path("c"), {}, 0}, 6)});
  out.push_back({"2-FK(4; 2,3,4)", gen_degenerate_frayed(4, 2, {{2, 3, 4}})});
  out.push_back({"4-FK(4; 1,2,3)", gen_degenerate_frayed(4, 4, {{1, 2, 3}})});
  out.push_back({"0-FK(3; 1,2,3,4)", gen_degenerate_frayed(3, 0, {{1, 2, 3, 4}})});
  out.push_back({"singular T_7(1,2) on cabd", gen_singular_typical(singular_cabd(), {{3, 4}})});
  out.push_back({"two matched K(2,5)", two_bipartite_matched(5)});
  out.push_back({"generalised K(4,4), edge template", gen_generalised(GeneralisedK{4, 4, edge_template()})});
  out.push_back({"generalised K(4,5), path template", gen_generalised(GeneralisedK{4, 5, path_template()})});
  out.push_back({"generalised 2-FK(4; 2,3,4), edge template",
                 gen_generalised(GeneralisedFrayed{4, 2, {{2, 3, 4}}, edge_template()})});
  out.push_back({"generalised T_4 on cabd, 5 layers",
                 gen_generalised(GeneralisedRegular{cabd(), 5, cabd_paths()})});
  {
    Type3Template t3{{path_graph(2), {0, 1, 1}, 0}, cabd_paths()};
    out.push_back({"generalised T_7(1,2) on cabd",
                   gen_generalised(GeneralisedSingular{singular_cabd(), {{3, 4}}, 0, t3})});
  }
  return out;
}

}  // namespace fixtures
