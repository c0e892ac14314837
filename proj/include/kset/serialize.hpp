#pragma once

#include <string>

#include <json.hpp>

#include "kset/graph.hpp"
#include "kset/kconn.hpp"
#include "kset/lean.hpp"
#include "kset/minor.hpp"
#include "kset/separation.hpp"
#include "kset/sepsys.hpp"
#include "kset/typical.hpp"

namespace kset {

using nlohmann::json;

// Graph: {"n": int, "edges": [[u, v], ...]} with u < v, edges sorted.
void to_json(json& j, const Graph& g);
void from_json(const json& j, Graph& g);

// {"graph": ..., "core": [...], "roles": {"<vertex>": "<label>"}, "k": ..., "family": ...}
void to_json(json& j, const CoreMarkedGraph& g);
void from_json(const json& j, CoreMarkedGraph& g);

void to_json(json& j, const Separation& s);
void from_json(const json& j, Separation& s);
void to_json(json& j, const NestedSeparationSystem& n);
void from_json(const json& j, NestedSeparationSystem& n);
void to_json(json& j, const TreeDecomposition& td);
void from_json(const json& j, TreeDecomposition& td);

void to_json(json& j, const Embedding& e);
void from_json(const json& j, Embedding& e);
void to_json(json& j, const SubdivisionEmbedding& s);
void from_json(const json& j, SubdivisionEmbedding& s);

void to_json(json& j, const KConnVerdict& v);
void to_json(json& j, const LeanViolation& v);

std::string to_dot(const Graph& g);
/// Core vertices drawn as boxes; fill colour by role kind.
std::string to_dot(const CoreMarkedGraph& g);

/// Parses "0,1,2" (whitespace and empty entries ignored) into a vertex set.
VertexSet parse_vertex_list(const std::string& text);

}  // namespace kset
