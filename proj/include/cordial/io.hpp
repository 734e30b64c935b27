#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "cordial/construct.hpp"
#include "cordial/decide.hpp"
#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial {

// Text format:
//   D n m      (or G n m)
//   u v        m lines, arc u -> v or edge {u, v}
// Blank lines and anything after '#' are ignored.

using GraphInput = std::variant<Digraph, Graph>;

/// Throws ParseError naming the offending line.
GraphInput parse_graph_text(std::string_view text);
std::string write_text(const Digraph& d);
std::string write_text(const Graph& g);

// Labelling format: `L n`, then n lines `v b`, each vertex exactly once.
VertexLabelling parse_labelling_text(std::string_view text, Scope scope = Scope::kNonisolated);
std::string write_text(const VertexLabelling& f);

/// DOT drawing; with a labelling, vertices show their label and arcs the
/// induced arc label.
std::string to_dot(const Digraph& d, const VertexLabelling* f = nullptr,
                   std::string_view name = "D");
std::string to_dot(const Graph& g, std::string_view name = "G");

void to_json(nlohmann::json& j, const LambdaTriple& t);
void to_json(nlohmann::json& j, const Verdict& v);
void to_json(nlohmann::json& j, const CensusRow& row);
void to_json(nlohmann::json& j, const CensusReport& r);

/// Verdict-shaped JSON plus a "case" field (null outside wheel/fan builds).
nlohmann::json construction_json(const ConstructionResult& r, std::optional<WheelCase> tag);

std::string format_triple(const LambdaTriple& t);

}  // namespace cordial
