#pragma once

#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial::catalog {

// Small named tournaments, vertices numbered in drawing order.

/// Non-cordial 4-tournament, out-degrees (2,2,2,0).
Digraph tournament_t43();
/// Non-cordial 4-tournament, out-degrees (3,1,1,1); the reversal of t43.
Digraph tournament_t44();
/// Cordial 4-tournament, out-degrees (2,2,1,1), with a cordial labelling.
Digraph tournament_t41();
VertexLabelling tournament_t41_labelling();
/// Cordial transitive 4-tournament, out-degrees (3,2,1,0), with a cordial labelling.
Digraph tournament_t42();
VertexLabelling tournament_t42_labelling();

/// Labelled 5-tournament with Lambda = (3,3,4).
Digraph five_tournament_example();
VertexLabelling five_tournament_example_labelling();

}  // namespace cordial::catalog
