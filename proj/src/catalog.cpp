#include "cordial/catalog.hpp"

namespace cordial::catalog {

Digraph tournament_t43() { return Digraph(4, {{2, 0}, {2, 3}, {3, 1}, {1, 0}, {1, 2}, {3, 0}}); }

Digraph tournament_t44() { return Digraph(4, {{0, 2}, {2, 3}, {3, 1}, {0, 1}, {1, 2}, {0, 3}}); }

Digraph tournament_t41() { return Digraph(4, {{0, 2}, {2, 3}, {3, 1}, {1, 0}, {2, 1}, {0, 3}}); }

VertexLabelling tournament_t41_labelling() { return {{0, 1, 1, 0}, Scope::kNonisolated}; }

Digraph tournament_t42() { return Digraph(4, {{0, 2}, {2, 3}, {3, 1}, {0, 1}, {2, 1}, {0, 3}}); }

VertexLabelling tournament_t42_labelling() { return {{0, 0, 1, 1}, Scope::kNonisolated}; }

Digraph five_tournament_example() {
  return Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 2}, {4, 2}, {3, 0}, {3, 1}, {0, 4}});
}

VertexLabelling five_tournament_example_labelling() { return {{0, 0, 1, 1, 0}, Scope::kNonisolated}; }

}  // namespace cordial::catalog
