#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cordial/errors.hpp"

namespace cordial {

using Vertex = std::uint32_t;

/// Directed arc tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple digraph on vertices 0..n-1. Loops are rejected, duplicate arcs are
/// collapsed, digons are allowed. Arcs are kept sorted lexicographically.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const { return n_; }
  std::size_t size() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }

  bool has_arc(Vertex tail, Vertex head) const;
  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;
  bool is_isolated(Vertex v) const;
  bool has_digon() const;

  bool operator==(const Digraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

/// Simple undirected graph on vertices 0..n-1, edges sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool is_isolated(Vertex v) const { return degree(v) == 0; }
  bool is_connected() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// A digraph with exactly one arc between every pair of distinct vertices.
class Tournament {
 public:
  /// Throws std::invalid_argument unless `d` is a tournament.
  explicit Tournament(Digraph d);

  static bool is_tournament(const Digraph& d);

  const Digraph& digraph() const { return d_; }
  std::size_t order() const { return d_.order(); }

 private:
  Digraph d_;
};

/// Out-degrees sorted descending.
using OutDegreeSequence = std::vector<std::size_t>;

Digraph reverse_digraph(const Digraph& d);
OutDegreeSequence out_degree_sequence(const Digraph& d);

/// Underlying undirected graph (digons collapse to one edge).
Graph underlying_graph(const Digraph& d);

/// Digraph with both arcs for every edge; used for isomorphism of graphs.
Digraph symmetric_digraph(const Graph& g);

/// Sub-digraph induced by deleting vertex v; later vertices shift down by one.
Digraph delete_vertex(const Digraph& d, Vertex v);

// Generators. Wheel centre is vertex n-1 with rim 0..n-2; fan centre is
// vertex 0 with rim path 1..n-1.
Graph gen_complete_graph(std::size_t n);
Graph gen_wheel(std::size_t n);
Graph gen_fan(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_parallel_edges_graph(std::size_t n);
Digraph gen_cycle_out_wheel(std::size_t n);
/// Fan with every spoke leaving the centre and the rim path directed 1->...->n-1.
Digraph gen_cycle_out_fan(std::size_t n);

// Tournament enumeration. Pairs (u,v), u<v, are indexed lexicographically;
// bit i of the index set means the i-th pair is oriented v->u.
inline constexpr std::size_t kMaxTournamentOrder = 8;
std::uint64_t tournament_count(std::size_t n);
Tournament tournament_from_index(std::size_t n, std::uint64_t index);

/// Stream over all labelled tournaments on n vertices, index ascending.
class TournamentStream {
 public:
  explicit TournamentStream(std::size_t n);
  std::optional<Tournament> next();
  std::uint64_t total() const { return total_; }

 private:
  std::size_t n_;
  std::uint64_t total_;
  std::uint64_t index_ = 0;
};

inline constexpr std::size_t kMaxCanonicalOrder = 9;

/// Lexicographically least row-major adjacency bit string ('0'/'1') over all
/// vertex permutations. Equal iff the digraphs are isomorphic.
std::string canonical_form(const Digraph& d);

}  // namespace cordial
