#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cordial/graph.hpp"

namespace cordial {

/// Which vertices a friendliness count ranges over.
enum class Scope {
  kNonisolated,  // only vertices incident with some arc/edge (default)
  kAll,
};

/// A (0,1)-labelling of the vertices of a host (di)graph.
struct VertexLabelling {
  std::vector<std::uint8_t> labels;
  Scope scope = Scope::kNonisolated;

  std::size_t size() const { return labels.size(); }
  std::uint8_t operator[](Vertex v) const { return labels[v]; }
  bool operator==(const VertexLabelling&) const = default;
};

/// Counts of arcs labelled +1 (alpha), -1 (beta), 0 (gamma).
struct LambdaTriple {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;

  std::size_t total() const { return alpha + beta + gamma; }
  bool operator==(const LambdaTriple&) const = default;
};

/// Lambda restricted to arcs at the centre (spoke) and all other arcs (rim).
struct LambdaSplit {
  LambdaTriple spoke;
  LambdaTriple rim;

  LambdaTriple whole() const {
    return {spoke.alpha + rim.alpha, spoke.beta + rim.beta, spoke.gamma + rim.gamma};
  }
};

struct LabelledArc {
  Arc arc;
  int label = 0;  // f(head) - f(tail)
};

/// Vertices counted by `scope`, ascending.
std::vector<Vertex> scope_vertices(const Digraph& d, Scope scope);
std::vector<Vertex> scope_vertices(const Graph& g, Scope scope);

/// Throws std::invalid_argument when f does not cover the host.
bool is_friendly(const VertexLabelling& f, const Digraph& host);
bool is_friendly(const VertexLabelling& f, const Graph& host);

std::vector<LabelledArc> induce_arc_labelling(const Digraph& d, const VertexLabelling& f);
LambdaTriple lambda(const Digraph& d, const VertexLabelling& f);
LambdaSplit lambda_split(const Digraph& d, Vertex center, const VertexLabelling& f);

/// Pairwise differences among alpha, beta, gamma are at most one.
constexpr bool is_cordial_triple(const LambdaTriple& t) {
  auto diff = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
  return diff(t.alpha, t.beta) <= 1 && diff(t.alpha, t.gamma) <= 1 && diff(t.beta, t.gamma) <= 1;
}

VertexLabelling complement_labelling(const VertexLabelling& f);

/// Edges whose endpoints carry different labels.
std::size_t count_bichromatic(const Graph& g, const VertexLabelling& f);

// ---------------------------------------------------------------------------
// Friendly enumeration. A mask over p in-scope vertices has bit i set when the
// i-th in-scope vertex is labelled 1.

inline constexpr std::size_t kMaxScopeVertices = 32;

std::uint64_t binomial(unsigned n, unsigned k);

/// Number of friendly masks over `bits` positions.
std::uint64_t friendly_count(unsigned bits);

/// The k-subset mask with the given colex rank (= rank in ascending order).
std::uint64_t unrank_combination(unsigned k, std::uint64_t rank);

/// Gosper's successor: next larger mask with the same popcount.
constexpr std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Number of masks with popcount k over `bits` positions that are <= w.
std::uint64_t count_combinations_le(unsigned bits, unsigned k, std::uint64_t w);

/// Number of friendly masks over `bits` positions that are <= w.
std::uint64_t count_friendly_le(unsigned bits, std::uint64_t w);

/// Ascending stream of friendly masks over `bits` positions.
class FriendlyMasks {
 public:
  explicit FriendlyMasks(unsigned bits);
  std::optional<std::uint64_t> next();

 private:
  struct Cursor {
    std::uint64_t value;
    bool done;
  };
  void advance(Cursor& c) const;

  std::uint64_t end_;
  Cursor low_;
  std::optional<Cursor> high_;
};

/// Expand a mask over `positions` into a full labelling of n vertices;
/// vertices outside `positions` get 0.
VertexLabelling labelling_from_mask(std::size_t n, std::span<const Vertex> positions,
                                    std::uint64_t mask, Scope scope);

/// Every friendly labelling of the host, ascending by mask.
class FriendlyLabellingStream {
 public:
  FriendlyLabellingStream(const Digraph& host, Scope scope);
  FriendlyLabellingStream(const Graph& host, Scope scope);

  std::optional<VertexLabelling> next();
  std::uint64_t total() const { return friendly_count(static_cast<unsigned>(positions_.size())); }

 private:
  FriendlyLabellingStream(std::size_t n, std::vector<Vertex> positions, Scope scope);

  std::size_t n_;
  std::vector<Vertex> positions_;
  Scope scope_;
  FriendlyMasks masks_;
};

// ---------------------------------------------------------------------------
// Quasigroups.

/// Cayley table of a binary operation on {0..order-1}; at(a,b) = a o b.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::uint8_t> table;

  std::uint8_t at(std::size_t a, std::size_t b) const { return table[a * order + b]; }
  bool is_latin() const;
  bool is_commutative() const;
  bool operator==(const CayleyTable&) const = default;
};

inline constexpr std::size_t kMaxQuasigroupOrder = 4;

std::vector<CayleyTable> enumerate_quasigroups(std::size_t order);

/// a o b = (b - a) mod k.
CayleyTable zk_minus_table(std::size_t k);

}  // namespace cordial
