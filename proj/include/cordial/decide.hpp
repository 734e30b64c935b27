#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial {

struct SearchOptions {
  /// Worker threads for labelling searches; results do not depend on it.
  unsigned threads = 1;
};

struct Witness {
  VertexLabelling labelling;
  std::optional<Digraph> orientation;  // set by orientability decisions
  LambdaTriple lambda;
};

/// Outcome of a decision procedure. A positive verdict carries the first
/// witness in ascending-mask order; search_space counts friendly labellings
/// up to the witness, or all of them for a negative verdict.
struct Verdict {
  bool decision = false;
  std::optional<Witness> witness;
  std::uint64_t search_space = 0;
};

/// Exhaustive (2,3)-cordiality over friendly labellings of the in-scope
/// vertices. Throws CapExceeded beyond 32 in-scope vertices.
Verdict is_23_cordial(const Digraph& d, Scope scope = Scope::kNonisolated,
                      const SearchOptions& opts = {});

/// True iff m - z bichromatic arcs can be split into alpha + beta so that
/// (alpha, beta, z) is a cordial triple.
bool cordial_feasible_triple(std::size_t m, std::size_t z);

/// Orient g for labelling f: the first ceil(B/2) bichromatic edges (edge
/// order) go 0 -> 1, the remaining bichromatic edges 1 -> 0, monochromatic
/// edges low -> high.
Digraph orient_by_labelling(const Graph& g, const VertexLabelling& f);

/// (2,3)-orientability via the per-labelling feasibility reduction.
Verdict is_23_orientable(const Graph& g, Scope scope = Scope::kNonisolated,
                         const SearchOptions& opts = {});

inline constexpr std::size_t kMaxOracleEdges = 16;

/// Tries every orientation against every friendly labelling. Independent of
/// the reduction used by is_23_orientable. Throws CapExceeded above 16 edges.
bool brute_force_orientable_oracle(const Graph& g, Scope scope = Scope::kNonisolated);

struct CensusRow {
  std::string canonical;
  OutDegreeSequence out_degrees;
  std::uint64_t class_size = 0;
  std::uint64_t representative = 0;  // least labelled index in the class
  bool cordial = false;
};

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t cordial = 0;
  std::uint64_t noncordial = 0;
  std::vector<CensusRow> rows;  // sorted by canonical form
};

/// Partial census over labelled indices [first, last), classes undecided.
CensusReport partial_tournament_census(std::size_t n, std::uint64_t first, std::uint64_t last);

/// Associative, commutative merge of partial censuses (classes undecided).
CensusReport merge_census(const CensusReport& a, const CensusReport& b);

/// Isomorphism-class census of all labelled n-tournaments, 3 <= n <= 6.
CensusReport tournament_census(std::size_t n, const SearchOptions& opts = {});

/// Number of monochromatic edges of K_n under a balanced labelling.
std::uint64_t monochromatic_edges_complete(std::size_t n);

/// Closed-form maximum arc count of a (2,3)-cordial digraph, n >= 6.
std::uint64_t max_arcs(std::size_t n);

struct ExtremalReport {
  std::size_t n = 0;
  std::uint64_t bound = 0;
  std::uint64_t monochromatic = 0;
  Digraph witness;
  VertexLabelling witness_labelling;
  LambdaTriple witness_lambda;
  bool witness_cordial = false;
  std::uint64_t subsets_examined = 0;
  std::uint64_t orientable_subsets = 0;
  std::optional<Graph> first_orientable;  // a (bound+1)-edge counterexample
  bool confirmed = false;
};

/// Checks the bound for 6 <= n <= 7: a cordial digraph at the bound exists
/// and no (bound+1)-edge subgraph of K_n is orientable.
ExtremalReport verify_extremal_bound(std::size_t n, const SearchOptions& opts = {});

struct NonClosureReport {
  Digraph four;  // the (2,2,2,0) 4-tournament
  Digraph five;
  Digraph six;
  bool four_noncordial = false;
  bool five_cordial = false;
  bool six_noncordial = false;
  bool deletions_recover = false;
  std::size_t cordial_five_extensions = 0;     // out of 16
  std::size_t noncordial_six_extensions = 0;   // out of 32
  bool holds() const { return four_noncordial && five_cordial && six_noncordial && deletions_recover; }
};

/// Chain non-cordial 4-tournament < cordial 5-tournament < non-cordial
/// 6-tournament under vertex deletion.
NonClosureReport non_closure_witnesses();

}  // namespace cordial
