#include "doctest.h"

#include <random>

#include "cordial/catalog.hpp"
#include "cordial/decide.hpp"
#include "oracles.hpp"

using namespace cordial;

namespace {

std::uint64_t mask_of(const VertexLabelling& f, const std::vector<Vertex>& pos) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) m |= std::uint64_t{f[pos[i]]} << i;
  return m;
}

void check_witness(const Digraph& d, const Verdict& v) {
  REQUIRE(v.witness);
  CHECK(is_friendly(v.witness->labelling, d));
  CHECK(lambda(d, v.witness->labelling) == v.witness->lambda);
  CHECK(is_cordial_triple(v.witness->lambda));
}

}  // namespace

TEST_CASE("small tournaments") {
  TournamentStream s(3);
  while (auto t = s.next()) CHECK(is_23_cordial(t->digraph()).decision);
  CHECK_FALSE(is_23_cordial(catalog::tournament_t43()).decision);
  CHECK_FALSE(is_23_cordial(catalog::tournament_t44()).decision);
  const auto t41 = catalog::tournament_t41();
  CHECK(is_cordial_triple(lambda(t41, catalog::tournament_t41_labelling())));
  CHECK(is_cordial_triple(lambda(catalog::tournament_t42(), catalog::tournament_t42_labelling())));
}

TEST_CASE("every labelled 6-tournament is not cordial (sampled indices)") {
  for (std::uint64_t i = 0; i < tournament_count(6); i += 97) CHECK_FALSE(is_23_cordial(tournament_from_index(6, i).digraph()).decision);
}

TEST_CASE("property: decision and least witness agree with the naive oracle") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 9;
    const Digraph d = oracle::random_digraph(rng, n, 0.15 + 0.1 * (i % 5));
    for (Scope s : {Scope::kNonisolated, Scope::kAll}) {
      const auto expected = oracle::least_cordial_mask(d, s == Scope::kAll);
      const Verdict v = is_23_cordial(d, s);
      REQUIRE(v.decision == expected.has_value());
      if (expected) {
        check_witness(d, v);
        CHECK(mask_of(v.witness->labelling, oracle::nonisolated(d, s == Scope::kAll)) == *expected);
      }
    }
  }
}

TEST_CASE("property: reversal preserves cordiality") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Digraph d = oracle::random_digraph(rng, 2 + i % 7, 0.4);
    CHECK(is_23_cordial(d).decision == is_23_cordial(reverse_digraph(d)).decision);
  }
}

TEST_CASE("property: thread count does not change verdicts") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const Digraph d = oracle::random_digraph(rng, 6 + i % 8, 0.3);
    const Verdict a = is_23_cordial(d, Scope::kNonisolated, {1});
    for (unsigned t : {2U, 3U, 8U}) {
      const Verdict b = is_23_cordial(d, Scope::kNonisolated, {t});
      CHECK(a.decision == b.decision);
      CHECK(a.search_space == b.search_space);
      if (a.witness) CHECK(a.witness->labelling == b.witness->labelling);
    }
    const Graph g = underlying_graph(d);
    const Verdict x = is_23_orientable(g, Scope::kNonisolated, {1});
    const Verdict y = is_23_orientable(g, Scope::kNonisolated, {4});
    CHECK(x.decision == y.decision);
    CHECK(x.search_space == y.search_space);
    if (x.witness) CHECK(*x.witness->orientation == *y.witness->orientation);
  }
  CHECK(is_23_orientable(gen_wheel(22), Scope::kNonisolated, {4}).decision == false);
}

TEST_CASE("search_space semantics") {
  const Verdict neg = is_23_cordial(catalog::tournament_t43());
  CHECK(neg.search_space == friendly_count(4));
  const Verdict pos = is_23_cordial(catalog::tournament_t41());
  CHECK(pos.search_space >= 1);
  CHECK(pos.search_space <= friendly_count(4));
}

TEST_CASE("cordial_feasible_triple") {
  CHECK(cordial_feasible_triple(3, 1));
  CHECK_FALSE(cordial_feasible_triple(3, 0));
  CHECK_FALSE(cordial_feasible_triple(3, 2));
  CHECK_THROWS(cordial_feasible_triple(2, 3));
  for (long m = 0; m <= 30; ++m)
    for (long z = 0; z <= m; ++z) CHECK(cordial_feasible_triple(m, z) == oracle::split_exists(m, z));
}

TEST_CASE("orientability examples") {
  CHECK_FALSE(is_23_orientable(gen_parallel_edges_graph(6)).decision);
  CHECK_FALSE(is_23_orientable(gen_wheel(10)).decision);
  const Graph k2(2, {{0, 1}});
  CHECK(is_23_orientable(k2).decision);
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(is_23_orientable(p3).decision);
  CHECK(brute_force_orientable_oracle(p3));

  const Graph w6 = gen_wheel(6);
  const Verdict v = is_23_orientable(w6);
  REQUIRE(v.decision);
  const Digraph& o = *v.witness->orientation;
  CHECK(underlying_graph(o) == w6);
  CHECK(o.size() == w6.size());
  check_witness(o, v);
}

TEST_CASE("X_7 depends on the scope") {
  const Graph x7 = gen_parallel_edges_graph(7);
  CHECK_FALSE(is_23_orientable(x7, Scope::kNonisolated).decision);
  const Verdict all = is_23_orientable(x7, Scope::kAll);
  REQUIRE(all.decision);
  CHECK(is_friendly(all.witness->labelling, x7));
}

TEST_CASE("property: orientability matches the brute-force oracle on random graphs") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 6, 0.5);
    if (g.size() > kMaxOracleEdges) continue;
    for (Scope s : {Scope::kNonisolated, Scope::kAll}) {
      const Verdict v = is_23_orientable(g, s);
      CHECK(v.decision == brute_force_orientable_oracle(g, s));
      if (v.decision) {
        const Digraph& o = *v.witness->orientation;
        CHECK(underlying_graph(o) == g);
        CHECK(is_cordial_triple(lambda(o, v.witness->labelling)));
      }
    }
  }
  CHECK_THROWS_AS(brute_force_orientable_oracle(gen_complete_graph(7)), CapExceeded);
}

TEST_CASE("orient_by_labelling rule") {
  const Graph g = gen_wheel(6);
  const VertexLabelling f{{1, 1, 0, 1, 0, 0}, Scope::kNonisolated};
  const Digraph o = orient_by_labelling(g, f);
  CHECK(underlying_graph(o) == g);
  std::size_t seen_bichromatic = 0, bichromatic = count_bichromatic(g, f);
  for (const Edge& e : g.edges()) {
    if (f[e.u] == f[e.v]) {
      CHECK(o.has_arc(e.u, e.v));
      continue;
    }
    const Vertex zero = f[e.u] == 0 ? e.u : e.v;
    const Vertex one = f[e.u] == 0 ? e.v : e.u;
    const bool forward = seen_bichromatic++ < (bichromatic + 1) / 2;
    CHECK(o.has_arc(forward ? zero : one, forward ? one : zero));
  }
}

TEST_CASE("cap on in-scope vertices") {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < 34; v += 2) arcs.push_back({v, v + 1});
  CHECK_THROWS_AS(is_23_cordial(Digraph(34, arcs)), CapExceeded);
  // isolated vertices do not count under the default scope
  CHECK_NOTHROW(is_23_cordial(Digraph(40, {{0, 1}})));
  CHECK_THROWS_AS(is_23_cordial(Digraph(40, {{0, 1}}), Scope::kAll), CapExceeded);
}

TEST_CASE("tournament census") {
  const std::size_t classes[] = {0, 0, 0, 2, 4, 12};
  const std::uint64_t cordial[] = {0, 0, 0, 8, 48, 1024};
  for (std::size_t n = 3; n <= 5; ++n) {
    const CensusReport r = tournament_census(n);
    CHECK(r.rows.size() == classes[n]);
    CHECK(r.cordial == cordial[n]);
    std::uint64_t sum = 0;
    for (const auto& row : r.rows) sum += row.class_size;
    CHECK(sum == r.total);
    CHECK(std::is_sorted(r.rows.begin(), r.rows.end(),
                         [](const auto& a, const auto& b) { return a.canonical < b.canonical; }));
  }
  const CensusReport r4 = tournament_census(4);
  std::vector<OutDegreeSequence> non;
  for (const auto& row : r4.rows)
    if (!row.cordial) non.push_back(row.out_degrees);
  std::sort(non.begin(), non.end());
  CHECK(non == std::vector<OutDegreeSequence>{{2, 2, 2, 0}, {3, 1, 1, 1}});

  const CensusReport r6 = tournament_census(6, {3});
  CHECK(r6.rows.size() == 56);
  CHECK(r6.cordial == 0);
  CHECK_THROWS(tournament_census(7));
}

TEST_CASE("census merge is order independent") {
  const auto whole = partial_tournament_census(5, 0, 1024);
  const auto a = partial_tournament_census(5, 0, 300);
  const auto b = partial_tournament_census(5, 300, 700);
  const auto c = partial_tournament_census(5, 700, 1024);
  const auto left = merge_census(merge_census(a, b), c);
  const auto right = merge_census(c, merge_census(b, a));
  for (const auto* m : {&left, &right}) {
    REQUIRE(m->rows.size() == whole.rows.size());
    for (std::size_t i = 0; i < whole.rows.size(); ++i) {
      CHECK(m->rows[i].canonical == whole.rows[i].canonical);
      CHECK(m->rows[i].class_size == whole.rows[i].class_size);
      CHECK(m->rows[i].representative == whole.rows[i].representative);
    }
  }
}

TEST_CASE("extremal arc count") {
  CHECK(max_arcs(6) == 14);
  CHECK(max_arcs(7) == 18);
  CHECK(monochromatic_edges_complete(6) == 6);
  CHECK(monochromatic_edges_complete(7) == 9);
  CHECK(monochromatic_edges_complete(8) == 12);
  CHECK(max_arcs(8) == 24);
  CHECK(max_arcs(100) == 3750);
  CHECK_THROWS(max_arcs(5));
}

TEST_CASE("property: gamma is at least the monochromatic count of K_n") {
  for (std::size_t n : {6U, 8U}) {
    const Graph k = gen_complete_graph(n);
    FriendlyLabellingStream s(k, Scope::kNonisolated);
    while (auto f = s.next()) CHECK(k.size() - count_bichromatic(k, *f) >= monochromatic_edges_complete(n));
  }
}

TEST_CASE("extremal verification at n=6") {
  const ExtremalReport r = verify_extremal_bound(6);
  CHECK(r.witness_cordial);
  CHECK(r.witness.size() == 14);
  CHECK(r.subsets_examined == 1);
  CHECK(r.orientable_subsets == 0);
  CHECK(r.confirmed);
  CHECK_THROWS(verify_extremal_bound(8));
}

TEST_CASE("extremal verification at n=7 examines all 210 subsets") {
  const ExtremalReport r = verify_extremal_bound(7);
  CHECK(r.witness_cordial);
  CHECK(r.subsets_examined == 210);
  // Every 19-edge subgraph of K_7 is orientable (independently brute-forced),
  // so the closed form is not tight at n = 7.
  CHECK(r.orientable_subsets == 210);
  CHECK_FALSE(r.confirmed);
}

TEST_CASE("non-closure chain") {
  const NonClosureReport r = non_closure_witnesses();
  CHECK(r.holds());
  CHECK(Tournament::is_tournament(r.five));
  CHECK(Tournament::is_tournament(r.six));
  CHECK(r.cordial_five_extensions == 16);
  CHECK(r.noncordial_six_extensions == 32);
}
