#include "doctest.h"

#include <random>
#include <set>

#include "cordial/catalog.hpp"
#include "cordial/labelling.hpp"
#include "oracles.hpp"

using namespace cordial;

namespace {
VertexLabelling lab(std::vector<std::uint8_t> v, Scope s = Scope::kNonisolated) { return {std::move(v), s}; }
}  // namespace

TEST_CASE("is_friendly") {
  const Digraph k5 = [] {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v) arcs.push_back({u, v});
    return Digraph(5, arcs);
  }();
  CHECK(is_friendly(lab({1, 1, 0, 0, 0}), k5));
  const Digraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_friendly(lab({0, 0, 0, 1}), k4));
  CHECK_THROWS_AS(is_friendly(lab({0, 1}), k4), std::invalid_argument);

  // X_7: vertex 6 is isolated.
  const Graph x7 = gen_parallel_edges_graph(7);
  const auto f = lab({1, 0, 1, 0, 1, 0, 1}, Scope::kAll);
  CHECK(is_friendly(f, x7));
  CHECK(is_friendly(lab({1, 0, 1, 0, 1, 0, 1}), x7));
  CHECK_FALSE(is_friendly(lab({1, 1, 1, 0, 1, 0, 0}, Scope::kNonisolated), x7));
  CHECK_FALSE(is_friendly(lab({1, 1, 0, 0, 1, 1, 1}, Scope::kAll), x7));
}

TEST_CASE("induced arc labels") {
  const Digraph d(2, {{0, 1}});
  CHECK(induce_arc_labelling(d, lab({0, 1}))[0].label == 1);
  const Digraph digon(2, {{0, 1}, {1, 0}});
  const auto g = induce_arc_labelling(digon, lab({0, 1}));
  CHECK(g[0].label == 1);
  CHECK(g[1].label == -1);
}

TEST_CASE("five-tournament example labels") {
  const Digraph d = catalog::five_tournament_example();
  const auto f = catalog::five_tournament_example_labelling();
  std::size_t zeros = 0, plus = 0, minus = 0;
  for (const auto& la : induce_arc_labelling(d, f)) (la.label == 0 ? zeros : la.label > 0 ? plus : minus)++;
  CHECK(zeros == 4);
  CHECK(plus == 3);
  CHECK(minus == 3);
  CHECK(lambda(d, f) == LambdaTriple{3, 3, 4});
}

TEST_CASE("lambda basics") {
  const Digraph d = gen_cycle_out_wheel(7);
  CHECK(lambda(d, lab(std::vector<std::uint8_t>(7, 0))) == LambdaTriple{0, 0, d.size()});
  CHECK(lambda(Digraph(3, {}), lab({0, 1, 0})) == LambdaTriple{0, 0, 0});
}

TEST_CASE("lambda_split") {
  // centre 5, rim 0..4 labelled 1,0,1,0,1
  const Digraph d = gen_cycle_out_wheel(6);
  const auto f = lab({1, 0, 1, 0, 1, 0});
  const LambdaSplit s = lambda_split(d, 5, f);
  CHECK(s.spoke == LambdaTriple{3, 0, 2});
  CHECK(s.whole() == lambda(d, f));

  const Digraph w = reverse_digraph(gen_cycle_out_wheel(9));
  const auto c = lab(std::vector<std::uint8_t>(9, 1));
  CHECK(lambda_split(w, 8, c).spoke == LambdaTriple{0, 0, 8});
  CHECK(lambda_split(w, 8, c).rim == LambdaTriple{0, 0, 8});
}

TEST_CASE("property: lambda_split partitions lambda, directed rim balances") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 4; n <= 12; ++n) {
    const Digraph d = gen_cycle_out_wheel(n);
    for (int i = 0; i < 40; ++i) {
      VertexLabelling f{std::vector<std::uint8_t>(n), Scope::kNonisolated};
      for (auto& b : f.labels) b = rng() & 1U;
      const LambdaSplit s = lambda_split(d, static_cast<Vertex>(n - 1), f);
      CHECK(s.whole() == lambda(d, f));
      CHECK(s.rim.alpha == s.rim.beta);
    }
  }
}

TEST_CASE("is_cordial_triple") {
  static_assert(is_cordial_triple({3, 3, 4}));
  CHECK(is_cordial_triple({2, 2, 2}));
  CHECK_FALSE(is_cordial_triple({1, 3, 2}));
}

TEST_CASE("complement") {
  CHECK(complement_labelling(lab({0, 1, 0})).labels == std::vector<std::uint8_t>{1, 0, 1});
  const auto f = lab({0, 1, 1, 0, 1});
  CHECK(complement_labelling(complement_labelling(f)) == f);
}

TEST_CASE("property: reversal and complement identities") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 8;
    const Digraph d = oracle::random_digraph(rng, n, 0.5);
    VertexLabelling f{std::vector<std::uint8_t>(n), Scope::kNonisolated};
    for (auto& b : f.labels) b = rng() & 1U;
    const LambdaTriple t = lambda(d, f);
    const LambdaTriple sw{t.beta, t.alpha, t.gamma};
    CHECK(lambda(reverse_digraph(d), f) == sw);
    CHECK(lambda(d, complement_labelling(f)) == sw);
    CHECK(lambda(reverse_digraph(d), complement_labelling(f)) == t);
    CHECK(t.total() == d.size());
  }
}

TEST_CASE("property: bichromatic edges of a cycle are even") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph c = gen_cycle(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      VertexLabelling f{std::vector<std::uint8_t>(n), Scope::kAll};
      for (std::size_t v = 0; v < n; ++v) f.labels[v] = (m >> v) & 1U;
      CHECK(count_bichromatic(c, f) % 2 == 0);
    }
  }
}

TEST_CASE("friendly counts") {
  CHECK(friendly_count(4) == 6);
  CHECK(friendly_count(5) == 20);
  CHECK(friendly_count(6) == 20);
  CHECK(friendly_count(0) == 1);
  CHECK(friendly_count(1) == 2);
}

TEST_CASE("property: FriendlyMasks is the ascending friendly subset of [0, 2^p)") {
  for (unsigned p = 0; p <= 14; ++p) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p); ++m) {
      const int ones = __builtin_popcountll(m);
      if (std::abs(2 * ones - static_cast<int>(p)) <= 1) expected.push_back(m);
    }
    std::vector<std::uint64_t> got;
    FriendlyMasks masks(p);
    while (auto m = masks.next()) got.push_back(*m);
    CHECK(got == expected);
    CHECK(got.size() == friendly_count(p));
    for (std::size_t i = 0; i < got.size(); i += 7) CHECK(count_friendly_le(p, got[i]) == i + 1);
  }
  CHECK_THROWS_AS(FriendlyMasks(33), CapExceeded);
}

TEST_CASE("property: combination unranking inverts counting") {
  for (unsigned k = 1; k <= 5; ++k) {
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t r = 0; r < binomial(12, k); ++r) {
      CHECK(unrank_combination(k, r) == x);
      CHECK(count_combinations_le(12, k, x) == r + 1);
      x = next_combination(x);
    }
  }
}

TEST_CASE("FriendlyLabellingStream leaves isolated vertices at 0") {
  const Graph x7 = gen_parallel_edges_graph(7);
  FriendlyLabellingStream s(x7, Scope::kNonisolated);
  std::uint64_t count = 0;
  while (auto f = s.next()) {
    CHECK(is_friendly(*f, x7));
    ++count;
  }
  CHECK(count == s.total());
  CHECK(count == 20);
  FriendlyLabellingStream all(x7, Scope::kAll);
  CHECK(all.total() == 70);
}

TEST_CASE("quasigroups") {
  CHECK(enumerate_quasigroups(1).size() == 1);
  const auto two = enumerate_quasigroups(2);
  CHECK(two.size() == 2);
  for (const auto& q : two) CHECK(q.is_commutative());
  CHECK(enumerate_quasigroups(3).size() == 12);
  CHECK(enumerate_quasigroups(4).size() == 576);
  for (const auto& q : enumerate_quasigroups(3)) CHECK(q.is_latin());
  CHECK_THROWS_AS(enumerate_quasigroups(5), CapExceeded);

  CHECK(zk_minus_table(2).is_commutative());
  const auto z3 = zk_minus_table(3);
  CHECK(z3.at(0, 1) == 1);
  CHECK(z3.at(1, 0) == 2);
  CHECK(z3.is_latin());
}

TEST_CASE("order-3 Latin squares by brute force over all 3^9 fillings") {
  std::set<std::vector<std::uint8_t>> latin;
  for (int code = 0; code < 19683; ++code) {
    CayleyTable t{3, std::vector<std::uint8_t>(9)};
    int c = code;
    for (auto& e : t.table) {
      e = static_cast<std::uint8_t>(c % 3);
      c /= 3;
    }
    if (t.is_latin()) latin.insert(t.table);
  }
  std::set<std::vector<std::uint8_t>> enumerated;
  for (const auto& q : enumerate_quasigroups(3)) enumerated.insert(q.table);
  CHECK(latin == enumerated);
}
