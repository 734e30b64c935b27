#include "cordial/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cordial/catalog.hpp"
#include "cordial/construct.hpp"
#include "cordial/io.hpp"

namespace cordial {

namespace {

// Expected values, kept as data so a correction is a table edit.

struct TournamentExpectation {
  std::size_t n;
  std::uint64_t total;
  std::uint64_t cordial;
  std::size_t classes;
  std::vector<OutDegreeSequence> noncordial_classes;
};

const std::vector<TournamentExpectation> kTournaments = {
    {3, 8, 8, 2, {}},
    {4, 64, 48, 4, {{2, 2, 2, 0}, {3, 1, 1, 1}}},
    {5, 1024, 1024, 12, {}},
    {6, 32768, 0, 56, {}},
};

constexpr LambdaTriple kFiveTournamentLambda{3, 3, 4};
constexpr std::size_t kSymmetrySamples = 1000;
constexpr std::uint64_t kSymmetrySeed = 20230611;

const std::set<std::size_t> kNonOrientableWheels = {10, 22};  // for 4 <= n <= 30
constexpr std::size_t kWheelDecideMax = 30;
constexpr std::size_t kWheelConstructMax = 20;

constexpr std::size_t kFanMax = 20;
constexpr std::size_t kFanExcludedN = 10;
constexpr LambdaTriple kFanExcludedLambda{6, 6, 5};

struct ExtremalExpectation {
  std::size_t n;
  std::uint64_t bound;
  std::uint64_t subsets;
};
const std::vector<ExtremalExpectation> kExtremal = {{6, 14, 1}, {7, 18, 210}};

constexpr std::size_t kConnectedGraphClasses = 31;  // connected graphs on 1..5 vertices

/// Accumulates failures without stopping at the first.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (failures_++ < 8) fail_ << (fail_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& s) { note_ << (note_.tellp() > 0 ? "; " : "") << s; }
  bool ok() const { return ok_; }
  std::string detail() const {
    if (ok_) return note_.str();
    std::string out = "FAILED: " + fail_.str();
    if (failures_ > 8) out += " (+" + std::to_string(failures_ - 8) + " more)";
    if (!note_.str().empty()) out += " | " + note_.str();
    return out;
  }

 private:
  bool ok_ = true;
  std::size_t failures_ = 0;
  std::ostringstream fail_;
  std::ostringstream note_;
};

void claim_tournaments(Check& c, const SearchOptions& opts) {
  for (const auto& e : kTournaments) {
    const CensusReport r = tournament_census(e.n, opts);
    const std::string tag = "n=" + std::to_string(e.n);
    c.expect(r.total == e.total, tag + " total " + std::to_string(r.total));
    c.expect(r.cordial == e.cordial, tag + " cordial " + std::to_string(r.cordial));
    c.expect(r.rows.size() == e.classes, tag + " classes " + std::to_string(r.rows.size()));
    std::vector<OutDegreeSequence> non;
    for (const auto& row : r.rows)
      if (!row.cordial) non.push_back(row.out_degrees);
    std::sort(non.begin(), non.end());
    auto expected = e.noncordial_classes;
    std::sort(expected.begin(), expected.end());
    if (e.cordial != 0) c.expect(non == expected, tag + " non-cordial class degree sequences differ");

    // Labelled-level recount, independent of the class attribution.
    std::uint64_t direct = 0;
    TournamentStream stream(e.n);
    while (auto t = stream.next()) direct += is_23_cordial(t->digraph()).decision ? 1 : 0;
    c.expect(direct == e.cordial, tag + " labelled recount " + std::to_string(direct));
    c.note(tag + ": " + std::to_string(r.cordial) + "/" + std::to_string(r.total) + " cordial, " +
           std::to_string(r.rows.size()) + " classes");
  }
}

void claim_five_tournament(Check& c, const SearchOptions&) {
  std::size_t ok = 0;
  TournamentStream stream(5);
  while (auto t = stream.next()) {
    try {
      const auto r = label_5_tournament(*t);
      c.expect(r.validated && r.lambda == kFiveTournamentLambda, "lambda " + format_triple(r.lambda));
      ok += r.lambda == kFiveTournamentLambda ? 1 : 0;
    } catch (const ValidationError& e) {
      c.expect(false, e.what());
    }
  }
  c.expect(ok == 1024, "constructed " + std::to_string(ok) + "/1024");
  c.note(std::to_string(ok) + "/1024 labelled 5-tournaments give (3,3,4)");
}

void claim_symmetry(Check& c, const SearchOptions&) {
  std::mt19937_64 rng(kSymmetrySeed);
  std::uniform_int_distribution<std::size_t> order(1, 7);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < kSymmetrySamples; ++s) {
    const std::size_t n = order(rng);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && coin(rng)) arcs.push_back({u, v});
    const Digraph d(n, std::move(arcs));
    VertexLabelling f{std::vector<std::uint8_t>(n), Scope::kNonisolated};
    for (auto& b : f.labels) b = coin(rng) ? 1 : 0;

    const LambdaTriple t = lambda(d, f);
    const LambdaTriple swapped{t.beta, t.alpha, t.gamma};
    const Digraph r = reverse_digraph(d);
    const VertexLabelling fc = complement_labelling(f);
    c.expect(lambda(r, f) == swapped, "reversal identity, sample " + std::to_string(s));
    c.expect(lambda(d, fc) == swapped, "complement identity, sample " + std::to_string(s));
    c.expect(lambda(r, fc) == t, "double identity, sample " + std::to_string(s));
  }
  c.note(std::to_string(kSymmetrySamples) + " random digraphs, seed " + std::to_string(kSymmetrySeed));
}

void claim_rim_parity(Check& c, const SearchOptions&) {
  std::uint64_t checked = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph cycle = gen_cycle(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexLabelling f{std::vector<std::uint8_t>(n), Scope::kAll};
      for (std::size_t v = 0; v < n; ++v) f.labels[v] = (mask >> v) & 1U;
      c.expect(count_bichromatic(cycle, f) % 2 == 0, "odd bichromatic count on C_" + std::to_string(n));
      ++checked;
    }
  }
  c.note(std::to_string(checked) + " labellings of cycles C_3..C_12");
}

void claim_wheel(Check& c, const SearchOptions& opts) {
  std::set<std::size_t> non_orientable;
  for (std::size_t n = 4; n <= kWheelDecideMax; ++n) {
    const Verdict v = is_23_orientable(gen_wheel(n), Scope::kNonisolated, opts);
    if (!v.decision) non_orientable.insert(n);
  }
  c.expect(non_orientable == kNonOrientableWheels, "non-orientable wheels differ from {10,22}");
  std::size_t built = 0;
  for (std::size_t n = 4; n <= kWheelConstructMax; ++n) {
    const bool excluded = wheel_case(n) == WheelCase::kExcluded;
    c.expect(excluded == (n % 12 == 10), "wheel case tag at n=" + std::to_string(n));
    try {
      const auto r = orient_wheel(n);
      c.expect(r.has_value() != excluded, "orient_wheel availability at n=" + std::to_string(n));
      if (r) {
        c.expect(r->validated && underlying_graph(r->digraph) == gen_wheel(n),
                 "orient_wheel output at n=" + std::to_string(n));
        ++built;
      }
    } catch (const ValidationError& e) {
      c.expect(false, e.what());
    }
  }
  std::string list;
  for (auto n : non_orientable) list += (list.empty() ? "" : ",") + std::to_string(n);
  c.note("non-orientable for n in {" + list + "} over 4..30; " + std::to_string(built) +
         " validated constructions over 4..20");
}

void claim_cycle_out_wheel(Check& c, const SearchOptions&) {
  for (std::size_t n = 4; n <= 14; ++n) {
    const auto r = check_cycle_out_wheel_not_cordial(n);
    c.expect(!r.counterexample, "cycle-out-wheel n=" + std::to_string(n) + " has a cordial labelling");
    c.expect(r.spoke_accounting_ok && r.rim_balanced, "spoke/rim accounting at n=" + std::to_string(n));
    c.expect(!is_23_cordial(gen_cycle_out_wheel(n)).decision, "decide agrees at n=" + std::to_string(n));
  }
  c.note("n = 4..14 exhaustive");
}

void claim_cycle_out_fan(Check& c, const SearchOptions&) {
  for (std::size_t n = 5; n <= 14; ++n) {
    const auto r = check_cycle_out_fan_not_cordial(n);
    if (r.counterexample) {
      std::string labels;
      for (auto b : r.counterexample->labels) labels += std::to_string(int{b});
      const Digraph d = gen_cycle_out_fan(n);
      c.expect(false, "cycle-out-fan n=" + std::to_string(n) + " is cordial under labelling " + labels +
                          " with lambda " + format_triple(lambda(d, *r.counterexample)));
    }
    c.expect(!is_23_cordial(gen_cycle_out_fan(n)).decision == !r.counterexample,
             "decide disagrees at n=" + std::to_string(n));
  }
  c.note("n = 5..14 exhaustive");
}

void claim_fan(Check& c, const SearchOptions&) {
  for (std::size_t n = 4; n <= kFanMax; ++n) {
    try {
      const auto r = orient_fan(n);
      c.expect(r.validated && underlying_graph(r.digraph) == gen_fan(n),
               "orient_fan output at n=" + std::to_string(n));
      if (n == kFanExcludedN) {
        c.expect(r.lambda == kFanExcludedLambda, "n=10 lambda " + format_triple(r.lambda));
        c.note("n=10 lambda " + format_triple(r.lambda));
      }
    } catch (const ValidationError& e) {
      c.expect(false, e.what());
    }
  }
  c.note("validated for n = 4..20");
}

void claim_parallel_edges(Check& c, const SearchOptions& opts) {
  const Graph x6 = gen_parallel_edges_graph(6);
  const Graph x7 = gen_parallel_edges_graph(7);
  c.expect(!is_23_orientable(x6, Scope::kNonisolated, opts).decision, "X_6 orientable (nonisolated)");
  c.expect(!is_23_orientable(x6, Scope::kAll, opts).decision, "X_6 orientable (all)");
  c.expect(!is_23_orientable(x7, Scope::kNonisolated, opts).decision, "X_7 orientable (nonisolated)");
  c.expect(is_23_orientable(x7, Scope::kAll, opts).decision, "X_7 not orientable (all)");
  c.note("X_6: no/no; X_7: no under nonisolated scope, yes under all-vertices scope");
}

void claim_extremal(Check& c, const SearchOptions& opts, std::size_t n) {
  const auto it = std::find_if(kExtremal.begin(), kExtremal.end(), [n](const auto& e) { return e.n == n; });
  const auto r = verify_extremal_bound(n, opts);
  c.expect(max_arcs(n) == it->bound, "max_arcs(" + std::to_string(n) + ") = " + std::to_string(max_arcs(n)));
  c.expect(r.witness_cordial, "no cordial witness at the bound");
  c.expect(r.subsets_examined == it->subsets, "examined " + std::to_string(r.subsets_examined) + " subsets");
  c.expect(r.orientable_subsets == 0, std::to_string(r.orientable_subsets) + " of " +
                                          std::to_string(r.subsets_examined) + " (bound+1)-edge subgraphs are orientable");
  if (r.first_orientable) {
    const auto v = is_23_orientable(*r.first_orientable, Scope::kNonisolated, opts);
    c.note("first orientable (bound+1)-edge subgraph realises lambda " + format_triple(v.witness->lambda));
  }
  c.note("bound " + std::to_string(r.bound) + ", witness lambda " + format_triple(r.witness_lambda));
}

void claim_oracle(Check& c, const SearchOptions& opts) {
  std::set<std::string> seen;
  std::size_t classes = 0;
  auto compare = [&](const Graph& g, const std::string& name) {
    for (Scope s : {Scope::kNonisolated, Scope::kAll}) {
      const bool fast = is_23_orientable(g, s, opts).decision;
      const bool slow = brute_force_orientable_oracle(g, s);
      c.expect(fast == slow, name + (s == Scope::kAll ? " (all)" : " (nonisolated)"));
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    const Graph kn = gen_complete_graph(n);
    const auto all = kn.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(all[i]);
      const Graph g(n, std::move(edges));
      if (!g.is_connected()) continue;
      if (!seen.insert(canonical_form(symmetric_digraph(g))).second) continue;
      ++classes;
      compare(g, "graph " + write_text(g));
    }
  }
  c.expect(classes == kConnectedGraphClasses, "connected classes " + std::to_string(classes));
  compare(gen_parallel_edges_graph(6), "X_6");
  compare(gen_parallel_edges_graph(7), "X_7");
  for (std::size_t n = 4; n <= 6; ++n) {
    compare(gen_wheel(n), "W_" + std::to_string(n));
    compare(gen_fan(n), "F_" + std::to_string(n));
  }
  c.note(std::to_string(classes) + " connected graph classes on <= 5 vertices plus X_6, X_7, W_4..W_6, F_4..F_6");
}

void claim_quasigroup(Check& c, const SearchOptions&) {
  const auto two = enumerate_quasigroups(2);
  c.expect(two.size() == 2, "order-2 quasigroups: " + std::to_string(two.size()));
  for (const auto& q : two) c.expect(q.is_commutative(), "non-commutative order-2 quasigroup");
  const CayleyTable z3 = zk_minus_table(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      c.expect((z3.at(a, b) == z3.at(b, a)) == (a == b), "Z_3 subtraction commutes off the diagonal");
  c.note("2 order-2 tables, both commutative; Z_3 subtraction commutes exactly on the diagonal");
}

void claim_non_closure(Check& c, const SearchOptions&) {
  const auto r = non_closure_witnesses();
  c.expect(r.four_noncordial, "(2,2,2,0) 4-tournament is cordial");
  c.expect(r.five_cordial, "no cordial 5-tournament extension");
  c.expect(r.six_noncordial, "no non-cordial 6-tournament extension");
  c.expect(r.deletions_recover, "vertex deletion does not recover the chain");
  c.note(std::to_string(r.cordial_five_extensions) + "/16 five-extensions cordial, " +
         std::to_string(r.noncordial_six_extensions) + "/32 six-extensions non-cordial");
}

struct Claim {
  ClaimInfo info;
  std::function<void(Check&, const SearchOptions&)> run;
};

const std::vector<Claim>& claims() {
  static const std::vector<Claim> table = {
      {{"c01-tournaments", "tournament", "tournament classification theorem", "all labelled n-tournaments, n=3..6"},
       claim_tournaments},
      {{"c02-five-tournament", "tournament", "every 5-tournament is cordial (pair construction)",
        "1024 labelled 5-tournaments"},
       claim_five_tournament},
      {{"c03-symmetry", "symmetry", "reversal/complement lemma", "1000 random digraphs, n<=7"},
       claim_symmetry},
      {{"c04-rim-parity", "symmetry", "even bichromatic cycle edges lemma", "C_3..C_12, all labellings"},
       claim_rim_parity},
      {{"c05-wheel", "wheel", "wheel orientability theorem", "W_4..W_30 decided, W_4..W_20 constructed"},
       claim_wheel},
      {{"c06a-cycle-out-wheel", "cyclic-out", "cycle-out-wheel is not cordial", "n=4..14"},
       claim_cycle_out_wheel},
      {{"c06b-cycle-out-fan", "cyclic-out", "cyclic-out fan is not cordial", "n=5..14"}, claim_cycle_out_fan},
      {{"c07-fan", "fan", "every fan is orientable (fan theorems)", "F_4..F_20"}, claim_fan},
      {{"c08-parallel-edges", "example", "three parallel edges example and isolated-vertex convention",
        "X_6, X_7, both scopes"},
       claim_parallel_edges},
      {{"c09a-extremal-n6", "extremal", "maximum arc count formula", "n=6, 1 subset"},
       [](Check& c, const SearchOptions& o) { claim_extremal(c, o, 6); }},
      {{"c09b-extremal-n7", "extremal", "maximum arc count formula", "n=7, 210 subsets"},
       [](Check& c, const SearchOptions& o) { claim_extremal(c, o, 7); }},
      {{"c10-oracle", "oracle", "orientability criterion (feasible split reduction)",
        "connected graphs on <=5 vertices and named families"},
       claim_oracle},
      {{"c11-quasigroup", "quasigroup", "two-element quasigroups are abelian; Z_k subtraction",
        "orders 2 and 3"},
       claim_quasigroup},
      {{"c12-non-closure", "tournament", "non-closure under vertex deletion", "4 -> 5 -> 6 tournament chain"},
       claim_non_closure},
  };
  return table;
}

}  // namespace

bool HarnessReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClaimResult& r) { return r.pass; });
}

const std::vector<ClaimInfo>& claim_table() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

HarnessReport run_harness(const std::vector<std::string>& filter, const SearchOptions& opts) {
  HarnessReport report;
  for (const Claim& claim : claims()) {
    const bool selected =
        filter.empty() || std::any_of(filter.begin(), filter.end(), [&](const std::string& f) {
          return f == claim.info.id || f == claim.info.group;
        });
    if (!selected) continue;
    ClaimResult row{claim.info, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      claim.run(check, opts);
      row.pass = check.ok();
      row.detail = check.detail();
    } catch (const std::exception& e) {
      row.pass = false;
      row.detail = std::string("exception: ") + e.what();
    }
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

void to_json(nlohmann::json& j, const HarnessReport& r) {
  j = nlohmann::json::object();
  j["pass"] = r.all_pass();
  auto rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"id", row.info.id},
                    {"group", row.info.group},
                    {"result", row.info.result},
                    {"range", row.info.range},
                    {"pass", row.pass},
                    {"detail", row.detail},
                    {"runtime_ms", row.runtime_ms}});
  }
  j["claims"] = std::move(rows);
}

}  // namespace cordial
