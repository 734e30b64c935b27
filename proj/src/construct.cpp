#include "cordial/construct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cordial {

namespace {

std::string describe(const LambdaTriple& t) {
  std::ostringstream os;
  os << "(" << t.alpha << "," << t.beta << "," << t.gamma << ")";
  return os.str();
}

ConstructionResult finish(Digraph d, VertexLabelling f, std::string trace) {
  ConstructionResult r;
  r.lambda = lambda(d, f);
  r.validated = is_friendly(f, d) && is_cordial_triple(r.lambda);
  r.digraph = std::move(d);
  r.labelling = std::move(f);
  r.trace = std::move(trace);
  if (!r.validated) {
    throw ValidationError("construction failed to validate: lambda " + describe(r.lambda) + "; " + r.trace);
  }
  return r;
}

int arc_label(const VertexLabelling& f, const Arc& a) {
  return static_cast<int>(f[a.head]) - static_cast<int>(f[a.tail]);
}

/// Fan with centre 0 whose Hamiltonian cycle 0 -> 1 -> ... -> n-1 -> 0 is
/// directed, the alternating-prefix labelling, and chords to 1-labelled
/// vertices split l outward / l inward. Covers n = 2k, k = 2l + 1,
/// 2n - 3 = 3z + 2.
ConstructionResult excluded_case_fan(std::size_t n) {
  const std::size_t k = n / 2;
  const std::size_t l = (k - 1) / 2;
  const std::size_t z = (2 * n - 5) / 3;
  const std::size_t alternating = z - l + 1;

  VertexLabelling f{std::vector<std::uint8_t>(n, 0), Scope::kNonisolated};
  for (std::size_t i = 0; i < alternating; ++i) {
    f.labels[2 * i] = 0;
    f.labels[2 * i + 1] = 1;
  }
  for (std::size_t i = 0; i < k - alternating; ++i) {
    f.labels[2 * alternating + i] = 1;
    f.labels[k + alternating + i] = 0;
  }

  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  arcs.push_back({static_cast<Vertex>(n - 1), 0});
  std::size_t outward = l;
  for (Vertex v = 2; v + 1 < n; ++v) {
    if (f[v] == 1 && outward == 0) {
      arcs.push_back({v, 0});
    } else {
      arcs.push_back({0, v});
      if (f[v] == 1) --outward;
    }
  }
  std::ostringstream trace;
  trace << "fan n=" << n << " excluded wheel case: k=" << k << " l=" << l << " z=" << z
        << " alternating prefix pairs=" << alternating;
  return finish(Digraph(n, std::move(arcs)), std::move(f), trace.str());
}

}  // namespace

std::string_view to_string(WheelCase c) {
  switch (c) {
    case WheelCase::k1_1: return "1.1";
    case WheelCase::k1_2: return "1.2";
    case WheelCase::k2_1: return "2.1";
    case WheelCase::k2_2: return "2.2";
    case WheelCase::k2_3: return "2.3";
    case WheelCase::k3_1: return "3.1";
    case WheelCase::k3_2: return "3.2";
    case WheelCase::k3_3: return "3.3";
    case WheelCase::kExcluded: return "excluded";
  }
  return "?";
}

WheelCase wheel_case(std::size_t n) {
  if (n < 4) throw std::invalid_argument("wheel_case requires n >= 4");
  const std::size_t residue = (2 * n - 2) % 3;
  const bool even = n % 2 == 0;
  const bool k_even = even && (n / 2) % 2 == 0;
  switch (residue) {
    case 0: return even ? (k_even ? WheelCase::k1_1 : WheelCase::kExcluded) : WheelCase::k1_2;
    case 1: return even ? (k_even ? WheelCase::k2_1 : WheelCase::k2_2) : WheelCase::k2_3;
    default: return even ? (k_even ? WheelCase::k3_1 : WheelCase::k3_2) : WheelCase::k3_3;
  }
}

ConstructionResult label_5_tournament(const Tournament& t) {
  const Digraph& d = t.digraph();
  if (d.order() != 5) throw std::invalid_argument("label_5_tournament requires 5 vertices");
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex w = u + 1; w < 5; ++w) {
      if (d.out_degree(u) + d.out_degree(w) != 4) continue;
      VertexLabelling f{{0, 0, 0, 0, 0}, Scope::kNonisolated};
      f.labels[u] = f.labels[w] = 1;
      return finish(d, std::move(f),
                    "pair {" + std::to_string(u) + "," + std::to_string(w) + "} with out-degree sum 4");
    }
  }
  throw ValidationError("5-tournament has no vertex pair with out-degree sum 4");
}

std::optional<ConstructionResult> orient_wheel(std::size_t n) {
  const WheelCase tag = wheel_case(n);
  if (tag == WheelCase::kExcluded) return std::nullopt;

  const std::size_t rim = n - 1;
  const std::size_t arcs_total = 2 * n - 2;
  const std::size_t z = arcs_total / 3;
  const std::size_t residue = arcs_total % 3;

  // Centre is labelled 0; the rim carries `ones` 1-labels, chosen even for odd n.
  std::size_t ones = n / 2;
  if (n % 2 == 1 && ones % 2 == 1) ++ones;
  const std::size_t outward = ones / 2;
  // Runs of 1s around the rim; each contributes one +1 and one -1 rim arc.
  std::size_t runs = z - outward;
  if (residue == 2 && ones % 2 == 0) ++runs;

  std::ostringstream trace;
  trace << "wheel n=" << n << " case " << to_string(tag) << ": z=" << z << " rim ones=" << ones
        << " outward spokes=" << outward << " bichromatic rim edges=" << 2 * runs;
  if (runs < 1 || runs > ones || runs > rim - ones) {
    throw ValidationError("rim cannot host the required bichromatic edges; " + trace.str());
  }

  const auto centre = static_cast<Vertex>(rim);
  VertexLabelling f{std::vector<std::uint8_t>(n, 0), Scope::kNonisolated};
  std::size_t pos = 0;
  for (std::size_t i = 0; i + 1 < runs; ++i) {
    f.labels[pos++] = 1;
    f.labels[pos++] = 0;
  }
  for (std::size_t i = 0; i < ones - (runs - 1); ++i) f.labels[pos++] = 1;

  std::vector<Arc> arcs;
  for (Vertex v = 0; v < rim; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % rim)});
  std::size_t out_left = outward;
  for (Vertex v = 0; v < rim; ++v) {
    if (f[v] == 1 && out_left == 0) {
      arcs.push_back({v, centre});
    } else {
      arcs.push_back({centre, v});
      if (f[v] == 1) --out_left;
    }
  }
  return finish(Digraph(n, std::move(arcs)), std::move(f), trace.str());
}

ConstructionResult orient_fan(std::size_t n) {
  if (n < 4) throw std::invalid_argument("orient_fan requires n >= 4");
  auto wheel = orient_wheel(n);
  if (!wheel) return excluded_case_fan(n);

  const Digraph& w = wheel->digraph;
  const VertexLabelling& f = wheel->labelling;
  const auto centre = static_cast<Vertex>(n - 1);
  const std::size_t rim = n - 1;
  const LambdaTriple t = wheel->lambda;
  const std::size_t top = std::max({t.alpha, t.beta, t.gamma});
  auto count_of = [&](int label) { return label > 0 ? t.alpha : label < 0 ? t.beta : t.gamma; };

  // Arcs are sorted, so the first match is the lexicographically first rim arc.
  std::optional<Arc> cut;
  for (const Arc& a : w.arcs()) {
    if (a.tail == centre || a.head == centre) continue;
    if (count_of(arc_label(f, a)) == top) {
      cut = a;
      break;
    }
  }
  if (!cut) throw ValidationError("no rim arc carries a most frequent label; " + wheel->trace);

  // Rim arcs run v -> v+1 (mod rim); the path starts just after the cut.
  const Vertex start = (cut->tail + 1) % rim == cut->head ? cut->head : cut->tail;
  auto remap = [&](Vertex v) -> Vertex {
    if (v == centre) return 0;
    return static_cast<Vertex>((v + rim - start) % rim + 1);
  };
  std::vector<Arc> arcs;
  for (const Arc& a : w.arcs()) {
    if (a == *cut) continue;
    arcs.push_back({remap(a.tail), remap(a.head)});
  }
  VertexLabelling g{std::vector<std::uint8_t>(n, 0), Scope::kNonisolated};
  for (Vertex v = 0; v < n; ++v) g.labels[remap(v)] = f[v];
  return finish(Digraph(n, std::move(arcs)), std::move(g),
                wheel->trace + "; removed rim arc " + std::to_string(cut->tail) + "->" +
                    std::to_string(cut->head));
}

namespace {

CyclicOrientationReport check_cyclic(const Digraph& d, Vertex centre, bool exact_rim_balance) {
  CyclicOrientationReport r;
  r.n = d.order();
  const std::size_t k = d.order() / 2;
  FriendlyLabellingStream labellings(d, Scope::kNonisolated);
  while (auto f = labellings.next()) {
    ++r.labellings;
    const LambdaSplit s = lambda_split(d, centre, *f);
    const LambdaTriple whole = s.whole();
    if (!r.counterexample && is_cordial_triple(whole)) r.counterexample = *f;
    const std::size_t gap = s.rim.alpha > s.rim.beta ? s.rim.alpha - s.rim.beta : s.rim.beta - s.rim.alpha;
    if (exact_rim_balance ? gap != 0 : gap > 1) r.rim_balanced = false;
    if ((*f)[centre] == 0 && (s.spoke.beta != 0 || (s.spoke.alpha != k && s.spoke.alpha != k + 1))) {
      r.spoke_accounting_ok = false;
    }
  }
  return r;
}

void require_range(std::size_t n, std::size_t lo, const char* what) {
  if (n < lo || n > 16) {
    throw std::out_of_range(std::string(what) + " supports " + std::to_string(lo) +
                            " <= n <= 16, got " + std::to_string(n));
  }
}

}  // namespace

CyclicOrientationReport check_cycle_out_wheel_not_cordial(std::size_t n) {
  require_range(n, 4, "cycle-out-wheel check");
  return check_cyclic(gen_cycle_out_wheel(n), static_cast<Vertex>(n - 1), true);
}

CyclicOrientationReport check_cycle_out_fan_not_cordial(std::size_t n) {
  require_range(n, 4, "cycle-out-fan check");
  auto r = check_cyclic(gen_cycle_out_fan(n), 0, false);
  r.in_scope = n >= 5;
  return r;
}

}  // namespace cordial
