#include "cordial/decide.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "cordial/catalog.hpp"

namespace cordial {

namespace {

using MaskPredicate = std::function<bool(std::uint64_t)>;

constexpr std::uint64_t kNone = ~std::uint64_t{0};

/// Least friendly mask over `bits` positions satisfying pred. With `halve`,
/// only masks whose top bit is clear are scanned; callers guarantee that the
/// complement of a hit is also a hit, so the least hit is unchanged.
std::optional<std::uint64_t> least_friendly_mask(unsigned bits, bool halve, unsigned threads,
                                                 const MaskPredicate& pred) {
  const bool use_halving = halve && bits > 0;
  const std::uint64_t limit = use_halving ? (std::uint64_t{1} << (bits - 1)) : kNone;

  if (threads <= 1) {
    FriendlyMasks masks(bits);
    while (auto m = masks.next()) {
      if (*m >= limit) break;
      if (pred(*m)) return *m;
    }
    return std::nullopt;
  }

  struct Chunk {
    unsigned ones;
    std::uint64_t first, last;  // colex rank range
  };
  std::vector<Chunk> chunks;
  const unsigned lo = bits / 2;
  for (unsigned ones = lo; ones <= lo + (bits % 2); ++ones) {
    const std::uint64_t count = use_halving ? binomial(bits - 1, ones) : binomial(bits, ones);
    const std::uint64_t step = std::max<std::uint64_t>(1, count / (std::uint64_t{threads} * 8));
    for (std::uint64_t r = 0; r < count; r += step) chunks.push_back({ones, r, std::min(count, r + step)});
  }

  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::size_t> next_chunk{0};
  auto worker = [&] {
    for (std::size_t i = next_chunk++; i < chunks.size(); i = next_chunk++) {
      const Chunk& c = chunks[i];
      std::uint64_t mask = unrank_combination(c.ones, c.first);
      for (std::uint64_t r = c.first; r < c.last; ++r) {
        if (mask >= best.load(std::memory_order_relaxed)) break;
        if (pred(mask)) {
          std::uint64_t cur = best.load();
          while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
          }
          break;
        }
        if (mask == 0) break;
        mask = next_combination(mask);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  const std::uint64_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

/// Index of each vertex among `positions`, or -1.
std::vector<int> compress(std::size_t n, const std::vector<Vertex>& positions) {
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < positions.size(); ++i) index[positions[i]] = static_cast<int>(i);
  return index;
}

void require_scope_cap(std::size_t p) {
  if (p > kMaxScopeVertices) {
    throw CapExceeded("in-scope vertex count " + std::to_string(p) + " exceeds the cap of 32");
  }
}

Verdict make_verdict(std::optional<std::uint64_t> hit, unsigned bits) {
  Verdict v;
  v.decision = hit.has_value();
  v.search_space = hit ? count_friendly_le(bits, *hit) : friendly_count(bits);
  return v;
}

}  // namespace

Verdict is_23_cordial(const Digraph& d, Scope scope, const SearchOptions& opts) {
  const auto positions = scope_vertices(d, scope);
  require_scope_cap(positions.size());
  const auto bits = static_cast<unsigned>(positions.size());
  const auto index = compress(d.order(), positions);

  // Arcs always join in-scope vertices: isolated vertices have no arcs.
  std::vector<std::uint64_t> out(bits, 0);
  for (const Arc& a : d.arcs()) out[index[a.tail]] |= std::uint64_t{1} << index[a.head];
  const std::size_t m = d.size();
  const std::uint64_t full = bits == 64 ? kNone : (std::uint64_t{1} << bits) - 1;

  auto pred = [&](std::uint64_t mask) {
    std::size_t alpha = 0, beta = 0;
    for (unsigned i = 0; i < bits; ++i) {
      if ((mask >> i) & 1U)
        beta += std::popcount(out[i] & ~mask & full);
      else
        alpha += std::popcount(out[i] & mask);
    }
    return is_cordial_triple({alpha, beta, m - alpha - beta});
  };

  const auto hit = least_friendly_mask(bits, true, opts.threads, pred);
  Verdict v = make_verdict(hit, bits);
  if (hit) {
    auto f = labelling_from_mask(d.order(), positions, *hit, scope);
    const auto t = lambda(d, f);
    v.witness = Witness{std::move(f), std::nullopt, t};
  }
  return v;
}

bool cordial_feasible_triple(std::size_t m, std::size_t z) {
  if (z > m) throw std::invalid_argument("monochromatic count exceeds arc count");
  const std::size_t bichromatic = m - z;
  return is_cordial_triple({(bichromatic + 1) / 2, bichromatic / 2, z});
}

Digraph orient_by_labelling(const Graph& g, const VertexLabelling& f) {
  if (f.size() != g.order()) throw std::invalid_argument("labelling does not cover the graph");
  const std::size_t bichromatic = count_bichromatic(g, f);
  std::size_t positive = (bichromatic + 1) / 2;
  std::vector<Arc> arcs;
  arcs.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (f[e.u] == f[e.v]) {
      arcs.push_back({e.u, e.v});
      continue;
    }
    const Vertex zero = f[e.u] == 0 ? e.u : e.v;
    const Vertex one = f[e.u] == 0 ? e.v : e.u;
    if (positive > 0) {
      arcs.push_back({zero, one});
      --positive;
    } else {
      arcs.push_back({one, zero});
    }
  }
  return Digraph(g.order(), std::move(arcs));
}

Verdict is_23_orientable(const Graph& g, Scope scope, const SearchOptions& opts) {
  const auto positions = scope_vertices(g, scope);
  require_scope_cap(positions.size());
  const auto bits = static_cast<unsigned>(positions.size());
  const auto index = compress(g.order(), positions);

  std::vector<std::uint64_t> adj(bits, 0);
  for (const Edge& e : g.edges()) {
    adj[index[e.u]] |= std::uint64_t{1} << index[e.v];
    adj[index[e.v]] |= std::uint64_t{1} << index[e.u];
  }
  const std::size_t m = g.size();

  auto pred = [&](std::uint64_t mask) {
    std::size_t bichromatic = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      bichromatic += std::popcount(adj[std::countr_zero(rest)] & ~mask);
    }
    return cordial_feasible_triple(m, m - bichromatic);
  };

  const auto hit = least_friendly_mask(bits, true, opts.threads, pred);
  Verdict v = make_verdict(hit, bits);
  if (hit) {
    auto f = labelling_from_mask(g.order(), positions, *hit, scope);
    Digraph o = orient_by_labelling(g, f);
    const auto t = lambda(o, f);
    v.witness = Witness{std::move(f), std::move(o), t};
  }
  return v;
}

bool brute_force_orientable_oracle(const Graph& g, Scope scope) {
  const std::size_t m = g.size();
  if (m > kMaxOracleEdges) {
    throw CapExceeded("oracle supports at most 16 edges, got " + std::to_string(m));
  }
  const auto edges = g.edges();
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << m); ++o) {
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = edges[i];
      arcs.push_back(((o >> i) & 1U) ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    const Digraph d(g.order(), std::move(arcs));
    FriendlyLabellingStream labellings(d, scope);
    while (auto f = labellings.next()) {
      if (is_friendly(*f, d) && is_cordial_triple(lambda(d, *f))) return true;
    }
  }
  return false;
}

CensusReport partial_tournament_census(std::size_t n, std::uint64_t first, std::uint64_t last) {
  const std::uint64_t total = tournament_count(n);
  last = std::min(last, total);
  std::map<std::string, CensusRow> classes;
  for (std::uint64_t i = first; i < last; ++i) {
    const Tournament t = tournament_from_index(n, i);
    auto key = canonical_form(t.digraph());
    auto [it, inserted] = classes.try_emplace(key);
    CensusRow& row = it->second;
    if (inserted) {
      row.canonical = std::move(key);
      row.out_degrees = out_degree_sequence(t.digraph());
      row.representative = i;
    }
    ++row.class_size;
  }
  CensusReport r;
  r.n = n;
  r.total = last > first ? last - first : 0;
  for (auto& [key, row] : classes) r.rows.push_back(std::move(row));
  return r;
}

CensusReport merge_census(const CensusReport& a, const CensusReport& b) {
  if (a.n != b.n) throw std::invalid_argument("cannot merge censuses of different orders");
  std::map<std::string, CensusRow> classes;
  for (const auto* part : {&a, &b}) {
    for (const CensusRow& row : part->rows) {
      auto [it, inserted] = classes.try_emplace(row.canonical, row);
      if (!inserted) {
        it->second.class_size += row.class_size;
        it->second.representative = std::min(it->second.representative, row.representative);
      }
    }
  }
  CensusReport r;
  r.n = a.n;
  r.total = a.total + b.total;
  for (auto& [key, row] : classes) r.rows.push_back(std::move(row));
  return r;
}

CensusReport tournament_census(std::size_t n, const SearchOptions& opts) {
  if (n < 3 || n > 6) throw std::out_of_range("census supports 3 <= n <= 6, got " + std::to_string(n));
  const std::uint64_t total = tournament_count(n);
  const unsigned workers = std::max(1U, opts.threads);
  const std::uint64_t step = (total + workers - 1) / workers;

  std::vector<CensusReport> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { parts[w] = partial_tournament_census(n, w * step, (w + 1) * step); });
  }
  for (auto& t : pool) t.join();

  CensusReport report = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) report = merge_census(report, parts[i]);

  for (CensusRow& row : report.rows) {
    const Tournament rep = tournament_from_index(n, row.representative);
    row.cordial = is_23_cordial(rep.digraph(), Scope::kNonisolated).decision;
    (row.cordial ? report.cordial : report.noncordial) += row.class_size;
  }
  return report;
}

std::uint64_t monochromatic_edges_complete(std::size_t n) {
  return binomial(static_cast<unsigned>((n + 1) / 2), 2) + binomial(static_cast<unsigned>(n / 2), 2);
}

std::uint64_t max_arcs(std::size_t n) {
  if (n < 6) throw std::invalid_argument("max_arcs requires n >= 6, got " + std::to_string(n));
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t bichromatic = pairs - monochromatic_edges_complete(n);
  return bichromatic + (bichromatic + 1) / 2;
}

ExtremalReport verify_extremal_bound(std::size_t n, const SearchOptions& opts) {
  if (n < 6 || n > 7) {
    throw std::out_of_range("extremal verification supports 6 <= n <= 7, got " + std::to_string(n));
  }
  ExtremalReport r;
  r.n = n;
  r.bound = max_arcs(n);
  r.monochromatic = monochromatic_edges_complete(n);

  // Witness: least friendly labelling of K_n, all bichromatic edges, and
  // just enough monochromatic edges (lexicographic order) to reach the bound.
  const Graph kn = gen_complete_graph(n);
  FriendlyLabellingStream labellings(kn, Scope::kNonisolated);
  VertexLabelling f = *labellings.next();
  const std::size_t bichromatic = count_bichromatic(kn, f);
  std::size_t keep_mono = r.bound - bichromatic;
  std::vector<Edge> kept;
  for (const Edge& e : kn.edges()) {
    if (f[e.u] != f[e.v]) {
      kept.push_back(e);
    } else if (keep_mono > 0) {
      kept.push_back(e);
      --keep_mono;
    }
  }
  const Graph base(n, std::move(kept));
  r.witness = orient_by_labelling(base, f);
  r.witness_labelling = f;
  r.witness_lambda = lambda(r.witness, f);
  r.witness_cordial = r.witness.size() == r.bound && is_friendly(f, r.witness) &&
                      is_cordial_triple(r.witness_lambda) &&
                      is_23_cordial(r.witness, Scope::kNonisolated, opts).decision;

  const auto all_edges = kn.edges();
  const auto m = static_cast<unsigned>(all_edges.size());
  const auto choose = static_cast<unsigned>(r.bound + 1);
  if (choose <= m) {
    const std::uint64_t end = std::uint64_t{1} << m;
    for (std::uint64_t mask = (std::uint64_t{1} << choose) - 1; mask < end; mask = next_combination(mask)) {
      std::vector<Edge> edges;
      for (unsigned i = 0; i < m; ++i)
        if ((mask >> i) & 1U) edges.push_back(all_edges[i]);
      Graph g(n, std::move(edges));
      ++r.subsets_examined;
      if (is_23_orientable(g, Scope::kNonisolated, opts).decision) {
        if (r.orientable_subsets++ == 0) r.first_orientable = std::move(g);
      }
    }
  }
  r.confirmed = r.witness_cordial && r.orientable_subsets == 0;
  return r;
}

NonClosureReport non_closure_witnesses() {
  NonClosureReport r;
  r.four = catalog::tournament_t43();
  r.four_noncordial = !is_23_cordial(r.four).decision;

  // Extension of a tournament on k vertices by vertex k; bit i of `pattern`
  // orients the arc between i and k as k -> i.
  auto extend = [](const Digraph& d, std::uint64_t pattern) {
    std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
    const auto k = static_cast<Vertex>(d.order());
    for (Vertex i = 0; i < k; ++i) arcs.push_back(((pattern >> i) & 1U) ? Arc{k, i} : Arc{i, k});
    return Digraph(d.order() + 1, std::move(arcs));
  };

  std::optional<Digraph> five;
  for (std::uint64_t p = 0; p < 16; ++p) {
    Digraph cand = extend(r.four, p);
    if (is_23_cordial(cand).decision) {
      ++r.cordial_five_extensions;
      if (!five) five = std::move(cand);
    }
  }
  if (!five) return r;
  r.five = *five;
  r.five_cordial = true;

  std::optional<Digraph> six;
  for (std::uint64_t p = 0; p < 32; ++p) {
    Digraph cand = extend(r.five, p);
    if (!is_23_cordial(cand).decision) {
      ++r.noncordial_six_extensions;
      if (!six) six = std::move(cand);
    }
  }
  if (!six) return r;
  r.six = *six;
  r.six_noncordial = true;
  r.deletions_recover = delete_vertex(r.six, 5) == r.five && delete_vertex(r.five, 4) == r.four;
  return r;
}

}  // namespace cordial
