#include "cordial/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace cordial {

namespace {

void require_min_order(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(min) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.tail >= n_ || a.head >= n_) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.tail == a.head) {
      throw std::invalid_argument("loops are not allowed");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

std::size_t Digraph::out_degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.tail == v; }));
}

std::size_t Digraph::in_degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.head == v; }));
}

bool Digraph::is_isolated(Vertex v) const {
  return std::none_of(arcs_.begin(), arcs_.end(),
                      [v](const Arc& a) { return a.tail == v || a.head == v; });
}

bool Digraph::has_digon() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [this](const Arc& a) { return a.tail < a.head && has_arc(a.head, a.tail); });
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loops are not allowed");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_;
  for (const Edge& e : edges_) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Tournament::Tournament(Digraph d) : d_(std::move(d)) {
  if (!is_tournament(d_)) throw std::invalid_argument("digraph is not a tournament");
}

bool Tournament::is_tournament(const Digraph& d) {
  const std::size_t n = d.order();
  if (d.size() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    }
  }
  return true;
}

Digraph reverse_digraph(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph(d.order(), std::move(arcs));
}

OutDegreeSequence out_degree_sequence(const Digraph& d) {
  OutDegreeSequence seq(d.order(), 0);
  for (const Arc& a : d.arcs()) ++seq[a.tail];
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.size());
  for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head});
  return Graph(d.order(), std::move(edges));
}

Digraph symmetric_digraph(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.size());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

Digraph delete_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order()) throw std::invalid_argument("vertex out of range");
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (a.tail == v || a.head == v) continue;
    arcs.push_back({a.tail > v ? a.tail - 1 : a.tail, a.head > v ? a.head - 1 : a.head});
  }
  return Digraph(d.order() - 1, std::move(arcs));
}

Graph gen_complete_graph(std::size_t n) {
  require_min_order(n, 1, "complete graph");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
  require_min_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph gen_wheel(std::size_t n) {
  require_min_order(n, 4, "wheel");
  const auto rim = static_cast<Vertex>(n - 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < rim; ++i) {
    edges.push_back({i, (i + 1) % rim});
    edges.push_back({i, rim});
  }
  return Graph(n, std::move(edges));
}

Graph gen_fan(std::size_t n) {
  require_min_order(n, 4, "fan");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) {
    edges.push_back({0, i});
    if (i + 1 < n) edges.push_back({i, i + 1});
  }
  return Graph(n, std::move(edges));
}

Graph gen_parallel_edges_graph(std::size_t n) {
  require_min_order(n, 6, "parallel-edges graph");
  return Graph(n, {{0, 1}, {2, 3}, {4, 5}});
}

Digraph gen_cycle_out_wheel(std::size_t n) {
  require_min_order(n, 4, "cycle-out-wheel");
  const auto rim = static_cast<Vertex>(n - 1);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < rim; ++i) {
    arcs.push_back({i, (i + 1) % rim});
    arcs.push_back({rim, i});
  }
  return Digraph(n, std::move(arcs));
}

Digraph gen_cycle_out_fan(std::size_t n) {
  require_min_order(n, 4, "cycle-out-fan");
  std::vector<Arc> arcs;
  for (Vertex i = 1; i < n; ++i) {
    arcs.push_back({0, i});
    if (i + 1 < n) arcs.push_back({i, i + 1});
  }
  return Digraph(n, std::move(arcs));
}

std::uint64_t tournament_count(std::size_t n) {
  if (n < 1 || n > kMaxTournamentOrder) {
    throw CapExceeded("tournament enumeration supports 1 <= n <= 8, got " + std::to_string(n));
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Tournament tournament_from_index(std::size_t n, std::uint64_t index) {
  if (index >= tournament_count(n)) throw std::invalid_argument("tournament index out of range");
  std::vector<Arc> arcs;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((index >> bit) & 1U)
        arcs.push_back({v, u});
      else
        arcs.push_back({u, v});
    }
  }
  return Tournament(Digraph(n, std::move(arcs)));
}

TournamentStream::TournamentStream(std::size_t n) : n_(n), total_(tournament_count(n)) {}

std::optional<Tournament> TournamentStream::next() {
  if (index_ >= total_) return std::nullopt;
  return tournament_from_index(n_, index_++);
}

std::string canonical_form(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kMaxCanonicalOrder) {
    throw CapExceeded("canonical_form supports n <= 9, got " + std::to_string(n));
  }
  // Rows as integers with column 0 in the most significant position, so that
  // comparing row values in order is comparing the row-major bit string.
  std::array<std::array<bool, kMaxCanonicalOrder>, kMaxCanonicalOrder> adj{};
  for (const Arc& a : d.arcs()) adj[a.tail][a.head] = true;

  std::vector<std::size_t> perm(n);  // perm[new] = old
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint32_t> best(n, ~std::uint32_t{0});
  std::vector<std::uint32_t> rows(n);

  do {
    bool less = false;
    bool abandoned = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t row = 0;
      for (std::size_t j = 0; j < n; ++j) row = (row << 1) | (adj[perm[i]][perm[j]] ? 1U : 0U);
      rows[i] = row;
      if (!less) {
        if (row > best[i]) {
          abandoned = true;
          break;
        }
        if (row < best[i]) less = true;
      }
    }
    if (!abandoned && less) best = rows;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::string out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(((best[i] >> (n - 1 - j)) & 1U) ? '1' : '0');
  return out;
}

}  // namespace cordial
