#include "cordial/labelling.hpp"

#include <bit>
#include <stdexcept>

namespace cordial {

namespace {

template <typename Host>
std::vector<Vertex> scope_vertices_impl(const Host& host, Scope scope) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < host.order(); ++v) {
    if (scope == Scope::kAll || !host.is_isolated(v)) out.push_back(v);
  }
  return out;
}

template <typename Host>
bool is_friendly_impl(const VertexLabelling& f, const Host& host) {
  if (f.size() != host.order()) {
    throw std::invalid_argument("labelling has " + std::to_string(f.size()) +
                                " labels for a host of order " + std::to_string(host.order()));
  }
  std::size_t ones = 0, zeros = 0;
  for (Vertex v : scope_vertices_impl(host, f.scope)) {
    if (f[v] > 1) throw std::invalid_argument("labels must be 0 or 1");
    (f[v] ? ones : zeros)++;
  }
  return (ones > zeros ? ones - zeros : zeros - ones) <= 1;
}

void require_cover(const VertexLabelling& f, std::size_t n) {
  if (f.size() != n) throw std::invalid_argument("labelling does not cover the digraph");
}

void tally(LambdaTriple& t, int label) {
  if (label > 0)
    ++t.alpha;
  else if (label < 0)
    ++t.beta;
  else
    ++t.gamma;
}

}  // namespace

std::vector<Vertex> scope_vertices(const Digraph& d, Scope scope) {
  return scope_vertices_impl(d, scope);
}
std::vector<Vertex> scope_vertices(const Graph& g, Scope scope) {
  return scope_vertices_impl(g, scope);
}

bool is_friendly(const VertexLabelling& f, const Digraph& host) { return is_friendly_impl(f, host); }
bool is_friendly(const VertexLabelling& f, const Graph& host) { return is_friendly_impl(f, host); }

std::vector<LabelledArc> induce_arc_labelling(const Digraph& d, const VertexLabelling& f) {
  require_cover(f, d.order());
  std::vector<LabelledArc> out;
  out.reserve(d.size());
  for (const Arc& a : d.arcs()) {
    out.push_back({a, static_cast<int>(f[a.head]) - static_cast<int>(f[a.tail])});
  }
  return out;
}

LambdaTriple lambda(const Digraph& d, const VertexLabelling& f) {
  require_cover(f, d.order());
  LambdaTriple t;
  for (const Arc& a : d.arcs()) tally(t, static_cast<int>(f[a.head]) - static_cast<int>(f[a.tail]));
  return t;
}

LambdaSplit lambda_split(const Digraph& d, Vertex center, const VertexLabelling& f) {
  require_cover(f, d.order());
  if (center >= d.order()) throw std::invalid_argument("centre vertex out of range");
  LambdaSplit s;
  for (const Arc& a : d.arcs()) {
    const int label = static_cast<int>(f[a.head]) - static_cast<int>(f[a.tail]);
    tally(a.tail == center || a.head == center ? s.spoke : s.rim, label);
  }
  return s;
}

VertexLabelling complement_labelling(const VertexLabelling& f) {
  VertexLabelling out = f;
  for (auto& b : out.labels) b = b ? 0 : 1;
  return out;
}

std::size_t count_bichromatic(const Graph& g, const VertexLabelling& f) {
  if (f.size() != g.order()) throw std::invalid_argument("labelling does not cover the graph");
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += f[e.u] != f[e.v] ? 1 : 0;
  return count;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t friendly_count(unsigned bits) {
  const unsigned lo = bits / 2;
  return bits % 2 == 0 ? binomial(bits, lo) : binomial(bits, lo) + binomial(bits, lo + 1);
}

std::uint64_t unrank_combination(unsigned k, std::uint64_t rank) {
  std::uint64_t mask = 0;
  for (unsigned i = k; i >= 1; --i) {
    unsigned c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    mask |= std::uint64_t{1} << c;
    rank -= binomial(c, i);
  }
  return mask;
}

std::uint64_t count_combinations_le(unsigned bits, unsigned k, std::uint64_t w) {
  std::uint64_t count = 0;
  int need = static_cast<int>(k);
  for (int b = static_cast<int>(bits) - 1; b >= 0; --b) {
    if (!((w >> b) & 1U)) continue;
    count += binomial(static_cast<unsigned>(b), static_cast<unsigned>(need));
    if (--need < 0) return count;
  }
  return need == 0 ? count + 1 : count;
}

std::uint64_t count_friendly_le(unsigned bits, std::uint64_t w) {
  const unsigned lo = bits / 2;
  std::uint64_t c = count_combinations_le(bits, lo, w);
  if (bits % 2 == 1) c += count_combinations_le(bits, lo + 1, w);
  return c;
}

FriendlyMasks::FriendlyMasks(unsigned bits)
    : end_(bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits)),
      low_{(std::uint64_t{1} << (bits / 2)) - 1, false} {
  if (bits > kMaxScopeVertices) {
    throw CapExceeded("friendly enumeration supports at most 32 vertices, got " +
                      std::to_string(bits));
  }
  if (bits % 2 == 1) high_ = Cursor{(std::uint64_t{1} << (bits / 2 + 1)) - 1, false};
}

void FriendlyMasks::advance(Cursor& c) const {
  if (c.value == 0) {
    c.done = true;
    return;
  }
  c.value = next_combination(c.value);
  if (c.value >= end_) c.done = true;
}

std::optional<std::uint64_t> FriendlyMasks::next() {
  Cursor* pick = low_.done ? nullptr : &low_;
  if (high_ && !high_->done && (pick == nullptr || high_->value < pick->value)) pick = &*high_;
  if (pick == nullptr) return std::nullopt;
  const std::uint64_t v = pick->value;
  advance(*pick);
  return v;
}

VertexLabelling labelling_from_mask(std::size_t n, std::span<const Vertex> positions,
                                    std::uint64_t mask, Scope scope) {
  VertexLabelling f{std::vector<std::uint8_t>(n, 0), scope};
  for (std::size_t i = 0; i < positions.size(); ++i) f.labels[positions[i]] = (mask >> i) & 1U;
  return f;
}

FriendlyLabellingStream::FriendlyLabellingStream(std::size_t n, std::vector<Vertex> positions,
                                                 Scope scope)
    : n_(n),
      positions_(std::move(positions)),
      scope_(scope),
      masks_(static_cast<unsigned>(positions_.size())) {}

FriendlyLabellingStream::FriendlyLabellingStream(const Digraph& host, Scope scope)
    : FriendlyLabellingStream(host.order(), scope_vertices(host, scope), scope) {}

FriendlyLabellingStream::FriendlyLabellingStream(const Graph& host, Scope scope)
    : FriendlyLabellingStream(host.order(), scope_vertices(host, scope), scope) {}

std::optional<VertexLabelling> FriendlyLabellingStream::next() {
  auto mask = masks_.next();
  if (!mask) return std::nullopt;
  return labelling_from_mask(n_, positions_, *mask, scope_);
}

bool CayleyTable::is_latin() const {
  if (table.size() != order * order) return false;
  for (std::size_t i = 0; i < order; ++i) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::size_t j = 0; j < order; ++j) {
      const auto r = at(i, j), c = at(j, i);
      if (r >= order || c >= order || row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  return true;
}

bool CayleyTable::is_commutative() const {
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = a + 1; b < order; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

std::vector<CayleyTable> enumerate_quasigroups(std::size_t order) {
  if (order > kMaxQuasigroupOrder) {
    throw CapExceeded("quasigroup enumeration supports order <= 4, got " + std::to_string(order));
  }
  std::vector<CayleyTable> out;
  if (order == 0) return out;
  CayleyTable t{order, std::vector<std::uint8_t>(order * order, 0)};
  // Cell-by-cell backtracking with row/column usage masks.
  std::vector<unsigned> row_used(order, 0), col_used(order, 0);
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == order * order) {
      out.push_back(t);
      return;
    }
    const std::size_t r = cell / order, c = cell % order;
    for (unsigned s = 0; s < order; ++s) {
      const unsigned bit = 1U << s;
      if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
      row_used[r] |= bit;
      col_used[c] |= bit;
      t.table[cell] = static_cast<std::uint8_t>(s);
      self(self, cell + 1);
      row_used[r] &= ~bit;
      col_used[c] &= ~bit;
    }
  };
  fill(fill, 0);
  return out;
}

CayleyTable zk_minus_table(std::size_t k) {
  if (k < 2) throw std::invalid_argument("zk_minus_table requires k >= 2");
  CayleyTable t{k, std::vector<std::uint8_t>(k * k, 0)};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t.table[a * k + b] = static_cast<std::uint8_t>((b + k - a) % k);
  return t;
}

}  // namespace cordial
