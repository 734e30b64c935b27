#include "cordial/io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace cordial {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

/// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line out{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) out.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

std::pair<std::size_t, std::size_t> parse_header(const std::vector<Line>& lines, char& kind) {
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& h = lines.front();
  if (h.tokens.size() != 3 || (h.tokens[0] != "D" && h.tokens[0] != "G")) {
    throw ParseError(h.number, "header must be 'D n m' or 'G n m'");
  }
  kind = h.tokens[0][0];
  return {parse_count(h.tokens[1], h.number, "n"), parse_count(h.tokens[2], h.number, "m")};
}

const char* sign(int label) { return label > 0 ? "+1" : label < 0 ? "-1" : "0"; }

}  // namespace

GraphInput parse_graph_text(std::string_view text) {
  const auto lines = tokenize(text);
  char kind = 0;
  const auto [n, m] = parse_header(lines, kind);
  if (lines.size() - 1 != m) {
    const std::size_t at = lines.size() - 1 < m ? lines.back().number : lines[m + 1].number;
    throw ParseError(at, "header announces " + std::to_string(m) + " lines, found " +
                             std::to_string(lines.size() - 1));
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'u v'");
    const auto u = parse_count(l.tokens[0], l.number, "u");
    const auto v = parse_count(l.tokens[1], l.number, "v");
    if (u >= n || v >= n) throw ParseError(l.number, "vertex out of range 0.." + std::to_string(n) + "-1");
    if (u == v) throw ParseError(l.number, "loops are not allowed");
    std::pair<Vertex, Vertex> key{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (kind == 'G' && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) throw ParseError(l.number, "duplicate arc or edge");
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (kind == 'D') return Digraph(n, std::move(arcs));
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const Arc& a : arcs) edges.push_back({a.tail, a.head});
  return Graph(n, std::move(edges));
}

std::string write_text(const Digraph& d) {
  std::ostringstream os;
  os << "D " << d.order() << " " << d.size() << "\n";
  for (const Arc& a : d.arcs()) os << a.tail << " " << a.head << "\n";
  return os.str();
}

std::string write_text(const Graph& g) {
  std::ostringstream os;
  os << "G " << g.order() << " " << g.size() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

VertexLabelling parse_labelling_text(std::string_view text, Scope scope) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != "L") throw ParseError(h.number, "header must be 'L n'");
  const auto n = parse_count(h.tokens[1], h.number, "n");
  if (lines.size() - 1 != n) {
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " label lines");
  }
  VertexLabelling f{std::vector<std::uint8_t>(n, 0), scope};
  std::vector<bool> seen(n, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'v b'");
    const auto v = parse_count(l.tokens[0], l.number, "v");
    const auto b = parse_count(l.tokens[1], l.number, "b");
    if (v >= n) throw ParseError(l.number, "vertex out of range");
    if (b > 1) throw ParseError(l.number, "label must be 0 or 1");
    if (seen[v]) throw ParseError(l.number, "vertex labelled twice");
    seen[v] = true;
    f.labels[v] = static_cast<std::uint8_t>(b);
  }
  return f;
}

std::string write_text(const VertexLabelling& f) {
  std::ostringstream os;
  os << "L " << f.size() << "\n";
  for (std::size_t v = 0; v < f.size(); ++v) os << v << " " << int{f.labels[v]} << "\n";
  return os.str();
}

std::string to_dot(const Digraph& d, const VertexLabelling* f, std::string_view name) {
  if (f != nullptr && f->size() != d.order()) throw std::invalid_argument("labelling does not cover the digraph");
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < d.order(); ++v) {
    os << "  " << v;
    if (f != nullptr) os << " [label=\"" << v << ": " << int{f->labels[v]} << "\"]";
    os << ";\n";
  }
  for (const Arc& a : d.arcs()) {
    os << "  " << a.tail << " -> " << a.head;
    if (f != nullptr) {
      os << " [label=\"" << sign(static_cast<int>((*f)[a.head]) - static_cast<int>((*f)[a.tail])) << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

void to_json(nlohmann::json& j, const LambdaTriple& t) {
  j = nlohmann::json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
}

namespace {

nlohmann::json arcs_json(const Digraph& d) {
  auto out = nlohmann::json::array();
  for (const Arc& a : d.arcs()) out.push_back({a.tail, a.head});
  return out;
}

nlohmann::json witness_json(const VertexLabelling& f, const Digraph* orientation, const LambdaTriple& t) {
  nlohmann::json w;
  w["labelling"] = f.labels;
  w["orientation"] = orientation != nullptr ? arcs_json(*orientation) : nlohmann::json(nullptr);
  w["lambda"] = t;
  return w;
}

}  // namespace

void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json::object();
  j["decision"] = v.decision;
  if (v.witness) {
    const auto* o = v.witness->orientation ? &*v.witness->orientation : nullptr;
    j["witness"] = witness_json(v.witness->labelling, o, v.witness->lambda);
  } else {
    j["witness"] = nullptr;
  }
  j["search_space"] = v.search_space;
}

void to_json(nlohmann::json& j, const CensusRow& row) {
  j = nlohmann::json{{"canonical", row.canonical},
                     {"out_degrees", row.out_degrees},
                     {"class_size", row.class_size},
                     {"representative", row.representative},
                     {"cordial", row.cordial}};
}

void to_json(nlohmann::json& j, const CensusReport& r) {
  j = nlohmann::json::array();
  for (const CensusRow& row : r.rows) j.push_back(row);
}

nlohmann::json construction_json(const ConstructionResult& r, std::optional<WheelCase> tag) {
  nlohmann::json j;
  j["decision"] = r.validated;
  j["witness"] = witness_json(r.labelling, &r.digraph, r.lambda);
  j["search_space"] = 1;
  j["case"] = tag ? nlohmann::json(std::string(to_string(*tag))) : nlohmann::json(nullptr);
  return j;
}

std::string format_triple(const LambdaTriple& t) {
  std::ostringstream os;
  os << "(" << t.alpha << "," << t.beta << "," << t.gamma << ")";
  return os.str();
}

}  // namespace cordial
