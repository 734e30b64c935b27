// cordial: decide, construct and census (2,3)-cordial digraphs.
//
// Exit codes:
//   0  positive verdict / success / all claims pass
//   1  negative verdict / bound not confirmed / some claim failed
//   2  input error (bad file, bad arguments, n out of range)
//   3  size cap exceeded
//   4  a constructor produced data that failed validation
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cordial/catalog.hpp"
#include "cordial/construct.hpp"
#include "cordial/decide.hpp"
#include "cordial/harness.hpp"
#include "cordial/io.hpp"

namespace {

using namespace cordial;

enum Exit : int { kOk = 0, kNegative = 1, kInputError = 2, kCapExceeded = 3, kInvalid = 4 };

struct Globals {
  bool json = false;
  Scope scope = Scope::kNonisolated;
  unsigned threads = 1;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

std::string labels_string(const VertexLabelling& f) {
  std::string out;
  for (std::size_t v = 0; v < f.size(); ++v) out += (v ? " " : "") + std::to_string(int{f.labels[v]});
  return out;
}

std::string arcs_string(const Digraph& d) {
  std::string out;
  for (const Arc& a : d.arcs()) {
    out += (out.empty() ? "" : " ") + std::to_string(a.tail) + "->" + std::to_string(a.head);
  }
  return out;
}

const char* scope_name(Scope s) { return s == Scope::kAll ? "all" : "nonisolated"; }

void print_verdict(const Verdict& v, const char* property, std::size_t n, std::size_t m, const Globals& g) {
  if (g.json) {
    std::cout << nlohmann::json(v).dump() << "\n";
    return;
  }
  std::cout << "order: " << n << "  size: " << m << "  scope: " << scope_name(g.scope) << "\n";
  std::cout << property << ": " << (v.decision ? "yes" : "no") << "\n";
  if (v.witness) {
    std::cout << "labelling: " << labels_string(v.witness->labelling) << "\n";
    if (v.witness->orientation) std::cout << "orientation: " << arcs_string(*v.witness->orientation) << "\n";
    std::cout << "lambda: " << format_triple(v.witness->lambda) << "\n";
  }
  std::cout << "search_space: " << v.search_space << "\n";
}

int run_check(const std::string& path, bool require_graph, const Globals& g) {
  const GraphInput input = parse_graph_text(read_input(path));
  const SearchOptions opts{g.threads};
  if (const auto* d = std::get_if<Digraph>(&input)) {
    if (require_graph) throw ParseError(1, "orientable expects a 'G' file");
    const Verdict v = is_23_cordial(*d, g.scope, opts);
    print_verdict(v, "(2,3)-cordial", d->order(), d->size(), g);
    return v.decision ? kOk : kNegative;
  }
  const Graph& gr = std::get<Graph>(input);
  const Verdict v = is_23_orientable(gr, g.scope, opts);
  print_verdict(v, "(2,3)-orientable", gr.order(), gr.size(), g);
  return v.decision ? kOk : kNegative;
}

int run_gen(const std::string& family, std::size_t n, bool dot) {
  std::string out;
  if (family == "wheel") {
    out = dot ? to_dot(gen_wheel(n), "wheel") : write_text(gen_wheel(n));
  } else if (family == "fan") {
    out = dot ? to_dot(gen_fan(n), "fan") : write_text(gen_fan(n));
  } else if (family == "complete") {
    out = dot ? to_dot(gen_complete_graph(n), "complete") : write_text(gen_complete_graph(n));
  } else if (family == "parallel") {
    out = dot ? to_dot(gen_parallel_edges_graph(n), "parallel") : write_text(gen_parallel_edges_graph(n));
  } else if (family == "cycle-out-wheel") {
    out = dot ? to_dot(gen_cycle_out_wheel(n), nullptr, "cycle_out_wheel") : write_text(gen_cycle_out_wheel(n));
  } else if (family == "cycle-out-fan") {
    out = dot ? to_dot(gen_cycle_out_fan(n), nullptr, "cycle_out_fan") : write_text(gen_cycle_out_fan(n));
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  std::cout << out;
  return kOk;
}

int run_census(std::size_t n, const Globals& g) {
  const CensusReport r = tournament_census(n, SearchOptions{g.threads});
  if (g.json) {
    std::cout << nlohmann::json(r).dump() << "\n";
    return kOk;
  }
  std::cout << "n=" << n << " labelled=" << r.total << " classes=" << r.rows.size() << " cordial=" << r.cordial
            << " noncordial=" << r.noncordial << "\n";
  const std::size_t width = std::max<std::size_t>(n * n, 9);
  std::cout << std::left << std::setw(static_cast<int>(width + 2)) << "canonical" << std::setw(16) << "out-degrees"
            << std::setw(8) << "size" << "cordial\n";
  for (const auto& row : r.rows) {
    std::string seq = "(";
    for (std::size_t i = 0; i < row.out_degrees.size(); ++i) seq += (i ? "," : "") + std::to_string(row.out_degrees[i]);
    seq += ")";
    std::cout << std::setw(static_cast<int>(width + 2)) << row.canonical << std::setw(16) << seq << std::setw(8)
              << row.class_size << (row.cordial ? "yes" : "no") << "\n";
  }
  return kOk;
}

int run_extremal(std::size_t n, bool verify, const Globals& g) {
  const auto bound = max_arcs(n);
  const auto z = monochromatic_edges_complete(n);
  if (!verify) {
    if (g.json) {
      std::cout << nlohmann::json{{"n", n}, {"Z", z}, {"max_arcs", bound}}.dump() << "\n";
    } else {
      std::cout << "n=" << n << " Z=" << z << " max_arcs=" << bound << "\n";
    }
    return kOk;
  }
  const ExtremalReport r = verify_extremal_bound(n, SearchOptions{g.threads});
  if (g.json) {
    nlohmann::json j{{"n", n},
                     {"Z", z},
                     {"max_arcs", bound},
                     {"witness_cordial", r.witness_cordial},
                     {"witness_lambda", r.witness_lambda},
                     {"subsets_examined", r.subsets_examined},
                     {"orientable_subsets", r.orientable_subsets},
                     {"confirmed", r.confirmed}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << n << " Z=" << z << " max_arcs=" << bound << "\n";
    std::cout << "witness at bound: lambda " << format_triple(r.witness_lambda) << ", cordial "
              << (r.witness_cordial ? "yes" : "no") << "\n";
    std::cout << "subsets with " << bound + 1 << " edges examined: " << r.subsets_examined
              << ", orientable: " << r.orientable_subsets << "\n";
    if (r.first_orientable) std::cout << "first orientable subset:\n" << write_text(*r.first_orientable);
    std::cout << "bound " << (r.confirmed ? "confirmed" : "NOT confirmed") << "\n";
  }
  return r.confirmed ? kOk : kNegative;
}

int run_verify(const std::vector<std::string>& filter, const Globals& g) {
  const HarnessReport r = run_harness(filter, SearchOptions{g.threads});
  if (g.json) {
    std::cout << nlohmann::json(r).dump(2) << "\n";
  } else {
    for (const auto& row : r.rows) {
      std::cout << std::left << std::setw(22) << row.info.id << (row.pass ? "PASS  " : "FAIL  ") << std::right
                << std::setw(9) << std::fixed << std::setprecision(1) << row.runtime_ms << " ms  " << row.info.result
                << " [" << row.info.range << "]\n";
      if (!row.detail.empty()) std::cout << "    " << row.detail << "\n";
    }
    std::cout << (r.all_pass() ? "all claims pass" : "some claims FAILED") << "\n";
  }
  return r.all_pass() ? kOk : kNegative;
}

int run_construct(const std::string& kind, const std::string& arg, bool dot, const Globals& g) {
  std::optional<ConstructionResult> r;
  std::optional<WheelCase> tag;
  if (kind == "wheel" || kind == "fan") {
    const std::size_t n = std::stoul(arg);
    tag = wheel_case(n);
    r = kind == "wheel" ? orient_wheel(n) : std::optional{orient_fan(n)};
    if (!r) {
      std::cout << (g.json ? nlohmann::json{{"decision", false}, {"witness", nullptr}, {"search_space", 0},
                                            {"case", std::string(to_string(*tag))}}
                                 .dump()
                           : "no cordial orientation: wheel case excluded")
                << "\n";
      return kNegative;
    }
  } else if (kind == "tour5") {
    const GraphInput input = parse_graph_text(read_input(arg));
    const auto* d = std::get_if<Digraph>(&input);
    if (d == nullptr) throw ParseError(1, "tour5 expects a 'D' file");
    r = label_5_tournament(Tournament(*d));
  } else {
    throw std::invalid_argument("unknown construction '" + kind + "'");
  }
  if (dot) {
    std::cout << to_dot(r->digraph, &r->labelling, kind);
  } else if (g.json) {
    std::cout << construction_json(*r, tag).dump() << "\n";
  } else {
    if (tag) std::cout << "case: " << to_string(*tag) << "\n";
    std::cout << "labelling: " << labels_string(r->labelling) << "\n";
    std::cout << "orientation: " << arcs_string(r->digraph) << "\n";
    std::cout << "lambda: " << format_triple(r->lambda) << "\n";
    std::cout << "validated: " << (r->validated ? "yes" : "no") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide and construct (2,3)-cordial digraphs and orientations"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  const std::map<std::string, Scope> scopes{{"nonisolated", Scope::kNonisolated}, {"all", Scope::kAll}};
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--scope", g.scope, "Friendliness scope: nonisolated (default) or all")
      ->transform(CLI::CheckedTransformer(scopes, CLI::ignore_case));
  app.add_option("--threads", g.threads, "Worker threads for searches")->check(CLI::Range(1U, 256U));

  std::string path;
  auto* check = app.add_subcommand("check", "Decide a D file (cordial) or G file (orientable)");
  check->add_option("path", path, "Input file, '-' for stdin")->required();
  auto* orientable = app.add_subcommand("orientable", "Decide (2,3)-orientability of a G file");
  orientable->add_option("path", path, "Input file, '-' for stdin")->required();

  std::string family;
  std::size_t n = 0;
  bool dot = false;
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", family, "wheel, fan, cycle-out-wheel, cycle-out-fan, parallel, complete")->required();
  gen->add_option("n", n, "Order")->required();
  gen->add_flag("--dot", dot, "Emit DOT instead of the text format");

  auto* census = app.add_subcommand("census", "Isomorphism-class census of n-tournaments");
  census->add_option("n", n, "Order, 3..6")->required();

  bool verify_bound = false;
  auto* extremal = app.add_subcommand("extremal", "Maximum arc count of a cordial digraph");
  extremal->add_option("n", n, "Order, >= 6")->required();
  extremal->add_flag("--verify", verify_bound, "Exhaustively confirm the bound (n <= 7)");

  std::vector<std::string> filter;
  auto* verify = app.add_subcommand("verify", "Re-check every claim and print a traceability table");
  verify->add_option("--claims", filter, "Claim ids or groups to run")->delimiter(',');

  std::string kind, arg;
  auto* construct = app.add_subcommand("construct", "Build a cordial orientation: wheel N, fan N, tour5 FILE");
  construct->add_option("kind", kind, "wheel, fan or tour5")->required();
  construct->add_option("arg", arg, "Order, or a D file for tour5")->required();
  construct->add_flag("--dot", dot, "Emit an annotated DOT drawing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return run_check(path, false, g);
    if (*orientable) return run_check(path, true, g);
    if (*gen) return run_gen(family, n, dot);
    if (*census) return run_census(n, g);
    if (*extremal) return run_extremal(n, verify_bound, g);
    if (*verify) return run_verify(filter, g);
    if (*construct) return run_construct(kind, arg, dot, g);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
