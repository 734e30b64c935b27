#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial {

/// Output of a constructor. `validated` is recomputed from the carried data
/// with labelling primitives only.
struct ConstructionResult {
  Digraph digraph;
  VertexLabelling labelling;
  LambdaTriple lambda;
  bool validated = false;
  std::string trace;  // how the data was built, for diagnostics
};

/// Proof case of the wheel orientability argument: residue of 2n-2 mod 3
/// (case 1/2/3) and parity of n and n/2 (subcase).
enum class WheelCase { k1_1, k1_2, k2_1, k2_2, k2_3, k3_1, k3_2, k3_3, kExcluded };

std::string_view to_string(WheelCase c);

WheelCase wheel_case(std::size_t n);

/// Labels a pair of vertices with out-degree sum 4 by 1, the rest 0. Throws
/// ValidationError when no such pair exists.
ConstructionResult label_5_tournament(const Tournament& t);

/// Cordial orientation of gen_wheel(n), or nullopt when n is excluded
/// (n = 10 mod 12). Throws ValidationError if the output does not re-check.
std::optional<ConstructionResult> orient_wheel(std::size_t n);

/// Cordial orientation of gen_fan(n) for every n >= 4.
ConstructionResult orient_fan(std::size_t n);

struct CyclicOrientationReport {
  std::size_t n = 0;
  bool in_scope = true;             // false when n is below the theorem's range
  std::uint64_t labellings = 0;     // friendly labellings examined
  std::optional<VertexLabelling> counterexample;  // a cordial labelling, if any
  bool spoke_accounting_ok = true;  // beta_S = 0, alpha_S in {k, k+1} when f(centre) = 0
  bool rim_balanced = true;         // rim alpha = rim beta for every labelling
  bool holds() const { return !counterexample && spoke_accounting_ok && rim_balanced; }
};

/// Exhaustive non-cordiality check of gen_cycle_out_wheel(n), 4 <= n <= 16.
CyclicOrientationReport check_cycle_out_wheel_not_cordial(std::size_t n);

/// Exhaustive non-cordiality check of gen_cycle_out_fan(n), 4 <= n <= 16;
/// n = 4 is reported with in_scope = false.
CyclicOrientationReport check_cycle_out_fan_not_cordial(std::size_t n);

}  // namespace cordial
