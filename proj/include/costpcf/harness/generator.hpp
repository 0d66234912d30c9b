#pragma once

#include <cstddef>
#include <cstdint>

#include "costpcf/cost.hpp"
#include "costpcf/term.hpp"
#include "costpcf/typecheck.hpp"
#include "costpcf/types.hpp"

namespace costpcf::harness {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_depth = 6;
  CompType target = CompType::returner(ValueType::unit());
  /// Chance of an unrestricted `fix` at each computation node.
  double fix_probability = 0.1;
  std::uint64_t step_cost_min = 0;
  std::uint64_t step_cost_max = 3;
  /// Only bounded countdown recursion; every output terminates.
  bool terminating = false;
  MonoidPtr monoid = nat_monoid();
};

/// splitmix64 of `base` and `index`; derives per-case seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

/// Closed term of type cfg.target. Deterministic in cfg.
TermPtr gen_term(const GenConfig& cfg);

/// Computation of type `target` in `ctx`; every context entry may be used.
TermPtr gen_open(const GenConfig& cfg, const Context& ctx, const CompType& target);

/// Closed value of type `type`.
TermPtr gen_value(const GenConfig& cfg, const ValueType& type);

}  // namespace costpcf::harness
