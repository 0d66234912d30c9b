#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "costpcf/cost.hpp"
#include "costpcf/harness/report.hpp"
#include "costpcf/term.hpp"

namespace costpcf::harness {

struct CheckOptions {
  CostModel model;
  /// Fuel for whole-program outcomes and observations.
  std::uint64_t fuel = 100000;
  std::uint64_t seed = 1;
  /// Transitions inspected one by one per program by the machine checks.
  std::uint64_t trace_limit = 2000;
  /// Larger intermediate terms have preservation checked at the rewritten
  /// redex, whose context is closed, instead of re-typing the whole term.
  std::size_t full_typing_limit = 500;
  /// Programs that do not finish within `fuel` have their first
  /// `divergent_steps` transitions checked, observing at `divergent_fuel`.
  std::uint64_t divergent_steps = 200;
  std::uint64_t divergent_fuel = 1000;
  /// Shrink the first failing case of each check.
  bool minimize = true;
};

/// Monad, distributive-law and cost-action equations on random Delays;
/// `cases` instances per equation.
CheckReport check_laws(std::size_t cases, const CheckOptions& opts);

/// Determinism of single transitions, preservation along every inspected
/// transition, functionality of eval, and monotonicity in fuel.
CheckReport check_machine(const std::vector<TermPtr>& programs, const CheckOptions& opts);

/// profile vs. the observed denotation, for closed programs of type F unit.
/// Definedness disagreements are retried once at 4× fuel.
CheckReport check_adequacy(const std::vector<TermPtr>& programs, const CheckOptions& opts);

/// Per transition e -c-> e': ⟦e⟧ against c ⊞ ⟦e'⟧. Per terminating program:
/// ⟦e⟧ against the machine's cost and final value. Ground-typed programs.
CheckReport check_soundness(const std::vector<TermPtr>& programs, const CheckOptions& opts);

enum class SequencingLaw {
  /// eval(e; g, ret w) = c1 + c2
  Sequence,
  /// profile(e; g) = c1 + c2
  Profile,
  /// profile((e; g); i) = profile(e; (g; i))
  Reassociate,
  /// eval((e; g) w, z) = eval(e; g w, z)
  ApplySequence,
};

std::string_view to_string(SequencingLaw law);

/// `e` is closed; `g` sits under one binder for e's result; `extra` is `i`
/// (under one binder for g's result) or the closed argument `w`.
struct SequencingInstance {
  SequencingLaw law;
  TermPtr e;
  TermPtr g;
  TermPtr extra;
};

/// `count` terminating instances of `law`.
std::vector<SequencingInstance> gen_sequencing_instances(SequencingLaw law, std::size_t count,
                                                         std::uint64_t seed,
                                                         const MonoidPtr& monoid);

/// Cases are counted only when every component evaluation is Defined.
CheckReport check_sequencing_laws(const std::vector<SequencingInstance>& instances,
                                  const CheckOptions& opts);

/// Two thunked F unit computations passed to the same function.
struct ArgumentPair {
  TermPtr x;
  TermPtr y;
};

/// Terminating argument pairs; a third of them are `x` against `x` wrapped
/// in extra steps.
std::vector<ArgumentPair> gen_argument_pairs(std::size_t count, std::uint64_t seed,
                                             const MonoidPtr& monoid);

/// Functions of type U F unit ⇀ F ans applied to both members of each pair.
/// Whenever both arguments and both applications are Defined, the answers
/// agree, and re-running under the Extensional phase gives the same answers
/// with sealed cost.
CheckReport check_noninterference(const std::vector<TermPtr>& functions,
                                  const std::vector<ArgumentPair>& args,
                                  const CheckOptions& opts);

}  // namespace costpcf::harness
