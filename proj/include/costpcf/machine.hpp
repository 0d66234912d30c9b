#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "costpcf/cost.hpp"
#include "costpcf/term.hpp"

namespace costpcf {

/// No transition applies to a closed term that was supposed to be well typed.
class StuckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Head rule responsible for a transition.
enum class Rule { BindRet, ApLam, FixUnfold, IfzZero, IfzSucc, Step };

std::string_view to_string(Rule r);

namespace machine {

struct Terminal {};
struct Next {
  SealedCost cost;
  TermPtr term;
  Rule rule;
};

}  // namespace machine

using StepResult = std::variant<machine::Terminal, machine::Next>;

/// One transition of a closed computation. Head rules fire first; otherwise
/// the head of a `bind` or the function of an `ap` is reduced in place.
StepResult out(const TermPtr& e, const CostModel& model = {});

struct TraceStep {
  SealedCost cost;
  TermPtr term;
  Rule rule;
};

struct Trace {
  TermPtr start;
  std::vector<TraceStep> steps;
  SealedCost total;
  /// False when the fuel ran out before a terminal state.
  bool terminal = false;
};

/// Applies `out` at most `fuel` times, recording every transition.
Trace trace(const TermPtr& e, std::uint64_t fuel, const CostModel& model = {});

/// Iterated transitions without recording the intermediate terms.
struct Run {
  /// The terminal state reached, if any.
  std::optional<TermPtr> terminal;
  SealedCost total;
  std::uint64_t steps = 0;
};

Run run(const TermPtr& e, std::uint64_t fuel, const CostModel& model = {});

namespace outcome {

struct Defined {
  SealedCost cost;
};
/// Reached a terminal state other than the target.
struct Mismatch {
  TermPtr reached;
};
struct Exhausted {
  std::uint64_t fuel_used;
};

}  // namespace outcome

using CostedOutcome =
    std::variant<outcome::Defined, outcome::Mismatch, outcome::Exhausted>;

/// Runs `e` for at most `fuel` transitions. Defined with the accumulated
/// cost if it stops at exactly `v`; Mismatch if it stops elsewhere.
CostedOutcome eval(const TermPtr& e, const TermPtr& v, std::uint64_t fuel,
                   const CostModel& model = {});

/// eval against `ret triv`.
CostedOutcome profile(const TermPtr& e, std::uint64_t fuel,
                      const CostModel& model = {});

bool same_outcome(const CostedOutcome& a, const CostedOutcome& b,
                  const CostModel& model);

}  // namespace costpcf
