#pragma once

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "costpcf/semantics.hpp"
#include "costpcf/term.hpp"
#include "costpcf/typecheck.hpp"

namespace costpcf {

/// Persistent environment; `at(i)` is the value bound to de Bruijn index i.
class Env {
 public:
  Env() = default;
  /// `values[i]` becomes the binding for index i.
  static Env from(const std::vector<SemValue>& values);

  Env extend(SemValue v) const;
  const SemValue& at(std::size_t i) const;
  std::size_t size() const { return size_; }

 private:
  struct Cell {
    SemValue value;
    std::shared_ptr<const Cell> rest;
  };
  std::shared_ptr<const Cell> head_;
  std::size_t size_ = 0;
};

using Denotation = std::variant<SemValue, SemComp>;

/// Compositional interpretation of a term whose typing is `infer(ctx, t)`.
/// Values denote SemValues and computations SemComps. Throws TypeError if
/// the term is ill typed and std::invalid_argument if `env` does not match
/// `ctx`.
Denotation denote(const Context& ctx, const TermPtr& t, const Env& env,
                  const CostModel& m = {});

/// Unchecked interpretation of a value / computation; the caller guarantees
/// typing.
SemValue denote_value(const TermPtr& t, const Env& env, const CostModel& m = {});
SemComp denote_comp(const TermPtr& t, const Env& env, const CostModel& m = {});

/// Observes the denotation of a closed program of type F(A).
Observation observe_program(const TermPtr& t, std::uint64_t fuel,
                            const CostModel& m = {});

/// Denotation of a closed ground value term (triv, yes, no, numerals).
SemValue ground_value(const TermPtr& t);

}  // namespace costpcf
