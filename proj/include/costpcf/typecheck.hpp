#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "costpcf/cost.hpp"
#include "costpcf/term.hpp"
#include "costpcf/types.hpp"

namespace costpcf {

/// Typing context; index 0 is the innermost binder.
using Context = std::vector<ValueType>;

/// Result of inference: a value of type A, or a computation of type X.
/// A computation of type X is also a value of type U(X).
class Classification {
 public:
  static Classification value(ValueType a) { return Classification(std::move(a)); }
  static Classification computation(CompType x) { return Classification(std::move(x)); }

  bool is_computation() const { return std::holds_alternative<CompType>(c_); }
  /// Throws std::bad_variant_access for the wrong sort.
  const ValueType& value_type() const { return std::get<ValueType>(c_); }
  const CompType& comp_type() const { return std::get<CompType>(c_); }

  friend bool operator==(const Classification&, const Classification&) = default;

 private:
  explicit Classification(std::variant<ValueType, CompType> c) : c_(std::move(c)) {}
  std::variant<ValueType, CompType> c_;
};

std::string to_string(const Classification& c);

class TypeError : public std::runtime_error {
 public:
  /// `path` locates the offending subterm as "/i/j/..." child indices.
  TypeError(std::string path, std::string rule, std::string message);

  const std::string& path() const { return path_; }
  const std::string& rule() const { return rule_; }
  const std::string& message() const { return message_; }

  /// {"error":"type","at":<path>,"msg":<text>}
  std::string to_json() const;

 private:
  std::string path_;
  std::string rule_;
  std::string message_;
};

/// Infers the unique classification of `t` in `ctx`. Fixed points are typed
/// by unification; a term whose own type is left undetermined (such as a
/// bare `fix x x`) is rejected as ambiguous. Undetermined types of discarded
/// subterms do not affect the result.
///
/// `monoid`, when given, is used to check step cost literals.
Classification infer(const Context& ctx, const TermPtr& t,
                     const CostMonoid* monoid = nullptr);

/// Checks that the closed term `t` is a computation of type `expected`.
void check_program(const TermPtr& t, const CompType& expected,
                   const CostMonoid* monoid = nullptr);

/// Non-throwing variant of check_program.
bool has_type(const TermPtr& t, const CompType& expected,
              const CostMonoid* monoid = nullptr);

}  // namespace costpcf
