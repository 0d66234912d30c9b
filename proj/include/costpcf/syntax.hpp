#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "costpcf/cost.hpp"
#include "costpcf/term.hpp"
#include "costpcf/types.hpp"

namespace costpcf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::set<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

/// Parses one s-expression term. Step costs use the literal syntax of
/// `monoid`. Bound names resolve to de Bruijn indices; `#k` denotes the k-th
/// free index of an open term.
TermPtr parse(std::string_view source, const CostMonoid& monoid = *nat_monoid());

ValueType parse_value_type(std::string_view source);
CompType parse_comp_type(std::string_view source);

/// Canonical concrete syntax. Binders at nesting level n are named x, x1, x2...
std::string print(const TermPtr& t, const CostMonoid& monoid = *nat_monoid());

}  // namespace costpcf
