#pragma once

#include <memory>
#include <string>

namespace costpcf {

class CompType;

/// Value types: unit, ans, nat and thunks U(X).
class ValueType {
 public:
  enum class Kind { Unit, Ans, Nat, Thunk };

  static ValueType unit() { return ValueType(Kind::Unit, nullptr); }
  static ValueType ans() { return ValueType(Kind::Ans, nullptr); }
  static ValueType nat() { return ValueType(Kind::Nat, nullptr); }
  static ValueType thunk(CompType x);

  Kind kind() const { return kind_; }
  bool is_ground() const { return kind_ != Kind::Thunk; }
  /// The computation type under U. Only valid for Kind::Thunk.
  const CompType& comp() const;

  friend bool operator==(const ValueType& a, const ValueType& b);

 private:
  ValueType(Kind k, std::shared_ptr<const CompType> c)
      : kind_(k), comp_(std::move(c)) {}

  Kind kind_;
  std::shared_ptr<const CompType> comp_;
};

/// Computation types: F(A) and A ⇀ X.
class CompType {
 public:
  enum class Kind { Returner, Arrow };

  static CompType returner(ValueType a);
  static CompType arrow(ValueType dom, CompType cod);

  Kind kind() const { return kind_; }
  /// Returned type for F(A); domain for A ⇀ X.
  const ValueType& value() const { return *value_; }
  /// Only valid for Kind::Arrow.
  const CompType& codomain() const;

  friend bool operator==(const CompType& a, const CompType& b);

 private:
  CompType(Kind k, std::shared_ptr<const ValueType> v,
           std::shared_ptr<const CompType> c)
      : kind_(k), value_(std::move(v)), cod_(std::move(c)) {}

  Kind kind_;
  std::shared_ptr<const ValueType> value_;
  std::shared_ptr<const CompType> cod_;
};

/// Human-readable forms: "nat", "U (F unit)", "nat -> F nat".
std::string to_string(const ValueType& t);
std::string to_string(const CompType& t);

/// Concrete (s-expression) forms: "nat", "(U (F unit))", "(-> nat (F nat))".
std::string to_sexpr(const ValueType& t);
std::string to_sexpr(const CompType& t);

}  // namespace costpcf
