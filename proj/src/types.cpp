#include "costpcf/types.hpp"

#include <stdexcept>

namespace costpcf {

ValueType ValueType::thunk(CompType x) {
  return ValueType(Kind::Thunk, std::make_shared<const CompType>(std::move(x)));
}

const CompType& ValueType::comp() const {
  if (kind_ != Kind::Thunk) throw std::logic_error("not a thunk type");
  return *comp_;
}

bool operator==(const ValueType& a, const ValueType& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != ValueType::Kind::Thunk) return true;
  return a.comp_ == b.comp_ || *a.comp_ == *b.comp_;
}

CompType CompType::returner(ValueType a) {
  return CompType(Kind::Returner, std::make_shared<const ValueType>(std::move(a)),
                  nullptr);
}

CompType CompType::arrow(ValueType dom, CompType cod) {
  return CompType(Kind::Arrow, std::make_shared<const ValueType>(std::move(dom)),
                  std::make_shared<const CompType>(std::move(cod)));
}

const CompType& CompType::codomain() const {
  if (kind_ != Kind::Arrow) throw std::logic_error("not an arrow type");
  return *cod_;
}

bool operator==(const CompType& a, const CompType& b) {
  if (a.kind_ != b.kind_ || !(*a.value_ == *b.value_)) return false;
  return a.kind_ == CompType::Kind::Returner || *a.cod_ == *b.cod_;
}

namespace {

bool atomic(const ValueType& t) { return t.is_ground(); }

std::string paren(std::string s, bool wrap) {
  return wrap ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const ValueType& t) {
  switch (t.kind()) {
    case ValueType::Kind::Unit: return "unit";
    case ValueType::Kind::Ans: return "ans";
    case ValueType::Kind::Nat: return "nat";
    case ValueType::Kind::Thunk: return "U " + paren(to_string(t.comp()), true);
  }
  return "?";
}

std::string to_string(const CompType& t) {
  if (t.kind() == CompType::Kind::Returner) {
    return "F " + paren(to_string(t.value()), !atomic(t.value()));
  }
  return paren(to_string(t.value()), !atomic(t.value())) + " -> " +
         to_string(t.codomain());
}

std::string to_sexpr(const ValueType& t) {
  if (t.kind() == ValueType::Kind::Thunk) return "(U " + to_sexpr(t.comp()) + ")";
  return to_string(t);
}

std::string to_sexpr(const CompType& t) {
  if (t.kind() == CompType::Kind::Returner) {
    return "(F " + to_sexpr(t.value()) + ")";
  }
  return "(-> " + to_sexpr(t.value()) + " " + to_sexpr(t.codomain()) + ")";
}

}  // namespace costpcf
