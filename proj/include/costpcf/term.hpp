#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "costpcf/cost.hpp"
#include "costpcf/types.hpp"

namespace costpcf {

class Term;
/// Terms are immutable and shared; a TermPtr is never null.
using TermPtr = std::shared_ptr<const Term>;

namespace node {
struct Var { std::size_t index; };
struct Triv {};
struct Yes {};
struct No {};
struct Zero {};
struct Succ { TermPtr pred; };
struct Ret { TermPtr value; };
struct Step { Cost cost; TermPtr body; };
/// `cont` binds the returned value at index 0.
struct Bind { TermPtr head; TermPtr cont; };
/// `scase` binds the predecessor at index 0.
struct Ifz { TermPtr scrut; TermPtr zcase; TermPtr scase; };
/// `body` binds the recursive thunk at index 0.
struct Fix { TermPtr body; };
struct Lam { ValueType dom; TermPtr body; };
struct Ap { TermPtr fun; TermPtr arg; };
}  // namespace node

/// Call-by-push-value term with de Bruijn indices. Computations and values
/// share one syntax; thunking and forcing are implicit in the typing.
class Term {
 public:
  using Node = std::variant<node::Var, node::Triv, node::Yes, node::No,
                            node::Zero, node::Succ, node::Ret, node::Step,
                            node::Bind, node::Ifz, node::Fix, node::Lam,
                            node::Ap>;

  explicit Term(Node n);

  const Node& node() const { return node_; }
  template <class T> const T* as() const { return std::get_if<T>(&node_); }
  template <class T> bool is() const { return std::holds_alternative<T>(node_); }

  /// One more than the largest free index; 0 for closed terms.
  std::size_t free_bound() const { return free_bound_; }
  bool closed() const { return free_bound_ == 0; }
  std::size_t size() const { return size_; }

  static std::vector<std::pair<TermPtr, std::size_t>> children_of(const Node& n);

 private:
  Node node_;
  std::size_t free_bound_ = 0;
  std::size_t size_ = 1;
};

namespace mk {
TermPtr var(std::size_t i);
TermPtr triv();
TermPtr yes();
TermPtr no();
TermPtr zero();
TermPtr succ(TermPtr t);
/// succ^n(zero)
TermPtr numeral(std::uint64_t n);
TermPtr ret(TermPtr t);
TermPtr step(Cost c, TermPtr body);
TermPtr bind(TermPtr head, TermPtr cont);
TermPtr ifz(TermPtr scrut, TermPtr zcase, TermPtr scase);
TermPtr fix(TermPtr body);
TermPtr lam(ValueType dom, TermPtr body);
TermPtr ap(TermPtr fun, TermPtr arg);
}  // namespace mk

/// Structural (alpha-) equality.
bool equal(const TermPtr& a, const TermPtr& b);

/// Number denoted by a closed succ-chain ending in zero, if it is one.
std::optional<std::uint64_t> as_numeral(const TermPtr& t);

/// Adds `by` to every free index >= cutoff.
TermPtr shift(const TermPtr& t, std::size_t by, std::size_t cutoff = 0);

/// Replaces index `index` by `replacement` and lowers the indices above it,
/// removing one binder from the context. `replacement` is scoped in the
/// resulting context and is shifted as it moves under binders.
TermPtr subst(const TermPtr& t, const TermPtr& replacement,
              std::size_t index = 0);

/// Immediate subterms together with how many binders each sits under.
std::vector<std::pair<TermPtr, std::size_t>> children(const TermPtr& t);

/// Rebuilds `t` with its immediate subterms replaced, in `children` order.
TermPtr with_children(const TermPtr& t, const std::vector<TermPtr>& kids);

}  // namespace costpcf
