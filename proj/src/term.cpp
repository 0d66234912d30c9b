#include "costpcf/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace costpcf {

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

std::size_t under_binder(std::size_t bound) { return bound == 0 ? 0 : bound - 1; }

}  // namespace

Term::Term(Node n) : node_(std::move(n)) {
  for (const auto& [kid, binders] : children_of(node_)) {
    free_bound_ = std::max(free_bound_, binders == 0
                                            ? kid->free_bound_
                                            : under_binder(kid->free_bound_));
    size_ += kid->size_;
  }
  if (const auto* v = std::get_if<node::Var>(&node_)) free_bound_ = v->index + 1;
}

std::vector<std::pair<TermPtr, std::size_t>> Term::children_of(const Node& n) {
  return std::visit(
      overloaded{
          [](const node::Succ& s) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{s.pred, 0}};
          },
          [](const node::Ret& r) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{r.value, 0}};
          },
          [](const node::Step& s) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{s.body, 0}};
          },
          [](const node::Bind& b) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{b.head, 0}, {b.cont, 1}};
          },
          [](const node::Ifz& i) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{i.scrut, 0}, {i.zcase, 0}, {i.scase, 1}};
          },
          [](const node::Fix& f) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{f.body, 1}};
          },
          [](const node::Lam& l) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{l.body, 1}};
          },
          [](const node::Ap& a) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {{a.fun, 0}, {a.arg, 0}};
          },
          [](const auto&) -> std::vector<std::pair<TermPtr, std::size_t>> {
            return {};
          },
      },
      n);
}

namespace mk {

namespace {
TermPtr make(Term::Node n) { return std::make_shared<const Term>(std::move(n)); }
}  // namespace

TermPtr var(std::size_t i) { return make(node::Var{i}); }
TermPtr triv() {
  static const TermPtr t = make(node::Triv{});
  return t;
}
TermPtr yes() {
  static const TermPtr t = make(node::Yes{});
  return t;
}
TermPtr no() {
  static const TermPtr t = make(node::No{});
  return t;
}
TermPtr zero() {
  static const TermPtr t = make(node::Zero{});
  return t;
}
TermPtr succ(TermPtr t) { return make(node::Succ{std::move(t)}); }
TermPtr numeral(std::uint64_t n) {
  TermPtr t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}
TermPtr ret(TermPtr t) { return make(node::Ret{std::move(t)}); }
TermPtr step(Cost c, TermPtr body) {
  return make(node::Step{std::move(c), std::move(body)});
}
TermPtr bind(TermPtr head, TermPtr cont) {
  return make(node::Bind{std::move(head), std::move(cont)});
}
TermPtr ifz(TermPtr scrut, TermPtr zcase, TermPtr scase) {
  return make(node::Ifz{std::move(scrut), std::move(zcase), std::move(scase)});
}
TermPtr fix(TermPtr body) { return make(node::Fix{std::move(body)}); }
TermPtr lam(ValueType dom, TermPtr body) {
  return make(node::Lam{std::move(dom), std::move(body)});
}
TermPtr ap(TermPtr fun, TermPtr arg) {
  return make(node::Ap{std::move(fun), std::move(arg)});
}

}  // namespace mk

std::vector<std::pair<TermPtr, std::size_t>> children(const TermPtr& t) {
  return Term::children_of(t->node());
}

TermPtr with_children(const TermPtr& t, const std::vector<TermPtr>& k) {
  auto need = [&](std::size_t n) {
    if (k.size() != n) throw std::invalid_argument("with_children: arity mismatch");
  };
  return std::visit(
      overloaded{
          [&](const node::Succ&) { need(1); return mk::succ(k[0]); },
          [&](const node::Ret&) { need(1); return mk::ret(k[0]); },
          [&](const node::Step& s) { need(1); return mk::step(s.cost, k[0]); },
          [&](const node::Bind&) { need(2); return mk::bind(k[0], k[1]); },
          [&](const node::Ifz&) { need(3); return mk::ifz(k[0], k[1], k[2]); },
          [&](const node::Fix&) { need(1); return mk::fix(k[0]); },
          [&](const node::Lam& l) { need(1); return mk::lam(l.dom, k[0]); },
          [&](const node::Ap&) { need(2); return mk::ap(k[0], k[1]); },
          [&](const auto&) { need(0); return t; },
      },
      t->node());
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->node().index() != b->node().index() || a->size() != b->size()) {
    return false;
  }
  if (const auto* va = a->as<node::Var>()) return va->index == b->as<node::Var>()->index;
  if (const auto* sa = a->as<node::Step>()) {
    if (!(sa->cost == b->as<node::Step>()->cost)) return false;
  }
  if (const auto* la = a->as<node::Lam>()) {
    if (!(la->dom == b->as<node::Lam>()->dom)) return false;
  }
  auto ka = children(a);
  auto kb = children(b);
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (!equal(ka[i].first, kb[i].first)) return false;
  }
  return true;
}

std::optional<std::uint64_t> as_numeral(const TermPtr& t) {
  std::uint64_t n = 0;
  const Term* cur = t.get();
  while (const auto* s = cur->as<node::Succ>()) {
    ++n;
    cur = s->pred.get();
  }
  if (!cur->is<node::Zero>()) return std::nullopt;
  return n;
}

namespace {

// Shared traversal for shift and subst: rebuilds only the parts of the tree
// that contain free indices at or above the cutoff.
template <class OnVar>
TermPtr map_vars(const TermPtr& t, std::size_t cutoff, const OnVar& on_var) {
  if (t->free_bound() <= cutoff) return t;
  if (const auto* v = t->as<node::Var>()) return on_var(v->index, cutoff);
  auto kids = children(t);
  std::vector<TermPtr> out;
  out.reserve(kids.size());
  bool changed = false;
  for (const auto& [kid, binders] : kids) {
    out.push_back(map_vars(kid, cutoff + binders, on_var));
    changed = changed || out.back() != kid;
  }
  return changed ? with_children(t, out) : t;
}

}  // namespace

TermPtr shift(const TermPtr& t, std::size_t by, std::size_t cutoff) {
  if (by == 0) return t;
  return map_vars(t, cutoff, [by](std::size_t i, std::size_t) {
    return mk::var(i + by);
  });
}

TermPtr subst(const TermPtr& t, const TermPtr& replacement, std::size_t index) {
  return map_vars(t, index,
                  [&](std::size_t i, std::size_t cutoff) -> TermPtr {
                    if (i == cutoff) return shift(replacement, cutoff - index);
                    return mk::var(i - 1);
                  });
}

}  // namespace costpcf
