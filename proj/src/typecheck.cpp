#include "costpcf/typecheck.hpp"

#include <json.hpp>
#include <optional>

namespace costpcf {

TypeError::TypeError(std::string path, std::string rule, std::string message)
    : std::runtime_error(rule + ": " + message + (path.empty() ? "" : " at " + path)),
      path_(std::move(path)),
      rule_(std::move(rule)),
      message_(std::move(message)) {}

std::string TypeError::to_json() const {
  nlohmann::ordered_json j;
  j["error"] = "type";
  j["at"] = path_;
  j["msg"] = rule_ + ": " + message_;
  return j.dump();
}

std::string to_string(const Classification& c) {
  return c.is_computation() ? to_string(c.comp_type()) : to_string(c.value_type());
}

namespace {

// Types with metavariables, stored in an arena and solved by union-find.
class Solver {
 public:
  enum class K { Unit, Ans, Nat, U, F, Arrow, Meta };
  using Id = std::size_t;

  Id fresh() { return push({K::Meta, 0, 0, kUnbound}); }
  Id unit() { return push({K::Unit}); }
  Id ans() { return push({K::Ans}); }
  Id nat() { return push({K::Nat}); }
  Id thunk(Id x) { return push({K::U, x}); }
  Id returner(Id a) { return push({K::F, a}); }
  Id arrow(Id a, Id x) { return push({K::Arrow, a, x}); }

  Id from(const ValueType& t) {
    switch (t.kind()) {
      case ValueType::Kind::Unit: return unit();
      case ValueType::Kind::Ans: return ans();
      case ValueType::Kind::Nat: return nat();
      case ValueType::Kind::Thunk: return thunk(from(t.comp()));
    }
    return unit();
  }
  Id from(const CompType& t) {
    if (t.kind() == CompType::Kind::Returner) return returner(from(t.value()));
    return arrow(from(t.value()), from(t.codomain()));
  }

  Id find(Id t) {
    while (nodes_[t].k == K::Meta && nodes_[t].link != kUnbound) t = nodes_[t].link;
    return t;
  }

  bool unify(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (nodes_[a].k == K::Meta) return bind(a, b);
    if (nodes_[b].k == K::Meta) return bind(b, a);
    const Node na = nodes_[a];
    const Node nb = nodes_[b];
    if (na.k != nb.k) return false;
    switch (na.k) {
      case K::U:
      case K::F: return unify(na.l, nb.l);
      case K::Arrow: return unify(na.l, nb.l) && unify(na.r, nb.r);
      default: return true;
    }
  }

  K kind(Id t) { return nodes_[find(t)].k; }
  Id left(Id t) { return nodes_[find(t)].l; }
  Id right(Id t) { return nodes_[find(t)].r; }

  std::string show(Id t) {
    t = find(t);
    const Node n = nodes_[t];
    auto atom = [&](Id s) {
      auto k = kind(s);
      auto str = show(s);
      return (k == K::Unit || k == K::Ans || k == K::Nat || k == K::Meta)
                 ? str
                 : "(" + str + ")";
    };
    switch (n.k) {
      case K::Unit: return "unit";
      case K::Ans: return "ans";
      case K::Nat: return "nat";
      case K::Meta: return "?";
      case K::U: return "U (" + show(n.l) + ")";
      case K::F: return "F " + atom(n.l);
      case K::Arrow: return atom(n.l) + " -> " + show(n.r);
    }
    return "?";
  }

  std::optional<ValueType> value_type(Id t) {
    t = find(t);
    switch (nodes_[t].k) {
      case K::Unit: return ValueType::unit();
      case K::Ans: return ValueType::ans();
      case K::Nat: return ValueType::nat();
      case K::U:
        if (auto x = comp_type(nodes_[t].l)) return ValueType::thunk(*x);
        return std::nullopt;
      default: return std::nullopt;
    }
  }
  std::optional<CompType> comp_type(Id t) {
    t = find(t);
    const Node n = nodes_[t];
    if (n.k == K::F) {
      if (auto a = value_type(n.l)) return CompType::returner(*a);
    } else if (n.k == K::Arrow) {
      auto a = value_type(n.l);
      auto x = comp_type(n.r);
      if (a && x) return CompType::arrow(*a, *x);
    }
    return std::nullopt;
  }

 private:
  static constexpr Id kUnbound = static_cast<Id>(-1);
  struct Node {
    K k;
    Id l = 0;
    Id r = 0;
    Id link = kUnbound;
  };

  Id push(Node n) {
    nodes_.push_back(n);
    return nodes_.size() - 1;
  }

  bool occurs(Id meta, Id t) {
    t = find(t);
    if (t == meta) return true;
    const Node n = nodes_[t];
    switch (n.k) {
      case K::U:
      case K::F: return occurs(meta, n.l);
      case K::Arrow: return occurs(meta, n.l) || occurs(meta, n.r);
      default: return false;
    }
  }

  bool bind(Id meta, Id t) {
    if (occurs(meta, t)) return false;
    nodes_[meta].link = t;
    return true;
  }

  std::vector<Node> nodes_;
};

struct Cls {
  bool computation;
  Solver::Id type;
};

class Checker {
 public:
  explicit Checker(const CostMonoid* monoid) : monoid_(monoid) {}

  Solver& solver() { return s_; }

  Cls infer(std::vector<Solver::Id>& ctx, const TermPtr& t, const std::string& path) {
    auto child = [&](std::size_t i) { return path + "/" + std::to_string(i); };
    auto under = [&](Solver::Id a, const TermPtr& body, std::size_t i) {
      ctx.push_back(a);
      auto c = as_comp(infer(ctx, body, child(i)), child(i));
      ctx.pop_back();
      return c;
    };

    if (const auto* v = t->as<node::Var>()) {
      if (v->index >= ctx.size()) {
        throw TypeError(path, "var", "index " + std::to_string(v->index) +
                                         " is not bound in a context of length " +
                                         std::to_string(ctx.size()));
      }
      return {false, ctx[ctx.size() - 1 - v->index]};
    }
    if (t->is<node::Triv>()) return {false, s_.unit()};
    if (t->is<node::Yes>() || t->is<node::No>()) return {false, s_.ans()};
    if (t->is<node::Zero>()) return {false, s_.nat()};
    if (const auto* s = t->as<node::Succ>()) {
      auto a = as_value(infer(ctx, s->pred, child(0)));
      expect(a, s_.nat(), child(0), "succ", "argument");
      return {false, s_.nat()};
    }
    if (const auto* r = t->as<node::Ret>()) {
      auto a = as_value(infer(ctx, r->value, child(0)));
      return {true, s_.returner(a)};
    }
    if (const auto* st = t->as<node::Step>()) {
      if (monoid_ && !monoid_->contains(st->cost)) {
        throw TypeError(path, "step",
                        "cost literal is not an element of the " + monoid_->name() +
                            " monoid");
      }
      return {true, as_comp(infer(ctx, st->body, child(0)), child(0))};
    }
    if (const auto* b = t->as<node::Bind>()) {
      auto head = as_comp(infer(ctx, b->head, child(0)), child(0));
      auto a = s_.fresh();
      expect(head, s_.returner(a), child(0), "bind", "head");
      return {true, under(a, b->cont, 1)};
    }
    if (const auto* i = t->as<node::Ifz>()) {
      auto n = as_value(infer(ctx, i->scrut, child(0)));
      expect(n, s_.nat(), child(0), "ifz", "scrutinee");
      auto z = as_comp(infer(ctx, i->zcase, child(1)), child(1));
      auto sc = under(s_.nat(), i->scase, 2);
      expect(sc, z, child(2), "ifz", "successor branch");
      return {true, z};
    }
    if (const auto* f = t->as<node::Fix>()) {
      auto x = s_.fresh();
      auto body = under(s_.thunk(x), f->body, 0);
      expect(body, x, child(0), "fix", "body");
      return {true, x};
    }
    if (const auto* l = t->as<node::Lam>()) {
      auto a = s_.from(l->dom);
      auto x = under(a, l->body, 0);
      return {true, s_.arrow(a, x)};
    }
    const auto& ap = *t->as<node::Ap>();
    auto fun = as_comp(infer(ctx, ap.fun, child(0)), child(0));
    auto a = s_.fresh();
    auto x = s_.fresh();
    if (s_.kind(fun) != Solver::K::Meta && s_.kind(fun) != Solver::K::Arrow) {
      throw TypeError(child(0), "ap", "head has type " + s_.show(fun) +
                                          ", not an arrow");
    }
    expect(fun, s_.arrow(a, x), child(0), "ap", "head");
    auto arg = as_value(infer(ctx, ap.arg, child(1)));
    expect(arg, a, child(1), "ap", "argument");
    return {true, x};
  }

  Solver::Id as_comp(Cls c, const std::string& path) {
    if (c.computation) return c.type;
    auto k = s_.kind(c.type);
    if (k != Solver::K::U && k != Solver::K::Meta) {
      throw TypeError(path, "force", "expected a computation, found a value of type " +
                                         s_.show(c.type));
    }
    auto x = s_.fresh();
    s_.unify(c.type, s_.thunk(x));
    return x;
  }

  Solver::Id as_value(Cls c) { return c.computation ? s_.thunk(c.type) : c.type; }

  void expect(Solver::Id actual, Solver::Id wanted, const std::string& path,
              const std::string& rule, const std::string& what) {
    if (!s_.unify(actual, wanted)) {
      throw TypeError(path, rule, what + " has type " + s_.show(actual) +
                                      ", expected " + s_.show(wanted));
    }
  }

 private:
  Solver s_;
  const CostMonoid* monoid_;
};

}  // namespace

Classification infer(const Context& ctx, const TermPtr& t, const CostMonoid* monoid) {
  Checker checker(monoid);
  std::vector<Solver::Id> ids;
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    ids.push_back(checker.solver().from(*it));
  }
  auto cls = checker.infer(ids, t, "");
  auto& s = checker.solver();
  if (cls.computation) {
    if (auto x = s.comp_type(cls.type)) return Classification::computation(*x);
  } else if (auto a = s.value_type(cls.type)) {
    return Classification::value(*a);
  }
  throw TypeError("", "ambiguous",
                  "type " + s.show(cls.type) + " is not determined by the term");
}

void check_program(const TermPtr& t, const CompType& expected,
                   const CostMonoid* monoid) {
  if (!t->closed()) {
    throw TypeError("", "closed", "program has free variables");
  }
  Checker checker(monoid);
  std::vector<Solver::Id> ctx;
  auto cls = checker.infer(ctx, t, "");
  auto& s = checker.solver();
  auto x = checker.as_comp(cls, "");
  auto want = s.from(expected);
  if (!s.unify(x, want)) {
    throw TypeError("", "program",
                    "has type " + s.show(x) + ", expected " + to_string(expected));
  }
}

bool has_type(const TermPtr& t, const CompType& expected, const CostMonoid* monoid) {
  try {
    check_program(t, expected, monoid);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace costpcf
