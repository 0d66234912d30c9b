#include "costpcf/machine.hpp"

#include "costpcf/syntax.hpp"

namespace costpcf {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::BindRet: return "bind-ret";
    case Rule::ApLam: return "ap-lam";
    case Rule::FixUnfold: return "fix";
    case Rule::IfzZero: return "ifz-zero";
    case Rule::IfzSucc: return "ifz-succ";
    case Rule::Step: return "step";
  }
  return "?";
}

namespace {

// Evaluation context frame: the hole is the head of a bind or the function
// position of an ap.
struct Frame {
  const Term* parent;
};

[[noreturn]] void stuck(const TermPtr& t) {
  throw StuckError("no transition applies to " + print(t));
}

}  // namespace

StepResult out(const TermPtr& e, const CostModel& model) {
  std::vector<Frame> frames;
  TermPtr cur = e;
  machine::Next next{model.zero(), nullptr, Rule::Step};

  while (!next.term) {
    if (const auto* b = cur->as<node::Bind>()) {
      if (const auto* r = b->head->as<node::Ret>()) {
        next = {model.zero(), subst(b->cont, r->value), Rule::BindRet};
      } else {
        frames.push_back({cur.get()});
        cur = b->head;
      }
    } else if (const auto* a = cur->as<node::Ap>()) {
      if (const auto* l = a->fun->as<node::Lam>()) {
        next = {model.zero(), subst(l->body, a->arg), Rule::ApLam};
      } else {
        frames.push_back({cur.get()});
        cur = a->fun;
      }
    } else if (const auto* f = cur->as<node::Fix>()) {
      next = {model.zero(), subst(f->body, cur), Rule::FixUnfold};
    } else if (const auto* i = cur->as<node::Ifz>()) {
      if (i->scrut->is<node::Zero>()) {
        next = {model.zero(), i->zcase, Rule::IfzZero};
      } else if (const auto* s = i->scrut->as<node::Succ>()) {
        next = {model.zero(), subst(i->scase, s->pred), Rule::IfzSucc};
      } else {
        stuck(e);
      }
    } else if (const auto* st = cur->as<node::Step>()) {
      next = {model.seal(st->cost), st->body, Rule::Step};
    } else if ((cur->is<node::Ret>() || cur->is<node::Lam>()) && frames.empty()) {
      return machine::Terminal{};
    } else {
      stuck(e);
    }
  }

  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    if (const auto* b = it->parent->as<node::Bind>()) {
      next.term = mk::bind(std::move(next.term), b->cont);
    } else {
      next.term = mk::ap(std::move(next.term), it->parent->as<node::Ap>()->arg);
    }
  }
  return next;
}

Trace trace(const TermPtr& e, std::uint64_t fuel, const CostModel& model) {
  Trace t{e, {}, model.zero(), false};
  TermPtr cur = e;
  while (true) {
    auto r = out(cur, model);
    if (std::holds_alternative<machine::Terminal>(r)) {
      t.terminal = true;
      return t;
    }
    if (t.steps.size() >= fuel) return t;
    auto& n = std::get<machine::Next>(r);
    t.total = model.add(t.total, n.cost);
    cur = n.term;
    t.steps.push_back({std::move(n.cost), std::move(n.term), n.rule});
  }
}

// Same transitions as iterating `out`, but the evaluation context is kept as
// an explicit stack instead of being re-plugged after every step, so each
// transition costs O(1) beyond substitution.
Run run(const TermPtr& e, std::uint64_t fuel, const CostModel& model) {
  struct Pending {
    bool bind;
    TermPtr other;  // continuation or argument
  };
  std::vector<Pending> stack;
  Run result{std::nullopt, model.zero(), 0};
  TermPtr cur = e;
  auto plugged = [&] {
    TermPtr t = cur;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      t = it->bind ? mk::bind(t, it->other) : mk::ap(t, it->other);
    }
    return t;
  };
  while (true) {
    if (const auto* b = cur->as<node::Bind>()) {
      stack.push_back({true, b->cont});
      cur = b->head;
      continue;
    }
    if (const auto* a = cur->as<node::Ap>()) {
      stack.push_back({false, a->arg});
      cur = a->fun;
      continue;
    }
    const bool value_form = cur->is<node::Ret>() || cur->is<node::Lam>();
    if (value_form && stack.empty()) {
      result.terminal = cur;
      return result;
    }
    if (result.steps >= fuel) return result;

    if (const auto* r = cur->as<node::Ret>()) {
      if (!stack.back().bind) stuck(plugged());
      cur = subst(stack.back().other, r->value);
      stack.pop_back();
    } else if (const auto* l = cur->as<node::Lam>()) {
      if (stack.back().bind) stuck(plugged());
      cur = subst(l->body, stack.back().other);
      stack.pop_back();
    } else if (const auto* f = cur->as<node::Fix>()) {
      cur = subst(f->body, cur);
    } else if (const auto* i = cur->as<node::Ifz>()) {
      if (i->scrut->is<node::Zero>()) {
        cur = i->zcase;
      } else if (const auto* sc = i->scrut->as<node::Succ>()) {
        cur = subst(i->scase, sc->pred);
      } else {
        stuck(plugged());
      }
    } else if (const auto* st = cur->as<node::Step>()) {
      result.total = model.add(result.total, model.seal(st->cost));
      cur = st->body;
    } else {
      stuck(plugged());
    }
    ++result.steps;
  }
}

CostedOutcome eval(const TermPtr& e, const TermPtr& v, std::uint64_t fuel,
                   const CostModel& model) {
  auto r = run(e, fuel, model);
  if (!r.terminal) return outcome::Exhausted{fuel};
  if (equal(*r.terminal, v)) return outcome::Defined{r.total};
  return outcome::Mismatch{*r.terminal};
}

CostedOutcome profile(const TermPtr& e, std::uint64_t fuel, const CostModel& model) {
  static const TermPtr target = mk::ret(mk::triv());
  return eval(e, target, fuel, model);
}

bool same_outcome(const CostedOutcome& a, const CostedOutcome& b,
                  const CostModel& model) {
  if (a.index() != b.index()) return false;
  if (const auto* da = std::get_if<outcome::Defined>(&a)) {
    return model.equal(da->cost, std::get<outcome::Defined>(b).cost);
  }
  if (const auto* ma = std::get_if<outcome::Mismatch>(&a)) {
    return equal(ma->reached, std::get<outcome::Mismatch>(b).reached);
  }
  return true;
}

}  // namespace costpcf
