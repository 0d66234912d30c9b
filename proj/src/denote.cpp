#include "costpcf/denote.hpp"

#include <stdexcept>

namespace costpcf {

Env Env::from(const std::vector<SemValue>& values) {
  Env env;
  for (auto it = values.rbegin(); it != values.rend(); ++it) env = env.extend(*it);
  return env;
}

Env Env::extend(SemValue v) const {
  Env out;
  out.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
  out.size_ = size_ + 1;
  return out;
}

const SemValue& Env::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("environment index out of range");
  const Cell* c = head_.get();
  while (i-- > 0) c = c->rest.get();
  return c->value;
}

namespace {

bool is_value_form(const TermPtr& t) {
  return t->is<node::Var>() || t->is<node::Triv>() || t->is<node::Yes>() ||
         t->is<node::No>() || t->is<node::Zero>() || t->is<node::Succ>();
}

// fix(F) = F(thunk of one guarded unfolding of fix(F)).
SemComp fixed_point(const TermPtr& body, const Env& env, const CostModel& m) {
  SemValue self = SemValue::thunk(sem::Deferred{
      m.zero(), [body, env, m] { return fixed_point(body, env, m); }});
  return denote_comp(body, env.extend(std::move(self)), m);
}

}  // namespace

SemValue denote_value(const TermPtr& t, const Env& env, const CostModel& m) {
  if (const auto* v = t->as<node::Var>()) return env.at(v->index);
  if (t->is<node::Triv>()) return SemValue::triv();
  if (t->is<node::Yes>()) return SemValue::boolean(true);
  if (t->is<node::No>()) return SemValue::boolean(false);
  if (t->is<node::Zero>()) return SemValue::num(0);
  if (const auto* s = t->as<node::Succ>()) {
    auto pred = denote_value(s->pred, env, m);
    const auto* n = pred.as<sem::Num>();
    if (!n) throw std::logic_error("succ of a non-numeral");
    return SemValue::num(n->value + 1);
  }
  return SemValue::thunk(denote_comp(t, env, m));
}

SemComp denote_comp(const TermPtr& t, const Env& env, const CostModel& m) {
  if (const auto* v = t->as<node::Var>()) {
    const auto* th = env.at(v->index).as<sem::Thunk>();
    if (!th) throw std::logic_error("forcing a non-thunk value");
    return *th->comp;
  }
  if (const auto* r = t->as<node::Ret>()) {
    return sem::FComp{eta(m, denote_value(r->value, env, m))};
  }
  if (const auto* s = t->as<node::Step>()) {
    return charge(m, m.seal(s->cost), denote_comp(s->body, env, m));
  }
  if (const auto* b = t->as<node::Bind>()) {
    auto cont = b->cont;
    return sequence(to_delay(m, denote_comp(b->head, env, m)),
                    [cont, env, m](const SemValue& a) {
                      return denote_comp(cont, env.extend(a), m);
                    });
  }
  if (const auto* i = t->as<node::Ifz>()) {
    auto n = denote_value(i->scrut, env, m);
    const auto* num = n.as<sem::Num>();
    if (!num) throw std::logic_error("ifz on a non-numeral");
    if (num->value == 0) return denote_comp(i->zcase, env, m);
    return denote_comp(i->scase, env.extend(SemValue::num(num->value - 1)), m);
  }
  if (const auto* f = t->as<node::Fix>()) return fixed_point(f->body, env, m);
  if (const auto* l = t->as<node::Lam>()) {
    auto body = l->body;
    return sem::FunComp{[body, env, m](const SemValue& a) {
      return denote_comp(body, env.extend(a), m);
    }};
  }
  if (const auto* a = t->as<node::Ap>()) {
    return apply(m, denote_comp(a->fun, env, m), denote_value(a->arg, env, m));
  }
  throw std::logic_error("value term used as a computation");
}

Denotation denote(const Context& ctx, const TermPtr& t, const Env& env,
                  const CostModel& m) {
  if (env.size() != ctx.size()) {
    throw std::invalid_argument("environment does not match the context");
  }
  auto cls = infer(ctx, t, m.monoid.get());
  if (cls.is_computation()) return denote_comp(t, env, m);
  return denote_value(t, env, m);
}

Observation observe_program(const TermPtr& t, std::uint64_t fuel, const CostModel& m) {
  return observe(m, to_delay(m, denote_comp(t, Env{}, m)), fuel);
}

SemValue ground_value(const TermPtr& t) {
  if (!t->closed() || !is_value_form(t)) {
    throw std::invalid_argument("not a closed ground value");
  }
  return denote_value(t, Env{}, CostModel{});
}

}  // namespace costpcf
