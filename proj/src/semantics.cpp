#include "costpcf/semantics.hpp"

#include <stdexcept>
#include <vector>

namespace costpcf {

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

Delay make(delay::Done n) {
  return Delay(std::make_shared<const Delay::Node>(Delay::Node{std::move(n)}));
}
Delay make(delay::Later n) {
  return Delay(std::make_shared<const Delay::Node>(Delay::Node{std::move(n)}));
}
Delay make(delay::Charged n) {
  return Delay(std::make_shared<const Delay::Node>(Delay::Node{std::move(n)}));
}
Delay make(delay::Bound n) {
  return Delay(std::make_shared<const Delay::Node>(Delay::Node{std::move(n)}));
}

}  // namespace

SemValue SemValue::thunk(SemComp c) {
  return SemValue(sem::Thunk{std::make_shared<const SemComp>(std::move(c))});
}

bool ground_equal(const SemValue& a, const SemValue& b) {
  if (!a.is_ground() || !b.is_ground()) {
    throw std::logic_error("semantic equality is only decided at ground types");
  }
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.as<sem::Bool>()) return x->value == b.as<sem::Bool>()->value;
  if (const auto* x = a.as<sem::Num>()) return x->value == b.as<sem::Num>()->value;
  return true;
}

std::string to_string(const SemValue& v) {
  return std::visit(overloaded{
                        [](const sem::Triv&) -> std::string { return "triv"; },
                        [](const sem::Bool& b) -> std::string { return b.value ? "yes" : "no"; },
                        [](const sem::Num& n) { return std::to_string(n.value); },
                        [](const sem::Thunk&) -> std::string { return "<thunk>"; },
                    },
                    v.node());
}

Delay done(SealedCost c, SemValue v) { return make(delay::Done{std::move(c), std::move(v)}); }

Delay later(std::function<Delay()> next) { return make(delay::Later{std::move(next)}); }

Delay bottom() {
  static const Delay b = later([] { return bottom(); });
  return b;
}

Delay eta(const CostModel& m, SemValue a) { return done(m.zero(), std::move(a)); }

Delay charge(const CostModel& m, const SealedCost& c, const Delay& d) {
  if (const auto* x = std::get_if<delay::Done>(&d.node().v)) {
    return done(m.add(c, x->cost), x->value);
  }
  if (const auto* x = std::get_if<delay::Charged>(&d.node().v)) {
    return make(delay::Charged{m.add(c, x->cost), x->inner});
  }
  return make(delay::Charged{c, d});
}

Delay bindT(const Delay& d, std::function<Delay(const SemValue&)> k) {
  return make(delay::Bound{d, std::move(k)});
}

Observation observe(const CostModel& m, const Delay& d, std::uint64_t fuel) {
  SealedCost total = m.zero();
  std::vector<const std::function<Delay(const SemValue&)>*> conts;
  // Keeps every node on the continuation stack alive while it is pending.
  std::vector<Delay> pinned;
  Delay cur = d;
  std::uint64_t left = fuel;
  while (true) {
    const auto& n = cur.node().v;
    if (const auto* x = std::get_if<delay::Done>(&n)) {
      total = m.add(total, x->cost);
      if (conts.empty()) return observation::Defined{total, x->value};
      const auto* k = conts.back();
      conts.pop_back();
      Delay next = (*k)(x->value);
      pinned.pop_back();
      cur = std::move(next);
    } else if (const auto* x = std::get_if<delay::Charged>(&n)) {
      total = m.add(total, x->cost);
      Delay next = x->inner;
      cur = std::move(next);
    } else if (const auto* x = std::get_if<delay::Bound>(&n)) {
      conts.push_back(&x->cont);
      pinned.push_back(cur);
      Delay next = x->head;
      cur = std::move(next);
    } else {
      if (left == 0) return observation::Exhausted{fuel};
      --left;
      Delay next = std::get<delay::Later>(n).next();
      cur = std::move(next);
    }
  }
}

bool same_observation(const CostModel& m, const Observation& a, const Observation& b) {
  if (a.index() != b.index()) return false;
  const auto* da = std::get_if<observation::Defined>(&a);
  if (!da) return true;
  const auto& db = std::get<observation::Defined>(b);
  return m.equal(da->cost, db.cost) && ground_equal(da->value, db.value);
}

Delay to_delay(const CostModel& m, const SemComp& c) {
  return std::visit(
      overloaded{
          [](const sem::FComp& f) { return f.delay; },
          [](const sem::FunComp&) -> Delay {
            throw std::logic_error("a function computation has no underlying delay");
          },
          [&](const sem::Deferred& d) {
            auto next = d.next;
            return charge(m, d.cost, later([m, next] { return to_delay(m, next()); }));
          },
          [&](const sem::Sequenced& s) {
            auto cont = s.cont;
            return bindT(s.head, [m, cont](const SemValue& a) { return to_delay(m, cont(a)); });
          },
      },
      c.node());
}

SemComp apply(const CostModel& m, const SemComp& f, const SemValue& a) {
  return std::visit(
      overloaded{
          [](const sem::FComp&) -> SemComp {
            throw std::logic_error("cannot apply a computation of type F");
          },
          [&](const sem::FunComp& fn) { return fn.fn(a); },
          [&](const sem::Deferred& d) -> SemComp {
            auto next = d.next;
            return sem::Deferred{d.cost, [m, next, a] { return apply(m, next(), a); }};
          },
          [&](const sem::Sequenced& s) -> SemComp {
            auto cont = s.cont;
            return sem::Sequenced{s.head,
                                  [m, cont, a](const SemValue& v) { return apply(m, cont(v), a); }};
          },
      },
      f.node());
}

SemComp charge(const CostModel& m, const SealedCost& c, const SemComp& x) {
  return std::visit(
      overloaded{
          [&](const sem::FComp& f) -> SemComp { return sem::FComp{charge(m, c, f.delay)}; },
          [&](const sem::FunComp& fn) -> SemComp {
            auto f = fn.fn;
            return sem::FunComp{[m, c, f](const SemValue& a) { return charge(m, c, f(a)); }};
          },
          [&](const sem::Deferred& d) -> SemComp {
            return sem::Deferred{m.add(c, d.cost), d.next};
          },
          [&](const sem::Sequenced& s) -> SemComp {
            return sem::Sequenced{charge(m, c, s.head), s.cont};
          },
      },
      x.node());
}

SemComp sequence(const Delay& d, std::function<SemComp(const SemValue&)> k) {
  return sem::Sequenced{d, std::move(k)};
}

}  // namespace costpcf
