#include "costpcf/harness/generator.hpp"

#include <random>
#include <vector>

namespace costpcf::harness {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Slot {
  ValueType type;
  bool usable;
};

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  void push(ValueType t, bool usable = true) { slots_.push_back({std::move(t), usable}); }
  void pop() { slots_.pop_back(); }

  TermPtr comp(const CompType& x, std::size_t depth) {
    if (depth == 0) return base_comp(x);
    if (!cfg_.terminating && chance(cfg_.fix_probability)) return fix(x, depth);

    const bool returner = x.kind() == CompType::Kind::Returner;
    auto vars = usable_vars(ValueType::thunk(x));
    enum Choice { Ret, Step, Bind, Ifz, Ap, Force, Lam, Countdown };
    std::vector<std::pair<Choice, int>> menu = {{Step, 2}, {Bind, 3}, {Ifz, 2}, {Ap, 2}};
    if (returner) menu.push_back({Ret, 3});
    if (!returner) menu.push_back({Lam, 6});
    if (!vars.empty()) menu.push_back({Force, 3});
    if (returner && depth >= 2) menu.push_back({Countdown, 1});

    switch (pick(menu)) {
      case Ret:
        return mk::ret(value(x.value(), depth - 1));
      case Step:
        return mk::step(cost(), comp(x, depth - 1));
      case Bind: {
        auto a = small_type(depth);
        auto head = comp(CompType::returner(a), depth - 1);
        push(a);
        auto cont = comp(x, depth - 1);
        pop();
        return mk::bind(std::move(head), std::move(cont));
      }
      case Ifz: {
        auto scrut = value(ValueType::nat(), depth - 1);
        auto z = comp(x, depth - 1);
        push(ValueType::nat());
        auto s = comp(x, depth - 1);
        pop();
        return mk::ifz(std::move(scrut), std::move(z), std::move(s));
      }
      case Ap: {
        auto a = small_type(depth);
        auto fun = comp(CompType::arrow(a, x), depth - 1);
        return mk::ap(std::move(fun), value(a, depth - 1));
      }
      case Force:
        return mk::var(vars[uniform(vars.size())]);
      case Lam: {
        push(x.value());
        auto body = comp(x.codomain(), depth - 1);
        pop();
        return mk::lam(x.value(), std::move(body));
      }
      case Countdown:
        return countdown(x, depth);
    }
    return base_comp(x);
  }

  TermPtr value(const ValueType& a, std::size_t depth) {
    auto vars = usable_vars(a);
    if (!vars.empty() && chance(0.35)) return mk::var(vars[uniform(vars.size())]);
    switch (a.kind()) {
      case ValueType::Kind::Unit: return mk::triv();
      case ValueType::Kind::Ans: return chance(0.5) ? mk::yes() : mk::no();
      case ValueType::Kind::Nat:
        if (depth > 0 && chance(0.3)) return mk::succ(value(a, depth - 1));
        return mk::numeral(uniform(4));
      case ValueType::Kind::Thunk:
        return depth == 0 ? base_comp(a.comp()) : comp(a.comp(), depth - 1);
    }
    return mk::triv();
  }

  TermPtr base_comp(const CompType& x) {
    if (x.kind() == CompType::Kind::Arrow) {
      push(x.value());
      auto body = base_comp(x.codomain());
      pop();
      return mk::lam(x.value(), std::move(body));
    }
    return mk::ret(base_value(x.value()));
  }

 private:
  TermPtr base_value(const ValueType& a) {
    switch (a.kind()) {
      case ValueType::Kind::Unit: return mk::triv();
      case ValueType::Kind::Ans: return mk::yes();
      case ValueType::Kind::Nat: return mk::zero();
      case ValueType::Kind::Thunk: return base_comp(a.comp());
    }
    return mk::triv();
  }

  // Unrestricted recursion; the body usually refers to itself.
  TermPtr fix(const CompType& x, std::size_t depth) {
    push(ValueType::thunk(x));
    auto body = comp(x, depth - 1);
    pop();
    if (chance(0.5)) body = mk::step(cost(), std::move(body));
    return mk::fix(std::move(body));
  }

  // (fix f. λn. ifz n base (m. [step] bind (f m) r. tail)) k
  // The recursive thunk is only ever applied to the predecessor, so the
  // recursion depth is exactly k.
  TermPtr countdown(const CompType& x, std::size_t depth) {
    const auto self = ValueType::thunk(CompType::arrow(ValueType::nat(), x));
    push(self, false);
    push(ValueType::nat());
    auto base = comp(x, depth - 1);
    push(ValueType::nat());
    auto call = mk::ap(mk::var(2), mk::var(0));
    push(x.value());
    auto tail = comp(x, depth - 1);
    pop();
    pop();
    pop();
    pop();
    TermPtr rec = mk::bind(std::move(call), std::move(tail));
    if (chance(0.5)) rec = mk::step(cost(), std::move(rec));
    auto fn = mk::fix(mk::lam(ValueType::nat(),
                              mk::ifz(mk::var(0), std::move(base), std::move(rec))));
    return mk::ap(std::move(fn), mk::numeral(uniform(5)));
  }

  ValueType small_type(std::size_t depth) {
    if (depth >= 2 && chance(0.1)) {
      return ValueType::thunk(CompType::returner(chance(0.5) ? ValueType::nat()
                                                             : ValueType::unit()));
    }
    switch (uniform(3)) {
      case 0: return ValueType::unit();
      case 1: return ValueType::nat();
      default: return ValueType::ans();
    }
  }

  std::vector<std::size_t> usable_vars(const ValueType& t) const {
    std::vector<std::size_t> out;
    const auto n = slots_.size();
    for (std::size_t p = 0; p < n; ++p) {
      if (slots_[p].usable && slots_[p].type == t) out.push_back(n - 1 - p);
    }
    return out;
  }

  Cost cost() { return cfg_.monoid->sample(rng_, cfg_.step_cost_min, cfg_.step_cost_max); }

  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

  std::uint64_t uniform(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }

  template <class C>
  C pick(const std::vector<std::pair<C, int>>& menu) {
    int total = 0;
    for (const auto& [c, w] : menu) total += w;
    auto r = static_cast<int>(uniform(static_cast<std::uint64_t>(total)));
    for (const auto& [c, w] : menu) {
      if (r < w) return c;
      r -= w;
    }
    return menu.back().first;
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<Slot> slots_;
};

// A recursive thunk that is only ever forced says nothing about its own type,
// so a few draws are ambiguous (`fix x x` on its own). Those are redrawn from
// a derived seed until the result has a principal type equal to the target.
template <class Draw>
TermPtr draw_typed(const GenConfig& cfg, const Context& ctx, const Classification& want,
                   Draw draw) {
  constexpr std::uint64_t kAttempts = 64;
  for (std::uint64_t attempt = 0; attempt < kAttempts; ++attempt) {
    GenConfig c = cfg;
    if (attempt > 0) c.seed = mix_seed(cfg.seed, attempt);
    Generator g(c);
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) g.push(*it);
    auto t = draw(g);
    try {
      if (infer(ctx, t, cfg.monoid.get()) == want) return t;
    } catch (const TypeError&) {
    }
  }
  Generator g(cfg);
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) g.push(*it);
  if (want.is_computation()) return g.base_comp(want.comp_type());
  return g.value(want.value_type(), 0);
}

}  // namespace

TermPtr gen_term(const GenConfig& cfg) {
  return gen_open(cfg, {}, cfg.target);
}

TermPtr gen_open(const GenConfig& cfg, const Context& ctx, const CompType& target) {
  return draw_typed(cfg, ctx, Classification::computation(target),
                    [&](Generator& g) { return g.comp(target, cfg.max_depth); });
}

TermPtr gen_value(const GenConfig& cfg, const ValueType& type) {
  auto want = type.kind() == ValueType::Kind::Thunk ? Classification::computation(type.comp())
                                                     : Classification::value(type);
  return draw_typed(cfg, {}, want,
                    [&](Generator& g) { return g.value(type, cfg.max_depth); });
}

}  // namespace costpcf::harness
