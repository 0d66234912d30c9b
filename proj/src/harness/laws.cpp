#include <functional>
#include <random>
#include <string>

#include "costpcf/harness/checks.hpp"
#include "costpcf/harness/delay_gen.hpp"
#include "costpcf/harness/generator.hpp"

namespace costpcf::harness {

namespace {

// Both sides of an equation. The right-hand observation is read with
// `rhs_prefix` added on the left of its cost.
struct Sides {
  Delay lhs;
  Delay rhs;
  SealedCost rhs_prefix;
};

using Law = std::function<Sides(const DelayGen&, std::mt19937_64&)>;

Delay join(const CostModel& m, const Delay& dd) {
  return bindT(dd, [m](const SemValue& t) {
    return to_delay(m, *t.as<sem::Thunk>()->comp);
  });
}

SemValue boxed(Delay d) { return SemValue::thunk(sem::FComp{std::move(d)}); }

std::uint64_t num(const SemValue& v) { return v.as<sem::Num>()->value; }

std::vector<std::pair<std::string, Law>> laws() {
  std::vector<std::pair<std::string, Law>> out;
  auto add = [&](std::string name, Law law) { out.emplace_back(std::move(name), std::move(law)); };
  const auto& z = [](const DelayGen& g) { return g.model().zero(); };

  add("left-unit", [z](const DelayGen& g, std::mt19937_64& r) {
    auto a = DelayGen::number(r);
    auto k = g.continuation(r());
    return Sides{bindT(eta(g.model(), a), k), k(a), z(g)};
  });
  add("right-unit", [z](const DelayGen& g, std::mt19937_64& r) {
    auto d = g.delay(r);
    auto m = g.model();
    return Sides{bindT(d, [m](const SemValue& v) { return eta(m, v); }), d, z(g)};
  });
  add("assoc", [z](const DelayGen& g, std::mt19937_64& r) {
    auto d = g.delay(r);
    auto k1 = g.continuation(r());
    auto k2 = g.continuation(r());
    return Sides{bindT(bindT(d, k1), k2),
                 bindT(d, [k1, k2](const SemValue& v) { return bindT(k1(v), k2); }), z(g)};
  });
  add("join-left-unit", [z](const DelayGen& g, std::mt19937_64& r) {
    auto d = g.delay(r);
    return Sides{join(g.model(), eta(g.model(), boxed(d))), d, z(g)};
  });
  add("join-right-unit", [z](const DelayGen& g, std::mt19937_64& r) {
    auto d = g.delay(r);
    auto m = g.model();
    auto mapped = bindT(d, [m](const SemValue& v) { return eta(m, boxed(eta(m, v))); });
    return Sides{join(m, mapped), d, z(g)};
  });
  add("join-assoc", [z](const DelayGen& g, std::mt19937_64& r) {
    auto m = g.model();
    LeafValue inner = [&g](std::mt19937_64& rr) { return boxed(g.delay(rr)); };
    LeafValue outer = [&g, inner](std::mt19937_64& rr) { return boxed(g.delay(rr, inner)); };
    auto ddd = g.delay(r, outer);
    auto mapped = bindT(ddd, [m](const SemValue& t) {
      return eta(m, boxed(join(m, to_delay(m, *t.as<sem::Thunk>()->comp))));
    });
    return Sides{join(m, join(m, ddd)), join(m, mapped), z(g)};
  });
  add("charge-unit", [z](const DelayGen& g, std::mt19937_64& r) {
    auto c = g.cost(r);
    auto a = DelayGen::number(r);
    return Sides{charge(g.model(), c, eta(g.model(), a)), done(c, a), z(g)};
  });
  add("charge-zero", [z](const DelayGen& g, std::mt19937_64& r) {
    auto d = g.delay(r);
    return Sides{charge(g.model(), g.model().zero(), d), d, z(g)};
  });
  add("charge-compose", [z](const DelayGen& g, std::mt19937_64& r) {
    const auto& m = g.model();
    auto c1 = g.cost(r);
    auto c2 = g.cost(r);
    auto d = g.delay(r);
    return Sides{charge(m, c1, charge(m, c2, d)), charge(m, m.add(c1, c2), d), z(g)};
  });
  add("charge-join", [z](const DelayGen& g, std::mt19937_64& r) {
    // τ commutes with the multiplication of the partiality monad.
    const auto& m = g.model();
    auto c = g.cost(r);
    LeafValue inner = [&g](std::mt19937_64& rr) { return boxed(g.delay(rr)); };
    auto dd = g.delay(r, inner);
    return Sides{charge(m, c, join(m, dd)), join(m, charge(m, c, dd)), z(g)};
  });
  add("cost-action", [](const DelayGen& g, std::mt19937_64& r) {
    auto c = g.cost(r);
    auto d = g.delay(r);
    return Sides{charge(g.model(), c, d), d, c};
  });
  add("cost-action-extension", [z](const DelayGen& g, std::mt19937_64& r) {
    const auto& m = g.model();
    auto c = g.cost(r);
    auto d = g.delay(r);
    auto k = g.continuation(r());
    // Free algebra and function algebra as targets of the extension.
    if (r() % 2 == 0) return Sides{bindT(charge(m, c, d), k), charge(m, c, bindT(d, k)), z(g)};
    auto seed = r();
    auto into = [&g, seed](const SemValue& v) -> SemComp {
      auto k2 = g.continuation(mix_seed(seed, num(v)));
      return sem::FunComp{[k2](const SemValue& a) { return SemComp(sem::FComp{k2(a)}); }};
    };
    auto a = DelayGen::number(r);
    auto lhs = apply(m, sequence(charge(m, c, d), into), a);
    auto rhs = apply(m, charge(m, c, sequence(d, into)), a);
    return Sides{to_delay(m, lhs), to_delay(m, rhs), z(g)};
  });
  add("cost-action-pointwise", [z](const DelayGen& g, std::mt19937_64& r) {
    const auto& m = g.model();
    auto c = g.cost(r);
    auto f = g.function(r);
    auto a = DelayGen::number(r);
    return Sides{to_delay(m, apply(m, charge(m, c, f), a)),
                 to_delay(m, charge(m, c, apply(m, f, a))), z(g)};
  });
  return out;
}

}  // namespace

CheckReport check_laws(std::size_t cases, const CheckOptions& opts) {
  const auto& m = opts.model;
  DelayGen gen(m);
  CheckReport report{"laws", 0, {}, std::nullopt, {}};
  const auto all = laws();
  for (std::size_t li = 0; li < all.size(); ++li) {
    const auto& [name, law] = all[li];
    for (std::size_t i = 0; i < cases; ++i) {
      const auto case_seed = mix_seed(opts.seed, (li << 32) | i);
      std::mt19937_64 rng(case_seed);
      auto sides = law(gen, rng);
      // Equal at every fuel, not only in the limit.
      for (std::uint64_t f : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2},
                              std::uint64_t{3}, std::uint64_t{5}, std::uint64_t{8}, opts.fuel}) {
        auto l = observe(m, sides.lhs, f);
        auto r = observe(m, sides.rhs, f);
        if (auto* d = std::get_if<observation::Defined>(&r)) d->cost = m.add(sides.rhs_prefix, d->cost);
        if (!same_observation(m, l, r)) {
          report.failures.push_back(Failure{report.cases, name, {"seed " + std::to_string(case_seed)},
                                            describe(m, l), describe(m, r), f});
          break;
        }
      }
      ++report.cases;
    }
    report.breakdown.emplace_back(name, cases);
  }
  return report;
}

}  // namespace costpcf::harness
