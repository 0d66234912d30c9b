#include "costpcf/harness/delay_gen.hpp"

#include <stdexcept>

#include "costpcf/harness/generator.hpp"

namespace costpcf::harness {

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

std::uint64_t key(const SemValue& v) {
  if (const auto* n = v.as<sem::Num>()) return n->value;
  throw std::logic_error("random continuations are only defined on naturals");
}

}  // namespace

SealedCost DelayGen::cost(std::mt19937_64& rng) const {
  return model_.seal(model_.monoid->sample(rng, 0, cost_hi_));
}

SemValue DelayGen::number(std::mt19937_64& rng) { return SemValue::num(uniform(rng, 6)); }

Delay DelayGen::delay(std::mt19937_64& rng, const LeafValue& leaf) const {
  return delay_at(rng, leaf, max_depth_);
}

Delay DelayGen::delay_at(std::mt19937_64& rng, const LeafValue& leaf,
                         std::size_t depth) const {
  if (depth == 0 || uniform(rng, 4) == 0) {
    if (uniform(rng, 25) == 0) return bottom();
    return done(cost(rng), leaf(rng));
  }
  switch (uniform(rng, 3)) {
    case 0: {
      auto inner = delay_at(rng, leaf, depth - 1);
      return later([inner] { return inner; });
    }
    case 1:
      return charge(model_, cost(rng), delay_at(rng, leaf, depth - 1));
    default: {
      // Bound heads produce naturals; the leaf generator only applies at
      // the end of the chain.
      auto head = delay_at(rng, number, depth - 1);
      auto seed = rng();
      auto self = *this;
      return bindT(head, [self, seed, leaf, depth](const SemValue& v) {
        std::mt19937_64 r(mix_seed(seed, key(v)));
        return self.delay_at(r, leaf, depth - 1);
      });
    }
  }
}

Continuation DelayGen::continuation(std::uint64_t seed) const {
  auto self = *this;
  return [self, seed](const SemValue& v) {
    std::mt19937_64 r(mix_seed(seed, key(v)));
    return self.delay(r);
  };
}

SemComp DelayGen::function(std::mt19937_64& rng) const {
  auto k = continuation(rng());
  SemComp f = sem::FunComp{[k](const SemValue& a) { return SemComp(sem::FComp{k(a)}); }};
  switch (uniform(rng, 4)) {
    case 0: return f;
    case 1: return charge(model_, cost(rng), f);
    case 2: return sem::Deferred{cost(rng), [f] { return f; }};
    default: {
      auto head = delay(rng);
      return sequence(head, [f](const SemValue&) { return f; });
    }
  }
}

}  // namespace costpcf::harness
