#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "costpcf/semantics.hpp"

namespace costpcf::harness {

using Continuation = std::function<Delay(const SemValue&)>;
using LeafValue = std::function<SemValue(std::mt19937_64&)>;

/// Random Delay trees built from every node shape: immediate results,
/// guarded steps, pending charges, binds, and the occasional bottom.
class DelayGen {
 public:
  DelayGen(CostModel model, std::size_t max_depth = 4, std::uint64_t cost_hi = 5)
      : model_(std::move(model)), max_depth_(max_depth), cost_hi_(cost_hi) {}

  const CostModel& model() const { return model_; }

  SealedCost cost(std::mt19937_64& rng) const;
  /// Naturals in [0, 5].
  static SemValue number(std::mt19937_64& rng);

  Delay delay(std::mt19937_64& rng, const LeafValue& leaf) const;
  Delay delay(std::mt19937_64& rng) const { return delay(rng, number); }

  /// A deterministic continuation: the Delay returned for a value depends
  /// only on `seed` and that value. Only defined on naturals.
  Continuation continuation(std::uint64_t seed) const;

  /// A function computation nat ⇀ F nat, in any of the algebra shapes.
  SemComp function(std::mt19937_64& rng) const;

 private:
  Delay delay_at(std::mt19937_64& rng, const LeafValue& leaf, std::size_t depth) const;

  CostModel model_;
  std::size_t max_depth_;
  std::uint64_t cost_hi_;
};

}  // namespace costpcf::harness
