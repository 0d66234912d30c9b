#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace costpcf {

/// Raw element of a cost monoid. Every registered monoid uses a sequence of
/// machine naturals as its carrier: a singleton for `nat`, a fixed-width
/// vector for `vec:k`, and an arbitrary-length word for `word`.
struct Cost {
  std::vector<std::uint64_t> units;

  friend bool operator==(const Cost&, const Cost&) = default;
};

class CostError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A monoid (C, +, 0) with decidable equality and a literal syntax.
///
/// Only the monoid laws are assumed; `word` is deliberately non-commutative
/// so that tests catch any place where the order of addition is swapped.
class CostMonoid {
 public:
  virtual ~CostMonoid() = default;

  /// Registry name, e.g. "nat" or "vec:3".
  virtual std::string name() const = 0;
  virtual Cost zero() const = 0;
  virtual Cost add(const Cost& a, const Cost& b) const = 0;
  virtual bool eq(const Cost& a, const Cost& b) const { return a == b; }
  /// Whether `c` is a well-formed element of this carrier.
  virtual bool contains(const Cost& c) const = 0;

  /// Parses a literal; throws CostError on malformed input.
  virtual Cost parse(std::string_view text) const = 0;
  virtual std::string print(const Cost& c) const = 0;

  /// Image of n under the canonical map from (N, +, 0).
  virtual Cost from_nat(std::uint64_t n) const = 0;
  /// Random element whose scalar entries lie in [lo, hi].
  virtual Cost sample(std::mt19937_64& rng, std::uint64_t lo,
                      std::uint64_t hi) const = 0;
};

using MonoidPtr = std::shared_ptr<const CostMonoid>;

MonoidPtr nat_monoid();
MonoidPtr vector_monoid(std::size_t k);
MonoidPtr word_monoid();

/// Resolves "nat", "vec:<k>" or "word". Throws CostError for unknown names.
MonoidPtr make_monoid(std::string_view name);

/// One representative of every monoid family, used by law tests.
std::vector<MonoidPtr> monoid_instances();

/// Evaluation phase. Under Extensional the phase proposition holds and every
/// cost is sealed away.
enum class Phase { Intensional, Extensional };

std::string_view to_string(Phase p);
/// Accepts "int"/"intensional" and "ext"/"extensional".
Phase parse_phase(std::string_view text);

/// A cost as seen from some phase: either a visible cost or the sealed point.
class SealedCost {
 public:
  /// The sealed point; the only SealedCost observable at Extensional phase.
  SealedCost() = default;
  explicit SealedCost(Cost c) : cost_(std::move(c)) {}

  bool is_sealed() const { return !cost_.has_value(); }
  /// Underlying cost; throws CostError when sealed.
  const Cost& cost() const;

 private:
  std::optional<Cost> cost_;
};

SealedCost seal(Cost c, Phase phase);
SealedCost sealed_zero(const CostMonoid& m, Phase phase);

/// Monoid addition through the seal. The sealed point absorbs.
SealedCost add(const CostMonoid& m, const SealedCost& a, const SealedCost& b);

/// Re-observes a cost at the Extensional phase. Always the sealed point.
SealedCost restrict(const SealedCost& c);

bool equal(const CostMonoid& m, const SealedCost& a, const SealedCost& b);

/// "*" for the sealed point, otherwise the monoid literal.
std::string print(const CostMonoid& m, const SealedCost& c);

/// The active monoid and phase, threaded explicitly through evaluation.
struct CostModel {
  MonoidPtr monoid = nat_monoid();
  Phase phase = Phase::Intensional;

  SealedCost zero() const { return sealed_zero(*monoid, phase); }
  SealedCost seal(const Cost& c) const { return costpcf::seal(c, phase); }
  SealedCost add(const SealedCost& a, const SealedCost& b) const {
    return costpcf::add(*monoid, a, b);
  }
  bool equal(const SealedCost& a, const SealedCost& b) const {
    return costpcf::equal(*monoid, a, b);
  }
  std::string print(const SealedCost& c) const { return costpcf::print(*monoid, c); }
};

}  // namespace costpcf
