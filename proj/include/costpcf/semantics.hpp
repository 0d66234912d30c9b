#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "costpcf/cost.hpp"

namespace costpcf {

class SemComp;

namespace sem {
struct Triv {};
struct Bool { bool value; };
struct Num { std::uint64_t value; };
struct Thunk { std::shared_ptr<const SemComp> comp; };
}  // namespace sem

/// Denotation of a value type: 1, 2, N, or a suspended computation.
class SemValue {
 public:
  using Node = std::variant<sem::Triv, sem::Bool, sem::Num, sem::Thunk>;

  static SemValue triv() { return SemValue(sem::Triv{}); }
  static SemValue boolean(bool b) { return SemValue(sem::Bool{b}); }
  static SemValue num(std::uint64_t n) { return SemValue(sem::Num{n}); }
  static SemValue thunk(SemComp c);

  const Node& node() const { return node_; }
  template <class T> const T* as() const { return std::get_if<T>(&node_); }
  bool is_ground() const { return !std::holds_alternative<sem::Thunk>(node_); }

 private:
  explicit SemValue(Node n) : node_(std::move(n)) {}
  Node node_;
};

/// Equality at ground types. Throws std::logic_error for thunks.
bool ground_equal(const SemValue& a, const SemValue& b);
/// "triv", "yes"/"no", decimal, or "<thunk>".
std::string to_string(const SemValue& v);

/// A possibly non-terminating computation that, if it finishes, yields one
/// accumulated cost and one value. Immutable and shareable.
class Delay {
 public:
  struct Node;
  explicit Delay(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const Node& node() const { return *node_; }

 private:
  std::shared_ptr<const Node> node_;
};

namespace delay {
struct Done {
  SealedCost cost;
  SemValue value;
};
/// One guarded unfolding; forcing it consumes one unit of fuel.
struct Later {
  std::function<Delay()> next;
};
/// `cost` charged ahead of `inner`. A pending left summand, not a separate
/// observable stage.
struct Charged {
  SealedCost cost;
  Delay inner;
};
struct Bound {
  Delay head;
  std::function<Delay(const SemValue&)> cont;
};
}  // namespace delay

struct Delay::Node {
  std::variant<delay::Done, delay::Later, delay::Charged, delay::Bound> v;
};

Delay done(SealedCost c, SemValue v);
Delay later(std::function<Delay()> next);
/// The Delay that is Later forever.
Delay bottom();

/// Unit: Done(0, a).
Delay eta(const CostModel& m, SemValue a);
/// Adds `c` on the left of the eventual cost. Definedness is unchanged.
Delay charge(const CostModel& m, const SealedCost& c, const Delay& d);
/// Sequencing; the cost of `d` precedes the cost of the continuation.
Delay bindT(const Delay& d, std::function<Delay(const SemValue&)> k);

namespace observation {
struct Defined {
  SealedCost cost;
  SemValue value;
};
struct Exhausted {
  std::uint64_t fuel;
};
}  // namespace observation

using Observation = std::variant<observation::Defined, observation::Exhausted>;

/// Runs `d`, unwrapping at most `fuel` Laters. Once Defined at some fuel, the
/// same cost and value are observed at every larger fuel.
Observation observe(const CostModel& m, const Delay& d, std::uint64_t fuel);

/// Same definedness, equal costs, and ground-equal values.
bool same_observation(const CostModel& m, const Observation& a, const Observation& b);

namespace sem {
/// Free algebra carrier: the denotation of F(A).
struct FComp { Delay delay; };
/// Pointwise algebra: the denotation of A ⇀ X.
struct FunComp { std::function<SemComp(const SemValue&)> fn; };
/// Algebra structure applied lazily at an arbitrary computation type:
/// `cost` charged ahead of one guarded unfolding of `next`.
struct Deferred {
  SealedCost cost;
  std::function<SemComp()> next;
};
/// Sequencing into an arbitrary computation type.
struct Sequenced {
  Delay head;
  std::function<SemComp(const SemValue&)> cont;
};
}  // namespace sem

/// Denotation of a computation type: an element of a T-algebra.
class SemComp {
 public:
  using Node = std::variant<sem::FComp, sem::FunComp, sem::Deferred, sem::Sequenced>;

  SemComp(sem::FComp c) : node_(std::move(c)) {}
  SemComp(sem::FunComp c) : node_(std::move(c)) {}
  SemComp(sem::Deferred c) : node_(std::move(c)) {}
  SemComp(sem::Sequenced c) : node_(std::move(c)) {}

  const Node& node() const { return node_; }

 private:
  Node node_;
};

/// The underlying Delay of a computation of type F(A).
Delay to_delay(const CostModel& m, const SemComp& c);
/// Application of a computation of type A ⇀ X.
SemComp apply(const CostModel& m, const SemComp& f, const SemValue& a);
/// Derived cost algebra action c ⊞ x.
SemComp charge(const CostModel& m, const SealedCost& c, const SemComp& x);
/// f♯(d): sequences `d` into the algebra of `k`'s results.
SemComp sequence(const Delay& d, std::function<SemComp(const SemValue&)> k);

}  // namespace costpcf
