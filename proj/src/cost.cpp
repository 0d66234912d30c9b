#include "costpcf/cost.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace costpcf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_natural(std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw CostError("malformed natural cost literal '" + std::string(text) +
                    "'");
  }
  return value;
}

// Parses "<open> n1, ..., nk <close>".
std::vector<std::uint64_t> parse_bracketed(std::string_view text, char open,
                                           char close) {
  text = trim(text);
  if (text.size() < 2 || text.front() != open || text.back() != close) {
    throw CostError("expected bracketed cost literal, got '" +
                    std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_natural(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string print_bracketed(const Cost& c, char open, char close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < c.units.size(); ++i) {
    if (i) os << ',';
    os << c.units[i];
  }
  os << close;
  return os.str();
}

class NatMonoid final : public CostMonoid {
 public:
  std::string name() const override { return "nat"; }
  Cost zero() const override { return Cost{{0}}; }
  Cost add(const Cost& a, const Cost& b) const override {
    return Cost{{a.units.at(0) + b.units.at(0)}};
  }
  bool contains(const Cost& c) const override { return c.units.size() == 1; }
  Cost parse(std::string_view text) const override {
    return Cost{{parse_natural(text)}};
  }
  std::string print(const Cost& c) const override {
    return std::to_string(c.units.at(0));
  }
  Cost from_nat(std::uint64_t n) const override { return Cost{{n}}; }
  Cost sample(std::mt19937_64& rng, std::uint64_t lo,
              std::uint64_t hi) const override {
    return Cost{{std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng)}};
  }
};

// Componentwise addition on N^k; a scalar literal charges resource 0.
class VectorMonoid final : public CostMonoid {
 public:
  explicit VectorMonoid(std::size_t k) : k_(k) {}

  std::string name() const override { return "vec:" + std::to_string(k_); }
  Cost zero() const override { return Cost{std::vector<std::uint64_t>(k_, 0)}; }
  Cost add(const Cost& a, const Cost& b) const override {
    if (a.units.size() != k_ || b.units.size() != k_) {
      throw CostError("dimension mismatch in " + name() + " addition");
    }
    Cost out = a;
    for (std::size_t i = 0; i < k_; ++i) out.units[i] += b.units[i];
    return out;
  }
  bool contains(const Cost& c) const override { return c.units.size() == k_; }
  Cost parse(std::string_view text) const override {
    auto t = trim(text);
    if (!t.empty() && t.front() != '[') return from_nat(parse_natural(t));
    Cost c{parse_bracketed(t, '[', ']')};
    if (!contains(c)) {
      throw CostError("expected " + std::to_string(k_) +
                      " components in cost literal '" + std::string(t) + "'");
    }
    return c;
  }
  std::string print(const Cost& c) const override {
    return print_bracketed(c, '[', ']');
  }
  Cost from_nat(std::uint64_t n) const override {
    Cost c = zero();
    c.units[0] = n;
    return c;
  }
  Cost sample(std::mt19937_64& rng, std::uint64_t lo,
              std::uint64_t hi) const override {
    Cost c = zero();
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    for (auto& u : c.units) u = dist(rng);
    return c;
  }

 private:
  std::size_t k_;
};

// Free monoid over the naturals: concatenation of words.
class WordMonoid final : public CostMonoid {
 public:
  std::string name() const override { return "word"; }
  Cost zero() const override { return Cost{}; }
  Cost add(const Cost& a, const Cost& b) const override {
    Cost out = a;
    out.units.insert(out.units.end(), b.units.begin(), b.units.end());
    return out;
  }
  bool contains(const Cost&) const override { return true; }
  Cost parse(std::string_view text) const override {
    auto t = trim(text);
    if (!t.empty() && t.front() != '{') return from_nat(parse_natural(t));
    return Cost{parse_bracketed(t, '{', '}')};
  }
  std::string print(const Cost& c) const override {
    return print_bracketed(c, '{', '}');
  }
  Cost from_nat(std::uint64_t n) const override {
    return Cost{std::vector<std::uint64_t>(n, 1)};
  }
  Cost sample(std::mt19937_64& rng, std::uint64_t lo,
              std::uint64_t hi) const override {
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    Cost c;
    auto len = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < len; ++i) c.units.push_back(dist(rng));
    return c;
  }
};

}  // namespace

MonoidPtr nat_monoid() {
  static const MonoidPtr instance = std::make_shared<NatMonoid>();
  return instance;
}

MonoidPtr vector_monoid(std::size_t k) {
  if (k == 0) throw CostError("vec monoid needs at least one component");
  return std::make_shared<VectorMonoid>(k);
}

MonoidPtr word_monoid() {
  static const MonoidPtr instance = std::make_shared<WordMonoid>();
  return instance;
}

MonoidPtr make_monoid(std::string_view name) {
  if (name == "nat") return nat_monoid();
  if (name == "word") return word_monoid();
  if (name.starts_with("vec:")) {
    std::size_t k = 0;
    auto digits = name.substr(4);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (!digits.empty() && ec == std::errc{} &&
        ptr == digits.data() + digits.size() && k > 0) {
      return vector_monoid(k);
    }
  }
  throw CostError("unknown cost monoid '" + std::string(name) + "'");
}

std::vector<MonoidPtr> monoid_instances() {
  return {nat_monoid(), vector_monoid(2), word_monoid()};
}

std::string_view to_string(Phase p) {
  return p == Phase::Intensional ? "int" : "ext";
}

Phase parse_phase(std::string_view text) {
  if (text == "int" || text == "intensional") return Phase::Intensional;
  if (text == "ext" || text == "extensional") return Phase::Extensional;
  throw CostError("unknown phase '" + std::string(text) + "'");
}

const Cost& SealedCost::cost() const {
  if (!cost_) throw CostError("cost is sealed at the extensional phase");
  return *cost_;
}

SealedCost seal(Cost c, Phase phase) {
  if (phase == Phase::Extensional) return SealedCost{};
  return SealedCost{std::move(c)};
}

SealedCost sealed_zero(const CostMonoid& m, Phase phase) {
  return seal(m.zero(), phase);
}

SealedCost add(const CostMonoid& m, const SealedCost& a, const SealedCost& b) {
  if (a.is_sealed() || b.is_sealed()) return SealedCost{};
  return SealedCost{m.add(a.cost(), b.cost())};
}

SealedCost restrict(const SealedCost&) { return SealedCost{}; }

bool equal(const CostMonoid& m, const SealedCost& a, const SealedCost& b) {
  if (a.is_sealed() || b.is_sealed()) return a.is_sealed() && b.is_sealed();
  return m.eq(a.cost(), b.cost());
}

std::string print(const CostMonoid& m, const SealedCost& c) {
  return c.is_sealed() ? "*" : m.print(c.cost());
}

}  // namespace costpcf
