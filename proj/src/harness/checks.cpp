#include "costpcf/harness/checks.hpp"

#include <functional>
#include <optional>
#include <random>

#include "costpcf/denote.hpp"
#include "costpcf/harness/generator.hpp"
#include "costpcf/harness/minimize.hpp"
#include "costpcf/machine.hpp"
#include "costpcf/syntax.hpp"
#include "costpcf/typecheck.hpp"

namespace costpcf::harness {

namespace {

using CaseCheck = std::function<std::optional<Failure>(const TermPtr&)>;

std::string show(const CostModel& m, const TermPtr& t) { return print(t, *m.monoid); }

Failure failure(std::string property, std::vector<std::string> terms, std::string left,
                std::string right, std::uint64_t fuel) {
  return Failure{0, std::move(property), std::move(terms), std::move(left), std::move(right), fuel};
}

// Runs `one` over closed programs, recording failures and shrinking the first.
CheckReport run_cases(std::string name, const std::vector<TermPtr>& programs,
                      const CheckOptions& opts, const CaseCheck& one) {
  CheckReport report{std::move(name), 0, {}, std::nullopt, {}};
  for (std::size_t i = 0; i < programs.size(); ++i) {
    if (auto f = one(programs[i])) {
      f->case_index = i;
      report.failures.push_back(std::move(*f));
    }
    ++report.cases;
  }
  if (!report.failures.empty() && opts.minimize) {
    const auto& first = programs[report.failures.front().case_index];
    auto small = minimize(first, {}, [&](const TermPtr& t) { return one(t).has_value(); });
    report.minimized = show(opts.model, small);
  }
  return report;
}

bool same_step(const CostModel& m, const StepResult& a, const StepResult& b) {
  if (a.index() != b.index()) return false;
  const auto* na = std::get_if<machine::Next>(&a);
  if (!na) return true;
  const auto& nb = std::get<machine::Next>(b);
  return na->rule == nb.rule && m.equal(na->cost, nb.cost) && equal(na->term, nb.term);
}

std::string describe_step(const CostModel& m, const StepResult& r) {
  if (const auto* n = std::get_if<machine::Next>(&r)) {
    return std::string(to_string(n->rule)) + " " + m.print(n->cost) + " " + show(m, n->term);
  }
  return "terminal";
}

// A terminal state that is not `v`.
TermPtr other_terminal(const TermPtr& v) {
  if (const auto* r = v->as<node::Ret>()) return mk::ret(mk::succ(r->value));
  return mk::ret(mk::triv());
}

// Number of bind heads and ap functions above the redex.
std::size_t focus_depth(const TermPtr& t) {
  std::size_t d = 0;
  for (const Term* cur = t.get();; ++d) {
    if (const auto* b = cur->as<node::Bind>(); b && !b->head->is<node::Ret>()) {
      cur = b->head.get();
    } else if (const auto* a = cur->as<node::Ap>(); a && !a->fun->is<node::Lam>()) {
      cur = a->fun.get();
    } else {
      return d;
    }
  }
}

TermPtr descend(TermPtr t, std::size_t depth) {
  while (depth-- > 0) {
    if (const auto* b = t->as<node::Bind>()) {
      t = b->head;
    } else if (const auto* a = t->as<node::Ap>()) {
      t = a->fun;
    } else {
      return nullptr;
    }
  }
  return t;
}

// Whether `next`, the successor of the well-typed `prev`, has type `x`.
bool preserved(const TermPtr& prev, const TermPtr& next, const CompType& x,
               const CheckOptions& opts) {
  const auto* monoid = opts.model.monoid.get();
  if (next->size() <= opts.full_typing_limit) return has_type(next, x, monoid);
  const auto depth = focus_depth(prev);
  auto redex = descend(prev, depth);
  auto contractum = descend(next, depth);
  if (!contractum) return false;
  // Only the redex changed, and evaluation contexts bind nothing.
  auto frame = [&](const TermPtr& whole, const TermPtr& hole) {
    std::vector<TermPtr> path;
    for (auto t = whole; t != hole; t = descend(t, 1)) path.push_back(t);
    return path;
  };
  auto before = frame(prev, redex);
  auto after = frame(next, contractum);
  for (std::size_t i = 0; i < before.size(); ++i) {
    const auto& pk = children(before[i]);
    const auto& nk = children(after[i]);
    if (before[i]->node().index() != after[i]->node().index() || pk.size() != nk.size()) {
      return false;
    }
    for (std::size_t k = 1; k < pk.size(); ++k) {
      if (pk[k].first != nk[k].first && !equal(pk[k].first, nk[k].first)) return false;
    }
  }
  try {
    return infer({}, redex, monoid) == infer({}, contractum, monoid);
  } catch (const TypeError& e) {
    if (e.rule() != "ambiguous") return false;
  }
  return has_type(next, x, monoid);
}

bool defined(const Observation& o) { return std::holds_alternative<observation::Defined>(o); }

Observation observe_comp(const CostModel& m, const SemComp& c, std::uint64_t fuel) {
  return observe(m, to_delay(m, c), fuel);
}

// Observes both sides at `fuel`; a definedness disagreement is only
// reported if it persists at 4× fuel.
std::optional<std::pair<Observation, Observation>> disagree(
    const CostModel& m, const std::function<Observation(std::uint64_t)>& lhs,
    const std::function<Observation(std::uint64_t)>& rhs, std::uint64_t fuel) {
  auto l = lhs(fuel);
  auto r = rhs(fuel);
  if (defined(l) != defined(r)) {
    l = lhs(4 * fuel);
    r = rhs(4 * fuel);
  }
  if (same_observation(m, l, r)) return std::nullopt;
  return std::make_pair(std::move(l), std::move(r));
}

}  // namespace

CheckReport check_machine(const std::vector<TermPtr>& programs, const CheckOptions& opts) {
  const auto& m = opts.model;
  return run_cases("machine", programs, opts, [&](const TermPtr& e) -> std::optional<Failure> {
    const auto name = show(m, e);
    Classification type = Classification::value(ValueType::unit());
    try {
      type = infer({}, e, m.monoid.get());
    } catch (const TypeError& err) {
      // A program whose type is left open, such as a bare loop, runs at F unit.
      const auto unit = CompType::returner(ValueType::unit());
      if (err.rule() != "ambiguous" || !has_type(e, unit, m.monoid.get())) {
        return failure("typing", {name}, err.what(), "", 0);
      }
      type = Classification::computation(unit);
    }
    if (!type.is_computation()) return failure("typing", {name}, "value", "computation", 0);
    const auto& x = type.comp_type();

    TermPtr cur = e;
    SealedCost total = m.zero();
    std::uint64_t steps = 0;
    bool terminal = false;
    try {
      while (steps <= opts.trace_limit) {
        auto a = out(cur, m);
        auto b = out(cur, m);
        if (!same_step(m, a, b)) {
          return failure("determinism", {name, show(m, cur)}, describe_step(m, a),
                         describe_step(m, b), steps);
        }
        if (std::holds_alternative<machine::Terminal>(a)) {
          terminal = true;
          break;
        }
        if (steps == opts.trace_limit) break;
        auto& n = std::get<machine::Next>(a);
        if (!preserved(cur, n.term, x, opts)) {
          return failure("preservation", {name, show(m, n.term)}, to_string(x), "ill typed",
                         steps);
        }
        total = m.add(total, n.cost);
        cur = n.term;
        ++steps;
      }
    } catch (const StuckError& err) {
      return failure("progress", {name, show(m, cur)}, err.what(), "", steps);
    }

    if (!terminal) {
      // Undecided within the limit: smaller fuel stays undecided.
      for (std::uint64_t f : {std::uint64_t{0}, steps / 2, steps}) {
        auto o = profile(e, f, m);
        if (std::holds_alternative<outcome::Defined>(o)) {
          return failure("fuel-monotonicity", {name}, describe(m, o), "exhausted", f);
        }
      }
      return std::nullopt;
    }

    const auto v = cur;
    auto at = eval(e, v, steps, m);
    const outcome::Defined* d = std::get_if<outcome::Defined>(&at);
    if (!d || !m.equal(d->cost, total)) {
      return failure("functionality", {name, show(m, v)}, describe(m, at),
                     "defined " + m.print(total), steps);
    }
    auto other = other_terminal(v);
    auto o2 = eval(e, other, opts.trace_limit + 1, m);
    if (std::holds_alternative<outcome::Defined>(o2)) {
      return failure("functionality", {name, show(m, v), show(m, other)}, "defined at both",
                     describe(m, o2), steps);
    }
    if (steps > 0) {
      auto below = eval(e, v, steps - 1, m);
      if (!std::holds_alternative<outcome::Exhausted>(below)) {
        return failure("fuel-monotonicity", {name}, describe(m, below), "exhausted", steps - 1);
      }
    }
    for (std::uint64_t f : {steps + 1, 2 * steps + 1, opts.fuel}) {
      if (f < steps) continue;
      auto o = eval(e, v, f, m);
      if (!same_outcome(o, at, m)) {
        return failure("fuel-monotonicity", {name}, describe(m, o), describe(m, at), f);
      }
    }
    return std::nullopt;
  });
}

CheckReport check_adequacy(const std::vector<TermPtr>& programs, const CheckOptions& opts) {
  const auto& m = opts.model;
  return run_cases("adequacy", programs, opts, [&](const TermPtr& e) -> std::optional<Failure> {
    const auto name = show(m, e);
    auto machine_at = [&](std::uint64_t f) { return profile(e, f, m); };
    auto denote_at = [&](std::uint64_t f) { return observe_program(e, f, m); };
    auto p = machine_at(opts.fuel);
    auto o = denote_at(opts.fuel);
    auto agree = [&](const CostedOutcome& po, const Observation& oo) {
      if (const auto* d = std::get_if<outcome::Defined>(&po)) {
        const auto* od = std::get_if<observation::Defined>(&oo);
        return od && m.equal(d->cost, od->cost) && od->value.as<sem::Triv>();
      }
      return std::holds_alternative<outcome::Exhausted>(po) &&
             std::holds_alternative<observation::Exhausted>(oo);
    };
    if (agree(p, o)) return std::nullopt;
    const bool definedness = std::holds_alternative<outcome::Defined>(p) != defined(o);
    if (definedness) {
      p = machine_at(4 * opts.fuel);
      o = denote_at(4 * opts.fuel);
      if (agree(p, o)) return std::nullopt;
    }
    return failure("adequacy", {name}, describe(m, p), describe(m, o),
                   definedness ? 4 * opts.fuel : opts.fuel);
  });
}

CheckReport check_soundness(const std::vector<TermPtr>& programs, const CheckOptions& opts) {
  const auto& m = opts.model;
  return run_cases("soundness", programs, opts, [&](const TermPtr& e) -> std::optional<Failure> {
    const auto name = show(m, e);
    Trace t;
    try {
      const bool finishes = run(e, opts.fuel, m).terminal.has_value();
      t = trace(e, finishes ? opts.fuel : opts.divergent_steps, m);
    } catch (const StuckError& err) {
      return failure("progress", {name}, err.what(), "", 0);
    }
    const std::size_t checked = t.steps.size();
    const std::uint64_t fuel = t.terminal ? opts.fuel : opts.divergent_fuel;

    TermPtr cur = e;
    for (std::size_t k = 0; k < checked; ++k) {
      const auto& s = t.steps[k];
      auto before = [&](std::uint64_t f) { return observe_comp(m, denote_comp(cur, Env{}, m), f); };
      auto after = [&](std::uint64_t f) {
        return observe_comp(m, charge(m, s.cost, denote_comp(s.term, Env{}, m)), f);
      };
      if (auto bad = disagree(m, before, after, fuel)) {
        return failure("step", {name, show(m, cur), show(m, s.term)}, describe(m, bad->first),
                       describe(m, bad->second), fuel);
      }
      cur = s.term;
    }

    if (!t.terminal) return std::nullopt;
    const auto* r = cur->as<node::Ret>();
    if (!r) return failure("final-value", {name, show(m, cur)}, "terminal", "ret", opts.fuel);
    auto whole = observe_program(e, opts.fuel, m);
    const auto* d = std::get_if<observation::Defined>(&whole);
    const auto value = denote_value(r->value, Env{}, m);
    const bool ground = value.is_ground();
    if (!d || !m.equal(d->cost, t.total) || (ground && !ground_equal(d->value, value))) {
      return failure("evaluation", {name}, describe(m, whole),
                     "defined " + m.print(t.total) + " " + to_string(value), opts.fuel);
    }
    return std::nullopt;
  });
}

std::string_view to_string(SequencingLaw law) {
  switch (law) {
    case SequencingLaw::Sequence: return "sequence";
    case SequencingLaw::Profile: return "profile";
    case SequencingLaw::Reassociate: return "reassociate";
    case SequencingLaw::ApplySequence: return "apply-sequence";
  }
  return "?";
}

namespace {

ValueType ground_type(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return ValueType::unit();
    case 1: return ValueType::nat();
    default: return ValueType::ans();
  }
}

GenConfig terminating(std::uint64_t seed, const MonoidPtr& monoid, std::size_t depth) {
  GenConfig c;
  c.seed = seed;
  c.max_depth = depth;
  c.terminating = true;
  c.fix_probability = 0;
  c.monoid = monoid;
  return c;
}

}  // namespace

std::vector<SequencingInstance> gen_sequencing_instances(SequencingLaw law, std::size_t count,
                                                         std::uint64_t seed,
                                                         const MonoidPtr& monoid) {
  std::vector<SequencingInstance> out;
  const auto unit = CompType::returner(ValueType::unit());
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    auto a = ground_type(rng);
    auto b = ground_type(rng);
    auto e = gen_open(terminating(rng(), monoid, 4), {}, CompType::returner(a));
    SequencingInstance inst{law, e, nullptr, nullptr};
    switch (law) {
      case SequencingLaw::Sequence:
        inst.g = gen_open(terminating(rng(), monoid, 4), {a}, CompType::returner(b));
        break;
      case SequencingLaw::Profile:
        inst.g = gen_open(terminating(rng(), monoid, 4), {a}, unit);
        break;
      case SequencingLaw::Reassociate:
        inst.g = gen_open(terminating(rng(), monoid, 4), {a}, CompType::returner(b));
        inst.extra = gen_open(terminating(rng(), monoid, 4), {b}, unit);
        break;
      case SequencingLaw::ApplySequence: {
        auto c = ground_type(rng);
        inst.g = gen_open(terminating(rng(), monoid, 4), {a},
                          CompType::arrow(b, CompType::returner(c)));
        inst.extra = gen_value(terminating(rng(), monoid, 2), b);
        break;
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

struct Finished {
  TermPtr terminal;
  SealedCost cost;
};

std::optional<Finished> finish(const TermPtr& e, std::uint64_t fuel, const CostModel& m) {
  auto r = run(e, fuel, m);
  if (!r.terminal) return std::nullopt;
  return Finished{*r.terminal, r.total};
}

// Outcome at `fuel`, rerun at twice the fuel when Exhausted.
CostedOutcome settled(const TermPtr& e, const TermPtr& v, std::uint64_t fuel, const CostModel& m) {
  auto o = eval(e, v, fuel, m);
  if (std::holds_alternative<outcome::Exhausted>(o)) o = eval(e, v, 2 * fuel, m);
  return o;
}

// nullopt: some component evaluation was not Defined, so the instance does
// not count. Otherwise the (possibly empty) failure.
using SeqResult = std::optional<std::optional<Failure>>;

SeqResult check_instance(const SequencingInstance& s, const CheckOptions& opts) {
  const auto& m = opts.model;
  const auto fuel = opts.fuel;
  std::vector<std::string> terms{show(m, s.e), show(m, s.g)};
  if (s.extra) terms.push_back(show(m, s.extra));
  auto bad = [&](std::string what, const CostedOutcome& o, std::string expected) -> SeqResult {
    return std::optional<Failure>(
        failure(std::string(to_string(s.law)) + ":" + what, terms, describe(m, o),
                std::move(expected), fuel));
  };
  auto head = finish(s.e, fuel, m);
  if (!head) return std::nullopt;
  const auto v = head->terminal->as<node::Ret>()->value;
  const auto g_v = subst(s.g, v);

  switch (s.law) {
    case SequencingLaw::Sequence:
    case SequencingLaw::Profile: {
      auto tail = finish(g_v, fuel, m);
      if (!tail) return std::nullopt;
      const auto whole = mk::bind(s.e, s.g);
      auto o = s.law == SequencingLaw::Profile ? profile(whole, 2 * fuel, m)
                                               : settled(whole, tail->terminal, fuel, m);
      auto sum = m.add(head->cost, tail->cost);
      const auto* d = std::get_if<outcome::Defined>(&o);
      if (!d || !m.equal(d->cost, sum)) return bad("sum", o, "defined " + m.print(sum));
      return std::optional<Failure>();
    }
    case SequencingLaw::Reassociate: {
      auto mid = finish(g_v, fuel, m);
      if (!mid) return std::nullopt;
      auto last = finish(subst(s.extra, mid->terminal->as<node::Ret>()->value), fuel, m);
      if (!last) return std::nullopt;
      auto left = profile(mk::bind(mk::bind(s.e, s.g), s.extra), 2 * fuel, m);
      auto right = profile(mk::bind(s.e, mk::bind(s.g, shift(s.extra, 1, 1))), 2 * fuel, m);
      if (!same_outcome(left, right, m)) return bad("equal", left, describe(m, right));
      auto sum = m.add(m.add(head->cost, mid->cost), last->cost);
      const auto* d = std::get_if<outcome::Defined>(&left);
      if (!d || !m.equal(d->cost, sum)) return bad("sum", left, "defined " + m.print(sum));
      return std::optional<Failure>();
    }
    case SequencingLaw::ApplySequence: {
      const auto fun = mk::bind(s.e, s.g);
      const auto lhs = mk::ap(fun, s.extra);
      auto z = finish(lhs, fuel, m);
      if (!z) return std::nullopt;
      const auto rhs = mk::bind(s.e, mk::ap(s.g, shift(s.extra, 1)));
      auto l = settled(lhs, z->terminal, fuel, m);
      auto r = settled(rhs, z->terminal, fuel, m);
      if (!same_outcome(l, r, m)) return bad("equal", l, describe(m, r));
      // The application decomposes into evaluating the function to a
      // lambda and then its body.
      auto f = finish(fun, fuel, m);
      const auto* lam = f ? f->terminal->as<node::Lam>() : nullptr;
      if (!lam) return bad("decompose", l, "function evaluates to a lambda");
      auto body = finish(subst(lam->body, s.extra), fuel, m);
      if (!body || !equal(body->terminal, z->terminal)) {
        return bad("decompose", l, "body reaches " + show(m, z->terminal));
      }
      auto sum = m.add(f->cost, body->cost);
      const auto* d = std::get_if<outcome::Defined>(&l);
      if (!d || !m.equal(d->cost, sum)) return bad("sum", l, "defined " + m.print(sum));
      return std::optional<Failure>();
    }
  }
  return std::optional<Failure>();
}

}  // namespace

CheckReport check_sequencing_laws(const std::vector<SequencingInstance>& instances,
                                  const CheckOptions& opts) {
  CheckReport report{"sequencing", 0, {}, std::nullopt, {}};
  std::vector<std::pair<std::string, std::size_t>> counts;
  auto bump = [&](SequencingLaw law) {
    const auto key = std::string(to_string(law));
    for (auto& [k, n] : counts) {
      if (k == key) {
        ++n;
        return;
      }
    }
    counts.emplace_back(key, 1);
  };
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto r = check_instance(instances[i], opts);
    if (!r) continue;
    ++report.cases;
    bump(instances[i].law);
    if (*r) {
      (*r)->case_index = i;
      report.failures.push_back(std::move(**r));
      if (!first) first = i;
    }
  }
  report.breakdown = std::move(counts);
  if (first && opts.minimize) {
    const auto& s = instances[*first];
    std::vector<TermPtr> parts{s.e, s.g};
    if (s.extra) parts.push_back(s.extra);
    // Component contexts follow the types the terms already have.
    std::vector<Context> ctxs{{}, {}, {}};
    try {
      auto a = infer({}, s.e).comp_type().value();
      ctxs[1] = {a};
      if (s.law == SequencingLaw::Reassociate) {
        ctxs[2] = {infer({a}, s.g).comp_type().value()};
      }
    } catch (const TypeError&) {
    }
    auto small = minimize(parts, ctxs, [&](const std::vector<TermPtr>& p) {
      SequencingInstance t{s.law, p[0], p[1], p.size() > 2 ? p[2] : nullptr};
      auto r = check_instance(t, opts);
      return r && r->has_value();
    });
    std::string text;
    for (const auto& p : small) text += (text.empty() ? "" : " | ") + show(opts.model, p);
    report.minimized = text;
  }
  return report;
}

std::vector<ArgumentPair> gen_argument_pairs(std::size_t count, std::uint64_t seed,
                                             const MonoidPtr& monoid) {
  const auto unit = CompType::returner(ValueType::unit());
  std::vector<ArgumentPair> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    auto x = gen_open(terminating(rng(), monoid, 4), {}, unit);
    TermPtr y;
    switch (i % 3) {
      case 0: {
        y = x;
        for (std::uint64_t k = 1 + rng() % 3; k > 0; --k) {
          y = mk::step(monoid->sample(rng, 1, 5), y);
        }
        break;
      }
      case 1:
        y = gen_open(terminating(rng(), monoid, 4), {}, unit);
        break;
      default:
        y = x;
        break;
    }
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

CheckReport check_noninterference(const std::vector<TermPtr>& functions,
                                  const std::vector<ArgumentPair>& args,
                                  const CheckOptions& opts) {
  const auto& m = opts.model;
  const CostModel ext{m.monoid, Phase::Extensional};
  CheckReport report{"noninterference", 0, {}, std::nullopt, {}};

  std::vector<bool> usable;
  for (const auto& a : args) {
    usable.push_back(std::holds_alternative<outcome::Defined>(profile(a.x, opts.fuel, m)) &&
                     std::holds_alternative<outcome::Defined>(profile(a.y, opts.fuel, m)));
  }

  // Answer of `e` applied to `x`, if it finishes, checked against the
  // Extensional re-run and the denotation.
  auto answer = [&](const TermPtr& e, const TermPtr& x,
                    std::vector<Failure>& fails) -> std::optional<TermPtr> {
    const auto prog = mk::ap(e, x);
    auto r = finish(prog, opts.fuel, m);
    if (!r) return std::nullopt;
    auto rerun = finish(prog, opts.fuel, ext);
    if (!rerun || !equal(rerun->terminal, r->terminal) || !rerun->cost.is_sealed()) {
      fails.push_back(failure("extensional", {show(m, e), show(m, x)},
                              rerun ? show(m, rerun->terminal) + " " + ext.print(rerun->cost)
                                    : "exhausted",
                              show(m, r->terminal) + " *", opts.fuel));
    }
    auto seen = observe_comp(ext, apply(ext, denote_comp(e, Env{}, ext),
                                        denote_value(x, Env{}, ext)),
                             4 * opts.fuel);
    const auto* d = std::get_if<observation::Defined>(&seen);
    const auto expected = denote_value(r->terminal->as<node::Ret>()->value, Env{}, ext);
    if (!d || !d->cost.is_sealed() || !ground_equal(d->value, expected)) {
      fails.push_back(failure("extensional-denotation", {show(m, e), show(m, x)},
                              describe(ext, seen), to_string(expected) + " *", 4 * opts.fuel));
    }
    return r->terminal;
  };

  auto one = [&](const TermPtr& e, std::size_t& counted) {
    std::vector<Failure> fails;
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (!usable[j]) continue;
      auto vx = answer(e, args[j].x, fails);
      auto vy = answer(e, args[j].y, fails);
      if (!vx || !vy) continue;
      ++counted;
      if (!equal(*vx, *vy)) {
        fails.push_back(failure("value", {show(m, e), show(m, args[j].x), show(m, args[j].y)},
                                show(m, *vx), show(m, *vy), opts.fuel));
      }
    }
    return fails;
  };

  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    auto fails = one(functions[i], report.cases);
    for (auto& f : fails) {
      f.case_index = i;
      report.failures.push_back(std::move(f));
    }
    if (!fails.empty() && !first) first = i;
  }
  if (first && opts.minimize) {
    std::size_t scratch = 0;
    auto small = minimize(functions[*first], {},
                          [&](const TermPtr& t) { return !one(t, scratch).empty(); });
    report.minimized = show(m, small);
  }
  return report;
}

}  // namespace costpcf::harness
