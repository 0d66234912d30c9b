#include "costpcf/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "costpcf/denote.hpp"
#include "costpcf/harness/suites.hpp"
#include "costpcf/machine.hpp"
#include "costpcf/syntax.hpp"
#include "costpcf/typecheck.hpp"

namespace costpcf {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultFuel = 100000;

// Raised for bad input files or flags; carries a ready JSON report.
struct UserError {
  json report;
};

struct RunConfig {
  std::string command;
  std::string path;
  std::string suite;
  std::uint64_t fuel = kDefaultFuel;
  std::string monoid = "nat";
  std::string phase = "int";
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
  bool pretty = false;
  bool trace = false;

  CostModel model() const { return CostModel{make_monoid(monoid), parse_phase(phase)}; }
};

std::uint64_t default_fuel() {
  if (const char* env = std::getenv("COSTPCF_FUEL")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultFuel;
}

json cost_json(const CostModel& m, const SealedCost& c) {
  if (c.is_sealed()) return "*";
  const auto& units = c.cost().units;
  if (m.monoid->name() == "nat") return units.front();
  if (m.monoid->name().rfind("vec:", 0) == 0) return units;
  return m.print(c);
}

json value_json(const SemValue& v) {
  if (const auto* n = v.as<sem::Num>()) return n->value;
  return to_string(v);
}

TermPtr load(const RunConfig& cfg, const CostModel& m) {
  std::ifstream in(cfg.path);
  if (!in) throw UserError{json{{"error", "io"}, {"msg", "cannot read " + cfg.path}}};
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str(), *m.monoid);
  } catch (const ParseError& e) {
    throw UserError{json{{"error", "parse"},
                         {"line", e.line()},
                         {"col", e.column()},
                         {"msg", e.what()}}};
  }
}

Classification classify(const TermPtr& t, const CostModel& m) {
  if (!t->closed()) {
    throw UserError{json{{"error", "type"}, {"at", ""}, {"msg", "closed: program has free variables"}}};
  }
  try {
    return infer({}, t, m.monoid.get());
  } catch (const TypeError& e) {
    throw UserError{json::parse(e.to_json())};
  }
}

void require(const TermPtr& t, const CompType& x, const CostModel& m) {
  try {
    check_program(t, x, m.monoid.get());
  } catch (const TypeError& e) {
    throw UserError{json::parse(e.to_json())};
  }
}

// Programs run by `denote` and `step` must be closed computations. A
// program valid at every type, such as `fix x x`, is run at F unit.
CompType computation(const TermPtr& t, const CostModel& m) {
  const auto unit = CompType::returner(ValueType::unit());
  if (t->closed() && has_type(t, unit, m.monoid.get())) {
    try {
      infer({}, t, m.monoid.get());
    } catch (const TypeError&) {
      return unit;
    }
  }
  auto cls = classify(t, m);
  if (!cls.is_computation()) {
    throw UserError{json{{"error", "type"},
                         {"at", ""},
                         {"msg", "program: a value of type " + to_string(cls.value_type()) +
                                     " is not a computation"}}};
  }
  return cls.comp_type();
}

json outcome_json(const CostModel& m, const CostedOutcome& o) {
  if (const auto* d = std::get_if<outcome::Defined>(&o)) {
    return json{{"status", "defined"}, {"cost", cost_json(m, d->cost)}};
  }
  if (const auto* x = std::get_if<outcome::Mismatch>(&o)) {
    return json{{"status", "mismatch"}, {"reached", print(x->reached, *m.monoid)}};
  }
  return json{{"status", "exhausted"}, {"fuel", std::get<outcome::Exhausted>(o).fuel_used}};
}

json observation_json(const CostModel& m, const Observation& o) {
  if (const auto* d = std::get_if<observation::Defined>(&o)) {
    return json{{"status", "defined"}, {"cost", cost_json(m, d->cost)}, {"value", value_json(d->value)}};
  }
  return json{{"status", "exhausted"}, {"cost", nullptr}, {"value", nullptr}};
}

std::string pretty(const json& j) {
  if (j.contains("status")) {
    std::string s = j["status"].get<std::string>();
    if (j.contains("cost") && !j["cost"].is_null()) s += " cost " + j["cost"].dump();
    if (j.contains("value") && !j["value"].is_null()) s += " value " + j["value"].dump();
    if (j.contains("fuel")) s += " fuel " + j["fuel"].dump();
    if (j.contains("steps")) s += " after " + j["steps"].dump() + " steps";
    return s;
  }
  if (j.contains("type")) return j["type"].get<std::string>();
  return j.dump(2);
}

void emit(const RunConfig& cfg, std::ostream& out, const json& j) {
  out << (cfg.pretty ? pretty(j) : j.dump()) << '\n';
}

int cmd_typecheck(const RunConfig& cfg, std::ostream& out) {
  auto m = cfg.model();
  auto t = load(cfg, m);
  emit(cfg, out, json{{"type", to_string(classify(t, m))}});
  return kOk;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  auto m = cfg.model();
  auto t = load(cfg, m);
  require(t, CompType::returner(ValueType::unit()), m);
  emit(cfg, out, outcome_json(m, profile(t, cfg.fuel, m)));
  return kOk;
}

int cmd_denote(const RunConfig& cfg, std::ostream& out) {
  auto m = cfg.model();
  auto t = load(cfg, m);
  auto x = computation(t, m);
  if (x.kind() != CompType::Kind::Returner) {
    throw UserError{json{{"error", "type"},
                         {"at", ""},
                         {"msg", "program: has type " + to_string(x) + ", expected F A"}}};
  }
  emit(cfg, out, observation_json(m, observe_program(t, cfg.fuel, m)));
  return kOk;
}

int cmd_step(const RunConfig& cfg, std::ostream& out) {
  auto m = cfg.model();
  auto t = load(cfg, m);
  computation(t, m);
  auto tr = trace(t, cfg.fuel, m);
  if (cfg.trace) {
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      const auto& s = tr.steps[k];
      json line{{"step", k + 1},
                {"rule", std::string(to_string(s.rule))},
                {"cost", cost_json(m, s.cost)},
                {"term", print(s.term, *m.monoid)}};
      if (cfg.pretty) {
        out << k + 1 << "  " << to_string(s.rule) << "  " << m.print(s.cost) << "  "
            << print(s.term, *m.monoid) << '\n';
      } else {
        out << line.dump() << '\n';
      }
    }
  }
  const TermPtr last = tr.steps.empty() ? tr.start : tr.steps.back().term;
  json j{{"status", tr.terminal ? "terminal" : "truncated"},
         {"steps", tr.steps.size()},
         {"total", cost_json(m, tr.total)}};
  if (tr.terminal) j["term"] = print(last, *m.monoid);
  emit(cfg, out, j);
  return kOk;
}

int cmd_adequacy(const RunConfig& cfg, std::ostream& out) {
  auto m = cfg.model();
  auto t = load(cfg, m);
  require(t, CompType::returner(ValueType::unit()), m);
  harness::CheckOptions opts;
  opts.model = m;
  opts.fuel = cfg.fuel;
  auto report = harness::check_adequacy({t}, opts);
  json j{{"profile", outcome_json(m, profile(t, cfg.fuel, m))},
         {"denote", observation_json(m, observe_program(t, cfg.fuel, m))},
         {"agree", report.ok()}};
  out << (cfg.pretty ? j.dump(2) : j.dump()) << '\n';
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (!harness::is_suite(cfg.suite)) {
    throw UserError{json{{"error", "usage"}, {"msg", "unknown suite: " + cfg.suite}}};
  }
  harness::CheckOptions opts;
  opts.model = cfg.model();
  opts.fuel = cfg.fuel;
  opts.seed = cfg.seed;
  bool ok = true;
  for (const auto& r : harness::run_suite(cfg.suite, opts, cfg.cases)) {
    ok = ok && r.ok();
    if (cfg.pretty) {
      out << r.check << ": " << r.cases << " cases, " << r.failures.size() << " failures"
          << (r.minimized ? ", minimized " + *r.minimized : std::string()) << '\n';
    } else {
      out << harness::to_json(r) << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.fuel = default_fuel();

  CLI::App app{"Cost-aware call-by-push-value: checker, machine, denotation and test harness",
               "costpcf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fuel", cfg.fuel, "transitions / guarded steps allowed (env COSTPCF_FUEL)")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--monoid", cfg.monoid, "cost monoid: nat, vec:<k>, word");
  app.add_option("--phase", cfg.phase, "int or ext");
  app.add_option("--seed", cfg.seed, "generator seed");
  app.add_option("--cases", cfg.cases, "cases per suite");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--pretty", cfg.pretty, "human-readable output");
  app.add_flag("--trace", cfg.trace, "step: print every transition");
  json_flag->excludes(app.get_option("--pretty"));

  for (const char* name : {"typecheck", "step", "profile", "denote", "adequacy"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", cfg.path, "program file")->required();
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("typecheck")->description("print the type of a program");
  app.get_subcommand("step")->description("run the transition system");
  app.get_subcommand("profile")->description("machine cost of a program of type F unit");
  app.get_subcommand("denote")->description("observe the denotation of a program of type F A");
  app.get_subcommand("adequacy")->description("compare profile and denote on one program");
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", cfg.suite, "laws, machine, sequencing, soundness, adequacy, "
                                        "noninterference or all")
      ->required();
  check->callback([&cfg] { cfg.command = "check"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"msg", e.what()}}.dump() << '\n';
    return kUserError;
  }

  try {
    cfg.model();
  } catch (const std::exception& e) {
    err << json{{"error", "usage"}, {"msg", e.what()}}.dump() << '\n';
    return kUserError;
  }

  try {
    if (cfg.command == "typecheck") return cmd_typecheck(cfg, out);
    if (cfg.command == "profile") return cmd_profile(cfg, out);
    if (cfg.command == "denote") return cmd_denote(cfg, out);
    if (cfg.command == "step") return cmd_step(cfg, out);
    if (cfg.command == "adequacy") return cmd_adequacy(cfg, out);
    return cmd_check(cfg, out);
  } catch (const UserError& e) {
    err << e.report.dump() << '\n';
    return kUserError;
  } catch (const StuckError& e) {
    err << json{{"error", "internal"}, {"msg", e.what()}}.dump() << '\n';
    return kInternal;
  }
}

}  // namespace costpcf
