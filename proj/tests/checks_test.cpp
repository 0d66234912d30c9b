#include <gtest/gtest.h>

#include <json.hpp>

#include "costpcf/harness/checks.hpp"
#include "costpcf/harness/corpus.hpp"
#include "costpcf/harness/suites.hpp"
#include "costpcf/syntax.hpp"

using namespace costpcf;
using namespace costpcf::harness;

namespace {

CheckOptions options() {
  CheckOptions o;
  o.fuel = 10000;
  return o;
}

const char* kCountdown3 =
    "(ap (fix f (lam nat n (ifz n (ret triv) p (step 1 (ap f p))))) 3)";

}  // namespace

TEST(Adequacy, Examples) {
  std::vector<TermPtr> programs{
      parse("(bind (step 1 (ret triv)) v (step 2 (ret triv)))"),
      mk::fix(mk::var(0)),
      parse(kCountdown3),
  };
  auto r = check_adequacy(programs, options());
  EXPECT_EQ(r.check, "adequacy");
  EXPECT_EQ(r.cases, 3u);
  EXPECT_TRUE(r.ok()) << to_json(r);
  EXPECT_EQ(std::get<outcome::Defined>(profile(programs[2], 100)).cost.cost(), Cost{{3}});
}

TEST(Soundness, Examples) {
  auto r = check_soundness({parse("(step 2 (ret yes))"), mk::ret(mk::triv()),
                            parse(kCountdown3), parse("(fix x (step 1 x))")},
                           options());
  EXPECT_TRUE(r.ok()) << to_json(r);
  EXPECT_EQ(r.cases, 4u);
}

TEST(Soundness, OtherMonoidsAndPhases) {
  for (const auto& m : monoid_instances()) {
    for (auto phase : {Phase::Intensional, Phase::Extensional}) {
      auto opts = options();
      opts.model = CostModel{m, phase};
      auto corpus = load_corpus(*m);
      auto r = check_soundness(ground_programs(corpus, *m), opts);
      EXPECT_TRUE(r.ok()) << m->name() << " " << to_string(phase) << " " << to_json(r);
    }
  }
}

TEST(Machine, CorpusPasses) {
  auto corpus = load_corpus();
  auto r = check_machine(ground_programs(corpus), options());
  EXPECT_TRUE(r.ok()) << to_json(r);
  EXPECT_GT(r.cases, 20u);
}

TEST(Sequencing, Examples) {
  auto e = parse("(step 1 (ret triv))");
  auto g = parse("(step 2 (ret triv))");
  auto i = parse("(step 4 (ret triv))");
  std::vector<SequencingInstance> inst{
      {SequencingLaw::Sequence, e, g, nullptr},
      {SequencingLaw::Profile, e, g, nullptr},
      {SequencingLaw::Reassociate, e, g, i},
  };
  auto r = check_sequencing_laws(inst, options());
  EXPECT_TRUE(r.ok()) << to_json(r);
  EXPECT_EQ(r.cases, 3u);
  EXPECT_EQ(std::get<outcome::Defined>(profile(mk::bind(e, g), 10)).cost.cost(), Cost{{3}});

  // A divergent continuation leaves nothing to compare.
  std::vector<SequencingInstance> loop{{SequencingLaw::Profile, e, mk::fix(mk::var(0)), nullptr}};
  auto lr = check_sequencing_laws(loop, options());
  EXPECT_TRUE(lr.ok());
  EXPECT_EQ(lr.cases, 0u);
}

TEST(Sequencing, GeneratedInstancesAreTerminating) {
  for (auto law : {SequencingLaw::Sequence, SequencingLaw::Profile, SequencingLaw::Reassociate,
                   SequencingLaw::ApplySequence}) {
    auto inst = gen_sequencing_instances(law, 50, 9, nat_monoid());
    ASSERT_EQ(inst.size(), 50u);
    auto r = check_sequencing_laws(inst, options());
    EXPECT_TRUE(r.ok()) << to_json(r);
    EXPECT_EQ(r.cases, 50u) << to_string(law);
  }
}

TEST(Sequencing, WordMonoidKeepsOrder) {
  auto opts = options();
  opts.model = CostModel{word_monoid(), Phase::Intensional};
  for (auto law : {SequencingLaw::Sequence, SequencingLaw::Reassociate,
                   SequencingLaw::ApplySequence}) {
    auto r = check_sequencing_laws(gen_sequencing_instances(law, 50, 4, word_monoid()), opts);
    EXPECT_TRUE(r.ok()) << to_json(r);
  }
}

TEST(Noninterference, Examples) {
  auto probe = parse("(lam (U (F unit)) x (bind x _ (ret yes)))");
  auto constant = parse("(lam (U (F unit)) x (ret no))");
  std::vector<ArgumentPair> args{{mk::ret(mk::triv()), parse("(step 5 (ret triv))")}};
  auto r = check_noninterference({probe, constant}, args, options());
  EXPECT_TRUE(r.ok()) << to_json(r);
  EXPECT_EQ(r.cases, 2u);

  auto applied = mk::ap(probe, parse("(step 5 (ret triv))"));
  EXPECT_EQ(std::get<outcome::Defined>(
                eval(applied, mk::ret(mk::yes()), 100)).cost.cost(),
            Cost{{5}});
}

TEST(Noninterference, GeneratedArgumentsTerminate) {
  auto args = gen_argument_pairs(30, 2, nat_monoid());
  ASSERT_EQ(args.size(), 30u);
  for (const auto& a : args) {
    EXPECT_TRUE(run(a.x, 100000).terminal.has_value()) << print(a.x);
    EXPECT_TRUE(run(a.y, 100000).terminal.has_value()) << print(a.y);
  }
}

TEST(Laws, AllMonoidsPass) {
  for (const auto& m : monoid_instances()) {
    auto opts = options();
    opts.model = CostModel{m, Phase::Intensional};
    auto r = check_laws(50, opts);
    EXPECT_TRUE(r.ok()) << m->name() << " " << to_json(r);
    EXPECT_EQ(r.breakdown.size(), 13u);
  }
}

TEST(Report, JsonShape) {
  CheckReport r;
  r.check = "demo";
  r.cases = 7;
  for (int i = 0; i < 8; ++i) {
    r.failures.push_back(Failure{static_cast<std::size_t>(i), "p", {"(ret triv)"}, "l", "r", 10});
  }
  r.minimized = "(ret triv)";
  auto j = nlohmann::json::parse(to_json(r, 3));
  EXPECT_EQ(j["check"], "demo");
  EXPECT_EQ(j["cases"], 7);
  EXPECT_EQ(j["failures"], 8);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["examples"].size(), 3u);
  EXPECT_EQ(j["examples"][0]["property"], "p");
  EXPECT_EQ(j["minimized"], "(ret triv)");
  EXPECT_EQ(to_json(CheckReport{"x"}).find('\n'), std::string::npos);
}

TEST(Suites, NamesAndDefaults) {
  EXPECT_EQ(suite_names().size(), 6u);
  EXPECT_TRUE(is_suite("all"));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_EQ(default_cases("machine"), 500u);
  EXPECT_THROW(run_suite("nope", options()), std::invalid_argument);
}

TEST(Suites, DeterministicReports) {
  auto a = run_suite("adequacy", options(), 30);
  auto b = run_suite("adequacy", options(), 30);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(to_json(a[0]), to_json(b[0]));
  EXPECT_TRUE(a[0].ok());
}

TEST(Machine, LocalAndWholeTermPreservationAgree) {
  const std::vector<CompType> targets{CompType::returner(ValueType::unit()),
                                      CompType::returner(ValueType::ans()),
                                      CompType::arrow(ValueType::nat(), CompType::returner(ValueType::nat()))};
  auto programs = gen_programs(60, 77, targets, 2, 7, 0.15, nat_monoid());
  auto local = options();
  local.trace_limit = 200;
  local.full_typing_limit = 0;
  auto whole = local;
  whole.full_typing_limit = 1u << 30;
  auto a = check_machine(programs, local);
  auto b = check_machine(programs, whole);
  EXPECT_TRUE(a.ok()) << to_json(a);
  EXPECT_EQ(to_json(a), to_json(b));
}
