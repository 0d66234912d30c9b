#include <gtest/gtest.h>

#include "costpcf/harness/generator.hpp"
#include "costpcf/harness/minimize.hpp"
#include "costpcf/syntax.hpp"
#include "costpcf/typecheck.hpp"

using namespace costpcf;
using namespace costpcf::harness;

namespace {

bool has_big_step(const TermPtr& t) {
  if (const auto* s = t->as<node::Step>()) {
    if (s->cost.units.at(0) >= 3) return true;
  }
  for (const auto& [kid, _] : children(t)) {
    if (has_big_step(kid)) return true;
  }
  return false;
}

}  // namespace

TEST(Shrink, CandidatesAreStrictlySmaller) {
  auto t = parse("(bind (step 3 (ret 2)) v (ifz v (ret yes) p (ap (lam nat y (ret no)) p)))");
  auto cands = shrink_candidates(t);
  EXPECT_FALSE(cands.empty());
  for (const auto& c : cands) EXPECT_LT(c->size(), t->size()) << print(c);
}

TEST(Minimize, PassingCaseIsUnchanged) {
  auto t = parse("(step 1 (ret triv))");
  ShrinkLog log;
  auto m = minimize(t, {}, has_big_step, &log);
  EXPECT_TRUE(equal(m, t));
  EXPECT_TRUE(log.empty());
}

TEST(Minimize, ShrinksWhilePreservingTypeAndFailure) {
  std::size_t shrunk = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = 7;
    cfg.step_cost_max = 5;
    auto t = gen_term(cfg);
    if (!has_big_step(t)) continue;
    ShrinkLog log;
    auto m = minimize(t, {}, has_big_step, &log);
    ASSERT_TRUE(has_big_step(m)) << print(m);
    ASSERT_EQ(infer({}, m), infer({}, t)) << print(t) << " => " << print(m);
    std::size_t prev = t->size();
    for (auto s : log) {
      ASSERT_LT(s, prev);
      prev = s;
    }
    if (!log.empty()) {
      ASSERT_EQ(log.back(), m->size());
      ++shrunk;
    }
    // A local minimum is a fixed point.
    ASSERT_TRUE(equal(minimize(m, {}, has_big_step), m));
    // The smallest failing F unit program is a single step around a return.
    ASSERT_LE(m->size(), t->size());
  }
  EXPECT_GT(shrunk, 20u);
}

TEST(Minimize, ReachesTheCanonicalSmallestCase) {
  auto t = parse(
      "(bind (ap (lam nat n (step 1 (ret n))) 4) v "
      "(ifz v (ret triv) p (bind (step 7 (ret triv)) u (ret u))))");
  auto m = minimize(t, {}, has_big_step);
  EXPECT_EQ(print(m), "(step 7 (ret triv))");
}

TEST(Minimize, Tuples) {
  std::vector<TermPtr> parts{parse("(bind (step 1 (ret 2)) v (step 4 (ret v)))"),
                             parse("(step 5 (ret #0))")};
  std::vector<Context> ctxs{{}, {ValueType::nat()}};
  auto fails = [](const std::vector<TermPtr>& p) { return has_big_step(p[0]) && has_big_step(p[1]); };
  ShrinkLog log;
  auto m = minimize(parts, ctxs, fails, &log);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_TRUE(fails(m));
  EXPECT_LT(m[0]->size(), parts[0]->size());
  EXPECT_EQ(infer(ctxs[1], m[1]), infer(ctxs[1], parts[1]));
}
