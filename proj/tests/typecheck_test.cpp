#include <gtest/gtest.h>

#include "costpcf/harness/generator.hpp"
#include "costpcf/syntax.hpp"
#include "costpcf/typecheck.hpp"

using namespace costpcf;

namespace {

const ValueType kNat = ValueType::nat();
const ValueType kUnit = ValueType::unit();
const ValueType kAns = ValueType::ans();

CompType F(ValueType a) { return CompType::returner(std::move(a)); }

Classification infer_src(const std::string& src, const Context& ctx = {}) {
  return infer(ctx, parse(src));
}

std::string error_rule(const std::string& src, const Context& ctx = {}) {
  try {
    infer(ctx, parse(src));
  } catch (const TypeError& e) {
    return e.rule();
  }
  return "";
}

}  // namespace

TEST(Infer, Constructors) {
  EXPECT_EQ(infer({}, mk::ret(mk::zero())), Classification::computation(F(kNat)));
  EXPECT_EQ(infer({}, mk::lam(kNat, mk::ret(mk::var(0)))),
            Classification::computation(CompType::arrow(kNat, F(kNat))));
  EXPECT_EQ(infer({}, mk::numeral(3)), Classification::value(kNat));
  EXPECT_EQ(infer({}, mk::triv()), Classification::value(kUnit));
  EXPECT_EQ(infer({}, mk::no()), Classification::value(kAns));
  EXPECT_EQ(infer_src("(step 4 (ret yes))"), Classification::computation(F(kAns)));
  EXPECT_EQ(infer_src("(bind (ret 1) n (ifz n (ret no) p (ret yes)))"),
            Classification::computation(F(kAns)));
}

TEST(Infer, ApplicationHeadMustBeAnArrow) {
  try {
    infer({}, mk::ap(mk::ret(mk::zero()), mk::zero()));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.rule(), "ap");
    EXPECT_EQ(e.path(), "/0");
    EXPECT_NE(e.message().find("F nat"), std::string::npos) << e.message();
  }
}

TEST(Infer, ContextLookup) {
  Context ctx{kNat, ValueType::thunk(F(kUnit))};
  EXPECT_EQ(infer(ctx, mk::var(0)), Classification::value(kNat));
  EXPECT_EQ(infer(ctx, mk::var(1)), Classification::value(ValueType::thunk(F(kUnit))));
  // A thunk in the context may be forced in computation position.
  EXPECT_EQ(infer(ctx, mk::bind(mk::var(1), mk::ret(mk::var(1)))),
            Classification::computation(F(kNat)));
  EXPECT_EQ(error_rule("#2", ctx), "var");
}

TEST(Infer, ThunksAreImplicit) {
  // A computation passed as an argument is a value of type U X.
  EXPECT_EQ(infer_src("(ap (lam (U (F unit)) t (bind t _ (ret yes))) (step 5 (ret triv)))"),
            Classification::computation(F(kAns)));
  EXPECT_EQ(infer_src("(ret (ret zero))"),
            Classification::computation(F(ValueType::thunk(F(kNat)))));
}

TEST(Infer, FixIsTypedByUnification) {
  EXPECT_EQ(infer_src("(fix f (lam nat n (ifz n (ret triv) p (ap f p))))"),
            Classification::computation(CompType::arrow(kNat, F(kUnit))));
  EXPECT_EQ(infer_src("(fix x (step 1 (bind x v (ret zero))))"),
            Classification::computation(F(kNat)));
}

TEST(Infer, UndeterminedTypesAreAmbiguous) {
  EXPECT_EQ(error_rule("(fix x x)"), "ambiguous");
  EXPECT_EQ(error_rule("(step 1 (fix x x))"), "ambiguous");
  // A discarded undetermined subterm does not matter.
  EXPECT_EQ(infer_src("(ap (lam (U (F unit)) t (ret zero)) (fix x x))"),
            Classification::computation(F(kNat)));
}

TEST(Infer, RuleErrors) {
  EXPECT_EQ(error_rule("(succ yes)"), "succ");
  EXPECT_EQ(error_rule("(bind zero v (ret v))"), "force");
  EXPECT_EQ(error_rule("(ifz yes (ret zero) p (ret p))"), "ifz");
  EXPECT_EQ(error_rule("(ifz 1 (ret zero) p (ret yes))"), "ifz");
  EXPECT_EQ(error_rule("(ap (lam nat x (ret x)) triv)"), "ap");
  EXPECT_EQ(error_rule("(lam nat x x)"), "force");
  EXPECT_EQ(error_rule("(fix f (ret f))"), "fix");
  EXPECT_EQ(error_rule("(bind (lam nat x (ret x)) v (ret v))"), "bind");
}

TEST(Infer, StepLiteralsAreCheckedAgainstTheMonoid) {
  auto t = mk::step(Cost{{1, 2}}, mk::ret(mk::triv()));
  EXPECT_THROW(infer({}, t, nat_monoid().get()), TypeError);
  EXPECT_NO_THROW(infer({}, t, vector_monoid(2).get()));
  EXPECT_NO_THROW(infer({}, t));
}

TEST(CheckProgram, Examples) {
  EXPECT_NO_THROW(check_program(mk::ret(mk::triv()), F(kUnit)));
  EXPECT_NO_THROW(check_program(mk::fix(mk::var(0)), F(kUnit)));
  EXPECT_THROW(check_program(mk::ret(mk::zero()), F(kUnit)), TypeError);
  EXPECT_THROW(check_program(mk::var(0), F(kUnit)), TypeError);
  EXPECT_TRUE(has_type(mk::fix(mk::var(0)), CompType::arrow(kNat, F(kAns))));
  EXPECT_FALSE(has_type(mk::zero(), F(kNat)));
}

TEST(TypeErrorJson, Shape) {
  TypeError e("/1/0", "ap", "head has \"quotes\"");
  EXPECT_EQ(e.to_json(), R"({"error":"type","at":"/1/0","msg":"ap: head has \"quotes\""})");
}

TEST(Infer, GeneratedTermsAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    harness::GenConfig cfg;
    cfg.seed = seed;
    cfg.target = CompType::arrow(kNat, F(kAns));
    auto t = harness::gen_term(cfg);
    auto a = infer({}, t);
    EXPECT_EQ(a, infer({}, t));
    EXPECT_EQ(a, infer({}, parse(print(t))));
  }
}
