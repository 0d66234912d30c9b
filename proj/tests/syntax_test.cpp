#include <gtest/gtest.h>

#include "costpcf/harness/generator.hpp"
#include "costpcf/syntax.hpp"

using namespace costpcf;

TEST(Parse, Constructors) {
  EXPECT_TRUE(equal(parse("(ret zero)"), mk::ret(mk::zero())));
  EXPECT_TRUE(equal(parse("(step 2 (ret triv))"), mk::step(Cost{{2}}, mk::ret(mk::triv()))));
  EXPECT_TRUE(equal(parse("(lam nat x (ret x))"),
                    mk::lam(ValueType::nat(), mk::ret(mk::var(0)))));
}

TEST(Parse, BindersResolveInnermostFirst) {
  auto t = parse("(lam nat x (lam nat y (ap x y)))");
  EXPECT_TRUE(equal(t, mk::lam(ValueType::nat(),
                               mk::lam(ValueType::nat(), mk::ap(mk::var(1), mk::var(0))))));
  // Shadowing.
  EXPECT_TRUE(equal(parse("(lam nat x (lam nat x (ret x)))"),
                    mk::lam(ValueType::nat(), mk::lam(ValueType::nat(), mk::ret(mk::var(0))))));
  EXPECT_TRUE(equal(parse("(ifz 1 (ret zero) p (ret p))"),
                    mk::ifz(mk::numeral(1), mk::ret(mk::zero()), mk::ret(mk::var(0)))));
  EXPECT_TRUE(equal(parse("(bind (ret yes) v (ret v))"),
                    mk::bind(mk::ret(mk::yes()), mk::ret(mk::var(0)))));
}

TEST(Parse, NumeralsDesugar) {
  EXPECT_TRUE(equal(parse("(ret 3)"), mk::ret(mk::succ(mk::succ(mk::succ(mk::zero()))))));
  EXPECT_EQ(as_numeral(parse("0")), 0u);
}

TEST(Parse, ApIsLeftNested) {
  EXPECT_TRUE(equal(parse("(ap #0 1 2)"),
                    mk::ap(mk::ap(mk::var(0), mk::numeral(1)), mk::numeral(2))));
}

TEST(Parse, FreeIndices) {
  EXPECT_TRUE(equal(parse("(lam nat x (ap #0 x))"),
                    mk::lam(ValueType::nat(), mk::ap(mk::var(1), mk::var(0)))));
}

TEST(Parse, CommentsAndWhitespace) {
  EXPECT_TRUE(equal(parse("; header\n  (ret ; inline\n triv)\n"), mk::ret(mk::triv())));
}

TEST(Parse, MonoidSpecificCostLiterals) {
  auto v = vector_monoid(2);
  auto t = parse("(step [1,2] (ret triv))", *v);
  EXPECT_EQ(t->as<node::Step>()->cost, (Cost{{1, 2}}));
  EXPECT_THROW(parse("(step [1,2] (ret triv))"), ParseError);
}

TEST(Parse, Types) {
  EXPECT_EQ(parse_value_type("(U (F unit))"),
            ValueType::thunk(CompType::returner(ValueType::unit())));
  EXPECT_EQ(parse_comp_type("(-> nat (F ans))"),
            CompType::arrow(ValueType::nat(), CompType::returner(ValueType::ans())));
  EXPECT_THROW(parse_comp_type("nat"), ParseError);
  EXPECT_THROW(parse_value_type("(F nat)"), ParseError);
}

TEST(Parse, ErrorsCarryPositionAndExpectations) {
  try {
    parse("");
    FAIL() << "empty input accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse("(ret zero)\n  (ret zero)");
    FAIL() << "trailing input accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse("(ret zero"), ParseError);
  EXPECT_THROW(parse("(ret y)"), ParseError);
  EXPECT_THROW(parse("(frob zero)"), ParseError);
  EXPECT_THROW(parse("(lam x (ret x))"), ParseError);
  EXPECT_THROW(parse("(ap f)"), ParseError);
  EXPECT_THROW(parse(")"), ParseError);
}

TEST(Print, CanonicalForms) {
  EXPECT_EQ(print(mk::ret(mk::zero())), "(ret zero)");
  EXPECT_EQ(print(mk::fix(mk::var(0))), "(fix x x)");
  EXPECT_EQ(print(mk::step(Cost{{0}}, mk::ret(mk::zero()))), "(step 0 (ret zero))");
  EXPECT_EQ(print(mk::ret(mk::numeral(2))), "(ret 2)");
  EXPECT_EQ(print(mk::lam(ValueType::nat(), mk::lam(ValueType::unit(), mk::ap(mk::var(1), mk::var(0))))),
            "(lam nat x (lam unit x1 (ap x x1)))");
  EXPECT_EQ(print(mk::lam(ValueType::nat(), mk::var(3))), "(lam nat x #2)");
}

TEST(Print, RoundTripsGeneratedTerms) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    harness::GenConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = 1 + seed % 7;
    cfg.target = seed % 2 ? CompType::returner(ValueType::nat())
                          : CompType::arrow(ValueType::nat(), CompType::returner(ValueType::unit()));
    auto t = harness::gen_term(cfg);
    auto text = print(t);
    ASSERT_TRUE(equal(parse(text), t)) << text;
    ASSERT_EQ(print(parse(text)), text);
  }
}

TEST(Print, RoundTripsOtherMonoids) {
  for (const auto& m : monoid_instances()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      harness::GenConfig cfg;
      cfg.seed = seed;
      cfg.monoid = m;
      auto t = harness::gen_term(cfg);
      ASSERT_TRUE(equal(parse(print(t, *m), *m), t)) << print(t, *m);
    }
  }
}
