#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "costpcf/denote.hpp"
#include "costpcf/harness/corpus.hpp"
#include "costpcf/machine.hpp"
#include "costpcf/syntax.hpp"

using namespace costpcf;
using namespace costpcf::harness;

TEST(Corpus, HasTwentyFivePrograms) {
  auto corpus = load_corpus();
  EXPECT_EQ(corpus.size(), 25u);
  EXPECT_EQ(noninterference_subjects(corpus).size(), 4u);
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    EXPECT_LT(corpus[i - 1].name, corpus[i].name);
  }
}

TEST(Corpus, EmbeddedCopyMatchesSourceTree) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(COSTPCF_CORPUS_DIR)) {
    if (entry.path().extension() != ".pcf") continue;
    ++files;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    auto name = entry.path().stem().string();
    bool found = false;
    for (const auto& p : load_corpus()) {
      if (p.name == name) {
        found = true;
        EXPECT_EQ(p.source, ss.str()) << name;
      }
    }
    EXPECT_TRUE(found) << name;
  }
  EXPECT_EQ(files, 25u);
}

TEST(Corpus, ExpectationsHoldOnTheMachineAndTheDenotation) {
  const std::uint64_t fuel = 100000;
  for (const auto& p : load_corpus()) {
    if (!p.expect) continue;
    SCOPED_TRACE(p.name);
    auto r = run(p.term, fuel);
    auto o = observe_program(p.term, fuel);
    if (p.expect->diverges) {
      EXPECT_FALSE(r.terminal.has_value());
      EXPECT_TRUE(std::holds_alternative<observation::Exhausted>(o));
      continue;
    }
    ASSERT_TRUE(r.terminal.has_value());
    const auto* d = std::get_if<observation::Defined>(&o);
    ASSERT_NE(d, nullptr);
    if (p.expect->cost) {
      EXPECT_EQ(r.total.cost(), Cost{{*p.expect->cost}});
      EXPECT_EQ(d->cost.cost(), Cost{{*p.expect->cost}});
    }
    if (p.expect->value) {
      const auto* ret = (*r.terminal)->as<node::Ret>();
      ASSERT_NE(ret, nullptr);
      EXPECT_EQ(print(ret->value), *p.expect->value);
      EXPECT_EQ(to_string(d->value), *p.expect->value);
    }
  }
}

TEST(Corpus, HeadersAreParsed) {
  auto p = parse_program("demo", "; type: (F nat)\n; expect: defined 2 value 1\n(step 2 (ret 1))\n");
  EXPECT_EQ(p.type, CompType::returner(ValueType::nat()));
  ASSERT_TRUE(p.expect);
  EXPECT_EQ(p.expect->cost, 2u);
  EXPECT_EQ(p.expect->value, "1");
  auto d = parse_program("loop", "; type: (F unit)\n; expect: diverges\n(fix x x)\n");
  EXPECT_TRUE(d.expect->diverges);
  EXPECT_THROW(parse_program("bad", "; type: (F nat)\n(ret triv)\n"), TypeError);
  EXPECT_ANY_THROW(parse_program("nohdr", "(ret triv)\n"));
}

TEST(Corpus, LoadsUnderEveryMonoid) {
  for (const auto& m : monoid_instances()) {
    EXPECT_EQ(load_corpus(*m).size(), 25u) << m->name();
  }
}
