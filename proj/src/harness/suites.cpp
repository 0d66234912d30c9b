#include "costpcf/harness/suites.hpp"

#include <stdexcept>
#include <string>

#include "costpcf/harness/generator.hpp"
#include "costpcf/typecheck.hpp"

namespace costpcf::harness {

namespace {

CompType F(ValueType a) { return CompType::returner(std::move(a)); }

// Independent seed streams per suite.
std::uint64_t stream(std::uint64_t seed, std::uint64_t tag) { return mix_seed(seed, tag << 40); }

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {
      "laws", "machine", "sequencing", "soundness", "adequacy", "noninterference"};
  return names;
}

bool is_suite(std::string_view name) {
  if (name == "all") return true;
  for (auto n : suite_names()) {
    if (n == name) return true;
  }
  return false;
}

std::size_t default_cases(std::string_view suite) {
  if (suite == "laws") return 1000;
  if (suite == "machine") return 500;
  if (suite == "sequencing") return 200;
  if (suite == "soundness") return 500;
  if (suite == "adequacy") return 200;
  if (suite == "noninterference") return 100;
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

std::vector<TermPtr> ground_programs(const std::vector<CorpusProgram>& corpus,
                                     const CostMonoid& monoid) {
  std::vector<TermPtr> out;
  for (const auto& p : corpus) {
    if (p.type.kind() == CompType::Kind::Returner && p.type.value().is_ground()) {
      out.push_back(p.term);
    }
  }
  for (const auto& p : noninterference_subjects(corpus)) {
    out.push_back(mk::ap(p.term, mk::ret(mk::triv())));
    out.push_back(mk::ap(p.term, mk::step(monoid.from_nat(3), mk::ret(mk::triv()))));
  }
  return out;
}

std::vector<TermPtr> unit_programs(const std::vector<TermPtr>& programs) {
  const auto unit = F(ValueType::unit());
  std::vector<TermPtr> out;
  for (const auto& e : programs) {
    if (has_type(e, unit)) {
      out.push_back(e);
    } else {
      out.push_back(mk::bind(e, mk::ret(mk::triv())));
    }
  }
  return out;
}

std::vector<TermPtr> gen_programs(std::size_t count, std::uint64_t seed,
                                  const std::vector<CompType>& targets, std::size_t min_depth,
                                  std::size_t max_depth, double fix_probability,
                                  const MonoidPtr& monoid) {
  std::vector<TermPtr> out;
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig c;
    c.seed = mix_seed(seed, i);
    c.target = targets[i % targets.size()];
    c.max_depth = min_depth + i % (max_depth - min_depth + 1);
    c.fix_probability = fix_probability;
    c.monoid = monoid;
    out.push_back(gen_term(c));
  }
  return out;
}

std::vector<CheckReport> run_suite(std::string_view name, const CheckOptions& opts,
                                   std::optional<std::size_t> cases) {
  if (name == "all") {
    std::vector<CheckReport> all;
    for (auto n : suite_names()) {
      auto r = run_suite(n, opts, cases);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  const std::size_t n = cases.value_or(default_cases(name));
  const auto& monoid = opts.model.monoid;
  const auto unit = F(ValueType::unit());
  const auto nat = F(ValueType::nat());
  const auto ans = F(ValueType::ans());

  if (name == "laws") return {check_laws(n, opts)};
  if (name == "machine") {
    const std::vector<CompType> targets = {
        unit, nat, ans, F(ValueType::thunk(nat)), CompType::arrow(ValueType::nat(), nat)};
    return {check_machine(gen_programs(n, stream(opts.seed, 1), targets, 2, 8, 0.1, monoid), opts)};
  }
  if (name == "sequencing") {
    std::vector<SequencingInstance> all;
    std::uint64_t tag = 0;
    for (auto law : {SequencingLaw::Sequence, SequencingLaw::Profile, SequencingLaw::Reassociate,
                     SequencingLaw::ApplySequence}) {
      auto batch = gen_sequencing_instances(law, n, stream(opts.seed, 10 + tag++), monoid);
      all.insert(all.end(), batch.begin(), batch.end());
    }
    return {check_sequencing_laws(all, opts)};
  }

  const auto corpus = load_corpus(*monoid);
  if (name == "soundness") {
    auto programs = ground_programs(corpus, *monoid);
    auto extra = gen_programs(n, stream(opts.seed, 2), {unit, ans, nat}, 2, 6, 0.1, monoid);
    programs.insert(programs.end(), extra.begin(), extra.end());
    return {check_soundness(programs, opts)};
  }
  if (name == "adequacy") {
    auto programs = unit_programs(ground_programs(corpus, *monoid));
    auto extra = gen_programs(n, stream(opts.seed, 3), {unit}, 2, 6, 0.15, monoid);
    programs.insert(programs.end(), extra.begin(), extra.end());
    return {check_adequacy(programs, opts)};
  }
  if (name == "noninterference") {
    const auto subject = CompType::arrow(ValueType::thunk(unit), ans);
    std::vector<TermPtr> functions;
    for (const auto& p : noninterference_subjects(corpus)) functions.push_back(p.term);
    auto extra = gen_programs(n, stream(opts.seed, 4), {subject}, 3, 6, 0.05, monoid);
    functions.insert(functions.end(), extra.begin(), extra.end());
    return {check_noninterference(functions, gen_argument_pairs(20, stream(opts.seed, 5), monoid),
                                  opts)};
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace costpcf::harness
