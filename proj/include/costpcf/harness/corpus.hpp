#pragma once

#include <optional>
#include <string>
#include <vector>

#include "costpcf/cost.hpp"
#include "costpcf/term.hpp"
#include "costpcf/types.hpp"

namespace costpcf::harness {

/// What a corpus program is expected to do, from its `; expect:` header.
struct Expectation {
  bool diverges = false;
  std::optional<std::uint64_t> cost;
  /// Printed ground value, when the header names one.
  std::optional<std::string> value;
};

struct CorpusProgram {
  std::string name;
  std::string source;
  TermPtr term;
  CompType type;
  /// Absent for function-typed programs such as noninterference subjects.
  std::optional<Expectation> expect;
};

/// Parses one program with its `; type:` and `; expect:` headers. Costs are
/// literals of `monoid`; naturals in the headers are mapped with from_nat.
CorpusProgram parse_program(const std::string& name, const std::string& source,
                            const CostMonoid& monoid = *nat_monoid());

/// The bundled programs, sorted by name.
std::vector<CorpusProgram> load_corpus(const CostMonoid& monoid = *nat_monoid());

/// Corpus programs of type U F unit ⇀ F ans.
std::vector<CorpusProgram> noninterference_subjects(const std::vector<CorpusProgram>& corpus);

}  // namespace costpcf::harness
