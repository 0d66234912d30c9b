#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "costpcf/harness/checks.hpp"
#include "costpcf/harness/corpus.hpp"

namespace costpcf::harness {

/// Individual suites, in the order `all` runs them.
const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

/// Default number of cases for a suite when none is requested.
std::size_t default_cases(std::string_view suite);

/// Runs one suite (or every suite, for "all") on the bundled corpus and
/// generated inputs. Throws std::invalid_argument for an unknown name.
std::vector<CheckReport> run_suite(std::string_view name, const CheckOptions& opts,
                                   std::optional<std::size_t> cases = std::nullopt);

/// Closed corpus programs of ground returner type, plus every
/// noninterference subject applied to a free and a costly argument.
std::vector<TermPtr> ground_programs(const std::vector<CorpusProgram>& corpus,
                                     const CostMonoid& monoid = *nat_monoid());

/// `bind e (x. ret triv)` for programs not already of type F unit.
std::vector<TermPtr> unit_programs(const std::vector<TermPtr>& programs);

/// Generated closed programs cycling through `targets`, with depths cycling
/// through [min_depth, max_depth].
std::vector<TermPtr> gen_programs(std::size_t count, std::uint64_t seed,
                                  const std::vector<CompType>& targets, std::size_t min_depth,
                                  std::size_t max_depth, double fix_probability,
                                  const MonoidPtr& monoid);

}  // namespace costpcf::harness
