#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "costpcf/machine.hpp"
#include "costpcf/semantics.hpp"

namespace costpcf::harness {

struct Failure {
  std::size_t case_index = 0;
  /// Which property was violated, e.g. "preservation" or "left-unit".
  std::string property;
  /// Printed terms making up the case.
  std::vector<std::string> terms;
  std::string left;
  std::string right;
  std::uint64_t fuel = 0;
};

struct CheckReport {
  std::string check;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  /// Shrunk form of the first failing case.
  std::optional<std::string> minimized;
  /// Optional per-property case counts, reported in this order.
  std::vector<std::pair<std::string, std::size_t>> breakdown;

  bool ok() const { return failures.empty(); }
};

/// Single-line JSON. At most `max_examples` failures are spelled out; the
/// total count is always reported.
std::string to_json(const CheckReport& r, std::size_t max_examples = 5);

std::string describe(const CostModel& m, const CostedOutcome& o);
std::string describe(const CostModel& m, const Observation& o);

}  // namespace costpcf::harness
