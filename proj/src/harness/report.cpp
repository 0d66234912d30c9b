#include "costpcf/harness/report.hpp"

#include <json.hpp>

#include "costpcf/syntax.hpp"

namespace costpcf::harness {

std::string to_json(const CheckReport& r, std::size_t max_examples) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["cases"] = r.cases;
  j["failures"] = r.failures.size();
  j["ok"] = r.ok();
  auto examples = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < max_examples; ++i) {
    const auto& f = r.failures[i];
    nlohmann::ordered_json e;
    e["case"] = f.case_index;
    e["property"] = f.property;
    e["terms"] = f.terms;
    e["left"] = f.left;
    e["right"] = f.right;
    e["fuel"] = f.fuel;
    examples.push_back(std::move(e));
  }
  j["examples"] = std::move(examples);
  if (!r.breakdown.empty()) {
    nlohmann::ordered_json b;
    for (const auto& [k, v] : r.breakdown) b[k] = v;
    j["breakdown"] = std::move(b);
  }
  j["minimized"] = r.minimized ? nlohmann::ordered_json(*r.minimized) : nullptr;
  return j.dump();
}

std::string describe(const CostModel& m, const CostedOutcome& o) {
  if (const auto* d = std::get_if<outcome::Defined>(&o)) {
    return "defined " + m.print(d->cost);
  }
  if (const auto* x = std::get_if<outcome::Mismatch>(&o)) {
    return "mismatch " + print(x->reached, *m.monoid);
  }
  return "exhausted " + std::to_string(std::get<outcome::Exhausted>(o).fuel_used);
}

std::string describe(const CostModel& m, const Observation& o) {
  if (const auto* d = std::get_if<observation::Defined>(&o)) {
    return "defined " + m.print(d->cost) + " " + to_string(d->value);
  }
  return "exhausted " + std::to_string(std::get<observation::Exhausted>(o).fuel);
}

}  // namespace costpcf::harness
