// One PASS/FAIL line per acceptance criterion. Case counts, fuel and time
// limits are fixed here.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "costpcf/harness/checks.hpp"
#include "costpcf/harness/corpus.hpp"
#include "costpcf/harness/report.hpp"
#include "costpcf/harness/suites.hpp"

using namespace costpcf;
using namespace costpcf::harness;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

bool all_passed = true;

void criterion(int n, const std::string& name, double limit_s, const std::function<Verdict()>& body) {
  auto start = Clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_time = secs < limit_s;
  bool pass = v.ok && in_time;
  all_passed = all_passed && pass;
  std::printf("%s %d %s: %s; %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", n, name.c_str(),
              v.detail.c_str(), secs, limit_s, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
}

Verdict single(const CheckReport& r, std::size_t min_cases) {
  bool ok = r.ok() && r.cases >= min_cases;
  std::string d = std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) +
                  " failures";
  if (!r.ok()) d += " " + to_json(r, 1);
  return {ok, d};
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* p = ::popen(command.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = ::pclose(p);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: costpcf_acceptance <path to costpcf>\n";
    return 2;
  }
  const std::string cli = argv[1];

  criterion(1, "monad and cost-algebra laws", 10, [] {
    CheckOptions o;
    o.fuel = 10000;
    auto r = check_laws(1000, o);
    bool per_law = r.breakdown.size() == 13;
    for (const auto& [law, count] : r.breakdown) per_law = per_law && count == 1000;
    auto v = single(r, 13000);
    return Verdict{v.ok && per_law, v.detail + ", 1000 per law x " + std::to_string(r.breakdown.size())};
  });

  criterion(2, "machine metatheory", 30, [] {
    CheckOptions o;
    return single(run_suite("machine", o, 500).at(0), 500);
  });

  criterion(3, "sequencing laws", 60, [] {
    CheckOptions o;
    auto r = run_suite("sequencing", o, 200).at(0);
    bool each = r.breakdown.size() == 4;
    std::string counts;
    for (const auto& [law, count] : r.breakdown) {
      each = each && count >= 200;
      counts += " " + law + "=" + std::to_string(count);
    }
    auto v = single(r, 800);
    return Verdict{v.ok && each, v.detail + ";" + counts};
  });

  criterion(4, "soundness on the corpus", 60, [] {
    CheckOptions o;
    o.fuel = 100000;
    auto corpus = load_corpus();
    auto programs = ground_programs(corpus);
    return single(check_soundness(programs, o), programs.size());
  });

  criterion(5, "adequacy", 120, [] {
    CheckOptions o;
    auto r = run_suite("adequacy", o, 200).at(0);
    auto corpus_size = unit_programs(ground_programs(load_corpus())).size();
    return single(r, corpus_size + 200);
  });

  criterion(6, "noninterference", 120, [] {
    CheckOptions o;
    return single(run_suite("noninterference", o, 100).at(0), 100 * 20);
  });

  criterion(7, "determinism of check all", 600, [&] {
    const std::string cmd = "\"" + cli + "\" check all --seed 1 2>&1";
    int s1 = 0;
    int s2 = 0;
    auto a = capture(cmd, s1);
    auto b = capture(cmd, s2);
    bool same = !a.empty() && a == b && s1 == s2;
    return Verdict{same, std::to_string(a.size()) + " bytes, " + (same ? "identical" : "different") +
                             ", exit " + std::to_string(s1)};
  });

  return all_passed ? 0 : 1;
}
