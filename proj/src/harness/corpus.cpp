#include "costpcf/harness/corpus.hpp"

#include <sstream>
#include <stdexcept>
#include <string_view>

#include "costpcf/syntax.hpp"
#include "costpcf/typecheck.hpp"

namespace costpcf::detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_corpus();
}

namespace costpcf::harness {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Expectation parse_expectation(const std::string& name, const std::string& text) {
  std::istringstream in(text);
  std::string word;
  Expectation e;
  in >> word;
  if (word == "diverges") {
    e.diverges = true;
    return e;
  }
  if (word != "defined") throw std::invalid_argument(name + ": bad expect header");
  std::uint64_t cost = 0;
  if (!(in >> cost)) throw std::invalid_argument(name + ": expect header needs a cost");
  e.cost = cost;
  if (in >> word) {
    std::string value;
    if (word != "value" || !(in >> value)) {
      throw std::invalid_argument(name + ": bad expect header");
    }
    e.value = value;
  }
  return e;
}

}  // namespace

CorpusProgram parse_program(const std::string& name, const std::string& source,
                            const CostMonoid& monoid) {
  std::optional<CompType> type;
  std::optional<Expectation> expect;
  std::istringstream lines(source);
  std::string line;
  while (std::getline(lines, line)) {
    auto t = trim(line);
    if (t.rfind(';', 0) != 0) continue;
    auto body = trim(std::string_view(t).substr(1));
    if (body.rfind("type:", 0) == 0) {
      type = parse_comp_type(trim(std::string_view(body).substr(5)));
    } else if (body.rfind("expect:", 0) == 0) {
      expect = parse_expectation(name, trim(std::string_view(body).substr(7)));
    }
  }
  if (!type) throw std::invalid_argument(name + ": missing type header");
  auto term = parse(source, monoid);
  check_program(term, *type, &monoid);
  return CorpusProgram{name, source, std::move(term), *type, std::move(expect)};
}

std::vector<CorpusProgram> load_corpus(const CostMonoid& monoid) {
  std::vector<CorpusProgram> out;
  for (const auto& [name, text] : detail::embedded_corpus()) {
    out.push_back(parse_program(std::string(name), std::string(text), monoid));
  }
  return out;
}

std::vector<CorpusProgram> noninterference_subjects(const std::vector<CorpusProgram>& corpus) {
  static const CompType subject = CompType::arrow(
      ValueType::thunk(CompType::returner(ValueType::unit())),
      CompType::returner(ValueType::ans()));
  std::vector<CorpusProgram> out;
  for (const auto& p : corpus) {
    if (p.type == subject) out.push_back(p);
  }
  return out;
}

}  // namespace costpcf::harness
