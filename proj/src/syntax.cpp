#include "costpcf/syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace costpcf {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::set<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

const std::set<std::string> kKeywords = {
    "triv", "yes", "no",  "zero", "succ", "ret", "step", "bind", "ifz",
    "fix",  "lam", "ap",  "unit", "ans",  "nat", "U",    "F",    "->"};

const std::set<std::string> kTermStart = {"(", "identifier", "numeral", "triv",
                                          "yes", "no", "zero", "#index"};
const std::set<std::string> kTermHeads = {"succ", "ret", "step", "bind",
                                          "ifz",  "fix", "lam",  "ap"};
const std::set<std::string> kValueTypeStart = {"unit", "ans", "nat", "(U"};
const std::set<std::string> kCompTypeStart = {"(F", "(->"};

struct Token {
  enum class Kind { LParen, RParen, Atom, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::End, "end of input", line_, col_});
        return out;
      }
      std::size_t line = line_, col = col_;
      char c = src_[pos_];
      if (c == '(' || c == ')') {
        advance();
        out.push_back({c == '(' ? Token::Kind::LParen : Token::Kind::RParen,
                       std::string(1, c), line, col});
      } else if (c == '[' || c == '{') {
        char close = c == '[' ? ']' : '}';
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != close) advance();
        if (pos_ >= src_.size()) {
          throw ParseError(line, col, "unterminated cost literal",
                           {std::string(1, close)});
        }
        advance();
        out.push_back({Token::Kind::Atom,
                       std::string(src_.substr(start, pos_ - start)), line, col});
      } else {
        std::size_t start = pos_;
        while (pos_ < src_.size() && !std::isspace(uc(src_[pos_])) &&
               src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
          advance();
        }
        out.push_back({Token::Kind::Atom,
                       std::string(src_.substr(start, pos_ - start)), line, col});
      }
    }
  }

 private:
  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      if (std::isspace(uc(src_[pos_]))) {
        advance();
      } else if (src_[pos_] == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || kKeywords.count(s)) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
          c == '-')) {
      return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> as_number(std::string_view s) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, const CostMonoid& monoid)
      : tokens_(Lexer(src).run()), monoid_(monoid) {}

  TermPtr whole_term() {
    auto t = term();
    expect_end();
    return t;
  }
  ValueType whole_value_type() {
    auto t = value_type();
    expect_end();
    return t;
  }
  CompType whole_comp_type() {
    auto t = comp_type();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what,
                         std::set<std::string> expected) const {
    throw ParseError(at.line, at.column,
                     what + ", found '" + at.text + "'", std::move(expected));
  }

  void expect_end() {
    if (peek().kind != Token::Kind::End) {
      fail(peek(), "trailing input after term", {"end of input"});
    }
  }

  void expect_rparen() {
    if (peek().kind != Token::Kind::RParen) fail(peek(), "expected ')'", {")"});
    next();
  }

  void expect_lparen(std::set<std::string> expected) {
    if (peek().kind != Token::Kind::LParen) {
      fail(peek(), "expected '('", std::move(expected));
    }
    next();
  }

  std::string binder_name() {
    const Token& t = next();
    if (t.kind != Token::Kind::Atom || !is_identifier(t.text)) {
      fail(t, "expected a binder name", {"identifier"});
    }
    return t.text;
  }

  TermPtr under(const std::string& name) {
    scope_.push_back(name);
    auto body = term();
    scope_.pop_back();
    return body;
  }

  TermPtr atom_term(const Token& t) {
    if (t.text == "triv") return mk::triv();
    if (t.text == "yes") return mk::yes();
    if (t.text == "no") return mk::no();
    if (t.text == "zero") return mk::zero();
    if (auto n = as_number(t.text)) return mk::numeral(*n);
    if (t.text.size() > 1 && t.text[0] == '#') {
      if (auto k = as_number(std::string_view(t.text).substr(1))) {
        return mk::var(scope_.size() + *k);
      }
    }
    if (is_identifier(t.text)) {
      for (std::size_t i = scope_.size(); i-- > 0;) {
        if (scope_[i] == t.text) return mk::var(scope_.size() - 1 - i);
      }
      throw ParseError(t.line, t.column, "unbound variable '" + t.text + "'");
    }
    fail(t, "expected a term", kTermStart);
  }

  TermPtr term() {
    const Token& t = next();
    if (t.kind == Token::Kind::Atom) return atom_term(t);
    if (t.kind != Token::Kind::LParen) fail(t, "expected a term", kTermStart);
    const Token& head = next();
    if (head.kind != Token::Kind::Atom || !kTermHeads.count(head.text)) {
      fail(head, "expected a term former", kTermHeads);
    }
    TermPtr out;
    const std::string& h = head.text;
    if (h == "succ") {
      out = mk::succ(term());
    } else if (h == "ret") {
      out = mk::ret(term());
    } else if (h == "step") {
      const Token& lit = next();
      if (lit.kind != Token::Kind::Atom) fail(lit, "expected a cost literal", {"cost"});
      Cost c;
      try {
        c = monoid_.parse(lit.text);
      } catch (const CostError& e) {
        throw ParseError(lit.line, lit.column, e.what(), {"cost"});
      }
      out = mk::step(std::move(c), term());
    } else if (h == "bind") {
      auto head_term = term();
      auto name = binder_name();
      out = mk::bind(std::move(head_term), under(name));
    } else if (h == "ifz") {
      auto scrut = term();
      auto zcase = term();
      auto name = binder_name();
      out = mk::ifz(std::move(scrut), std::move(zcase), under(name));
    } else if (h == "fix") {
      auto name = binder_name();
      out = mk::fix(under(name));
    } else if (h == "lam") {
      auto dom = value_type();
      auto name = binder_name();
      out = mk::lam(std::move(dom), under(name));
    } else {
      auto fun = term();
      out = mk::ap(std::move(fun), term());
      while (peek().kind != Token::Kind::RParen &&
             peek().kind != Token::Kind::End) {
        out = mk::ap(out, term());
      }
    }
    expect_rparen();
    return out;
  }

  ValueType value_type() {
    const Token& t = next();
    if (t.kind == Token::Kind::Atom) {
      if (t.text == "unit") return ValueType::unit();
      if (t.text == "ans") return ValueType::ans();
      if (t.text == "nat") return ValueType::nat();
      fail(t, "expected a value type", kValueTypeStart);
    }
    if (t.kind != Token::Kind::LParen) fail(t, "expected a value type", kValueTypeStart);
    const Token& head = next();
    if (head.text != "U") fail(head, "expected a value type", kValueTypeStart);
    auto x = comp_type();
    expect_rparen();
    return ValueType::thunk(std::move(x));
  }

  CompType comp_type() {
    expect_lparen(kCompTypeStart);
    const Token& head = next();
    if (head.text == "F") {
      auto a = value_type();
      expect_rparen();
      return CompType::returner(std::move(a));
    }
    if (head.text == "->") {
      auto dom = value_type();
      auto cod = comp_type();
      expect_rparen();
      return CompType::arrow(std::move(dom), std::move(cod));
    }
    fail(head, "expected a computation type", kCompTypeStart);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const CostMonoid& monoid_;
  std::vector<std::string> scope_;
};

std::string level_name(std::size_t level) {
  return level == 0 ? "x" : "x" + std::to_string(level);
}

class Printer {
 public:
  explicit Printer(const CostMonoid& m) : monoid_(m) {}

  void term(const TermPtr& t, std::size_t depth) {
    if (const auto* v = t->as<node::Var>()) {
      if (v->index < depth) {
        out_ += level_name(depth - 1 - v->index);
      } else {
        out_ += "#" + std::to_string(v->index - depth);
      }
    } else if (t->is<node::Triv>()) {
      out_ += "triv";
    } else if (t->is<node::Yes>()) {
      out_ += "yes";
    } else if (t->is<node::No>()) {
      out_ += "no";
    } else if (t->is<node::Zero>()) {
      out_ += "zero";
    } else if (const auto* s = t->as<node::Succ>()) {
      if (auto n = as_numeral(t)) {
        out_ += std::to_string(*n);
      } else {
        open("succ");
        term(s->pred, depth);
        out_ += ')';
      }
    } else if (const auto* r = t->as<node::Ret>()) {
      open("ret");
      term(r->value, depth);
      out_ += ')';
    } else if (const auto* st = t->as<node::Step>()) {
      open("step");
      out_ += monoid_.print(st->cost) + " ";
      term(st->body, depth);
      out_ += ')';
    } else if (const auto* b = t->as<node::Bind>()) {
      open("bind");
      term(b->head, depth);
      out_ += " " + level_name(depth) + " ";
      term(b->cont, depth + 1);
      out_ += ')';
    } else if (const auto* i = t->as<node::Ifz>()) {
      open("ifz");
      term(i->scrut, depth);
      out_ += ' ';
      term(i->zcase, depth);
      out_ += " " + level_name(depth) + " ";
      term(i->scase, depth + 1);
      out_ += ')';
    } else if (const auto* f = t->as<node::Fix>()) {
      open("fix");
      out_ += level_name(depth) + " ";
      term(f->body, depth + 1);
      out_ += ')';
    } else if (const auto* l = t->as<node::Lam>()) {
      open("lam");
      out_ += to_sexpr(l->dom) + " " + level_name(depth) + " ";
      term(l->body, depth + 1);
      out_ += ')';
    } else if (const auto* a = t->as<node::Ap>()) {
      open("ap");
      term(a->fun, depth);
      out_ += ' ';
      term(a->arg, depth);
      out_ += ')';
    }
  }

  std::string take() { return std::move(out_); }

 private:
  void open(const char* head) {
    out_ += '(';
    out_ += head;
    out_ += ' ';
  }

  const CostMonoid& monoid_;
  std::string out_;
};

}  // namespace

TermPtr parse(std::string_view source, const CostMonoid& monoid) {
  return Parser(source, monoid).whole_term();
}

ValueType parse_value_type(std::string_view source) {
  return Parser(source, *nat_monoid()).whole_value_type();
}

CompType parse_comp_type(std::string_view source) {
  return Parser(source, *nat_monoid()).whole_comp_type();
}

std::string print(const TermPtr& t, const CostMonoid& monoid) {
  Printer p(monoid);
  p.term(t, 0);
  return p.take();
}

}  // namespace costpcf
