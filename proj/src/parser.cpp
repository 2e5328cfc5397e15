#include "lff/parser.hpp"

#include <cctype>
#include <charconv>

namespace lff {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Symbol tuple_functor() {
  static const Symbol s("$tuple");
  return s;
}

namespace {

enum class Tok { Atom, Var, Int, LParen, RParen, LBracket, RBracket, Bar, Comma, Neck, End, Eof };

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= s_.size()) {
      t.kind = Tok::Eof;
      return t;
    }
    const char c = s_[pos_];
    auto single = [&](Tok k) {
      advance();
      t.kind = k;
      t.text = std::string(1, c);
      return t;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '|': return single(Tok::Bar);
      case ',': return single(Tok::Comma);
      case '.': return single(Tok::End);
      default: break;
    }
    if ((c == ':' || c == '<') && peek(1) == '-') {
      advance();
      advance();
      t.kind = Tok::Neck;
      t.text = c == ':' ? ":-" : "<-";
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      const std::size_t start = pos_;
      advance();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
      t.kind = Tok::Int;
      t.text = std::string(s_.substr(start, pos_ - start));
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc()) throw ParseError("integer out of range: " + t.text, t.line, t.column);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        advance();
      }
      t.text = std::string(s_.substr(start, pos_ - start));
      t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Var : Tok::Atom;
      return t;
    }
    if (c == '\'') {
      advance();
      std::string text;
      while (pos_ < s_.size() && s_[pos_] != '\'') {
        text += s_[pos_];
        advance();
      }
      if (pos_ >= s_.size()) throw ParseError("unterminated quoted atom", t.line, t.column);
      advance();
      if (text.empty()) throw ParseError("empty quoted atom", t.line, t.column);
      t.kind = Tok::Atom;
      t.text = std::move(text);
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        advance();
      } else if (s_[pos_] == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { cur_ = lex_.next(); }

  bool at(Tok k) const { return cur_.kind == k; }
  const Token& current() const { return cur_; }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const std::string found = cur_.kind == Tok::Eof ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(msg + ", found " + found, cur_.line, cur_.column);
  }

  Term term() {
    switch (cur_.kind) {
      case Tok::Var: {
        Token t = expect(Tok::Var, "variable");
        // Each bare `_` is a fresh anonymous variable.
        if (t.text == "_") return Term::variable("_G" + std::to_string(anon_++));
        return Term::variable(t.text);
      }
      case Tok::Int: return Term::integer(expect(Tok::Int, "integer").value);
      case Tok::LBracket: return list();
      case Tok::LParen: return tuple();
      case Tok::Atom: {
        Token t = expect(Tok::Atom, "atom");
        if (!at(Tok::LParen)) return Term::atom(t.text);
        return Term::compound(Symbol(t.text), arguments());
      }
      default: fail("expected a term");
    }
  }

  Literal literal() {
    if (!at(Tok::Atom)) fail("expected a predicate name");
    Token t = expect(Tok::Atom, "predicate");
    std::vector<Term> args;
    if (at(Tok::LParen)) args = arguments();
    return Literal(Symbol(t.text), std::move(args));
  }

  // Clause up to but excluding the terminating period.
  Clause clause() {
    std::optional<Literal> head;
    std::vector<Literal> body;
    if (!at(Tok::Neck)) head = literal();
    if (at(Tok::Neck)) {
      expect(Tok::Neck, "':-'");
      body.push_back(literal());
      while (at(Tok::Comma)) {
        expect(Tok::Comma, "','");
        body.push_back(literal());
      }
    }
    return Clause(std::move(head), std::move(body));
  }

 private:
  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    if (at(Tok::RParen)) fail("expected an argument");
    args.push_back(term());
    while (at(Tok::Comma)) {
      expect(Tok::Comma, "','");
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term list() {
    expect(Tok::LBracket, "'['");
    std::vector<Term> items;
    std::optional<Term> tail;
    if (!at(Tok::RBracket)) {
      items.push_back(term());
      while (at(Tok::Comma)) {
        expect(Tok::Comma, "','");
        items.push_back(term());
      }
      if (at(Tok::Bar)) {
        expect(Tok::Bar, "'|'");
        tail = term();
      }
    }
    expect(Tok::RBracket, "']'");
    return Term::list(items, tail);
  }

  Term tuple() {
    expect(Tok::LParen, "'('");
    std::vector<Term> items;
    while (!at(Tok::RParen)) {
      items.push_back(term());
      if (!at(Tok::Comma)) break;
      expect(Tok::Comma, "','");
    }
    expect(Tok::RParen, "')'");
    return Term::compound(tuple_functor(), std::move(items));
  }

  Lexer lex_;
  Token cur_;
  std::size_t anon_ = 0;
};

template <typename F>
auto parse_whole(std::string_view text, F&& f) {
  Parser p(text);
  auto result = f(p);
  if (p.at(Tok::End)) p.expect(Tok::End, "'.'");
  if (!p.at(Tok::Eof)) p.fail("expected end of input");
  return result;
}

}  // namespace

Term parse_term(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.term(); });
}

Literal parse_literal(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.literal(); });
}

Clause parse_clause(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.clause(); });
}

std::vector<Located> parse_clauses_located(std::string_view text) {
  Parser p(text);
  std::vector<Located> out;
  while (!p.at(Tok::Eof)) {
    const auto line = p.current().line, col = p.current().column;
    Clause c = p.clause();
    p.expect(Tok::End, "'.'");
    out.push_back({std::move(c), line, col});
  }
  return out;
}

std::vector<Clause> parse_clauses(std::string_view text) {
  std::vector<Clause> out;
  for (auto& l : parse_clauses_located(text)) out.push_back(std::move(l.clause));
  return out;
}

}  // namespace lff
