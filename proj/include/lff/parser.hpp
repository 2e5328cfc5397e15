#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lff/term.hpp"

namespace lff {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Functor of parenthesised tuples such as `(list,element)`.
Symbol tuple_functor();

/// Prolog-style syntax: lowercase or quoted atoms, integers, variables
/// starting with an uppercase letter or `_`, `[a,b|T]` lists, compound
/// terms, and `(a,b)` tuples. `%` starts a line comment.
Term parse_term(std::string_view text);
Literal parse_literal(std::string_view text);

/// `h :- b1, b2.`, `h.`, or `:- b1, b2.`; `<-` is accepted for `:-`.
/// The final period is optional.
Clause parse_clause(std::string_view text);

/// A sequence of period-terminated clauses.
std::vector<Clause> parse_clauses(std::string_view text);

struct Located {
  Clause clause;
  std::size_t line;
  std::size_t column;
};
std::vector<Located> parse_clauses_located(std::string_view text);

}  // namespace lff
