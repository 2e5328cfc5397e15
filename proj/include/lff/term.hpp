#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lff/symbol.hpp"

namespace lff {

/// First-order term: variable, atom, integer, or compound.
///
/// Lists are right-nested `'.'/2` cells terminated by the atom `[]`.
/// Terms are immutable; copies share compound arguments.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Atom, Integer, Compound };

  static Term variable(Symbol name);
  static Term variable(std::string_view name) { return variable(Symbol(name)); }
  static Term atom(Symbol name);
  static Term atom(std::string_view name) { return atom(Symbol(name)); }
  static Term integer(std::int64_t value);
  static Term compound(Symbol functor, std::vector<Term> args);

  static Term nil();
  static Term cons(Term head, Term tail);
  static Term list(std::span<const Term> items, std::optional<Term> tail = std::nullopt);

  static Symbol cons_functor();
  static Symbol nil_symbol();

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_integer() const { return kind_ == Kind::Integer; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  bool is_cons() const;
  bool is_nil() const;

  /// Variable name, atom name, or compound functor.
  Symbol symbol() const { return symbol_; }
  std::int64_t value() const { return value_; }
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }

  bool is_ground() const;
  void collect_variables(std::vector<Symbol>& out) const;

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::Atom;
  Symbol symbol_;
  std::int64_t value_ = 0;
  std::shared_ptr<const std::vector<Term>> args_;
};

class Literal {
 public:
  Literal() = default;
  Literal(Symbol predicate, std::vector<Term> args);
  Literal(std::string_view predicate, std::vector<Term> args)
      : Literal(Symbol(predicate), std::move(args)) {}

  Symbol predicate() const { return predicate_; }
  std::size_t arity() const { return args_.size(); }
  PredicateKey key() const { return {predicate_, args_.size()}; }
  const std::vector<Term>& args() const { return args_; }

  bool is_ground() const;
  void collect_variables(std::vector<Symbol>& out) const;
  std::string to_string() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  Symbol predicate_;
  std::vector<Term> args_;
};

/// Definite clause (head present) or goal clause (head absent).
struct Clause {
  std::optional<Literal> head;
  std::vector<Literal> body;

  Clause() = default;
  Clause(std::optional<Literal> h, std::vector<Literal> b) : head(std::move(h)), body(std::move(b)) {}

  bool is_goal() const { return !head.has_value(); }
  std::size_t size() const { return body.size() + (head ? 1 : 0); }
  /// Distinct variables in first-occurrence order (head first).
  std::vector<Symbol> variables() const;
  std::string to_string() const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Set of clauses, deduplicated up to variable renaming and body order.
class Program {
 public:
  Program() = default;
  Program(std::initializer_list<Clause> clauses);
  explicit Program(std::vector<Clause> clauses);

  /// Adds `c` unless an alpha-equivalent clause is present. Returns true if added.
  bool insert(Clause c);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// Canonical keys of clauses(), index-aligned.
  const std::vector<std::vector<std::int64_t>>& clause_keys() const { return keys_; }

  /// One clause per line, in canonical order.
  std::string to_string() const;

 private:
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::int64_t>> keys_;
};

}  // namespace lff
