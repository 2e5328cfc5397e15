#include "lff/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "lff/canonical.hpp"

namespace lff {

Symbol Term::cons_functor() {
  static const Symbol s(".");
  return s;
}

Symbol Term::nil_symbol() {
  static const Symbol s("[]");
  return s;
}

Term Term::variable(Symbol name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.symbol_ = name;
  return t;
}

Term Term::atom(Symbol name) {
  Term t;
  t.kind_ = Kind::Atom;
  t.symbol_ = name;
  return t;
}

Term Term::integer(std::int64_t value) {
  Term t;
  t.kind_ = Kind::Integer;
  t.value_ = value;
  return t;
}

Term Term::compound(Symbol functor, std::vector<Term> args) {
  if (args.empty()) return atom(functor);
  Term t;
  t.kind_ = Kind::Compound;
  t.symbol_ = functor;
  t.args_ = std::make_shared<const std::vector<Term>>(std::move(args));
  return t;
}

Term Term::nil() { return atom(nil_symbol()); }

Term Term::cons(Term head, Term tail) {
  return compound(cons_functor(), {std::move(head), std::move(tail)});
}

Term Term::list(std::span<const Term> items, std::optional<Term> tail) {
  Term result = tail ? *tail : nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) result = cons(*it, result);
  return result;
}

bool Term::is_cons() const {
  return kind_ == Kind::Compound && symbol_ == cons_functor() && args_->size() == 2;
}

bool Term::is_nil() const { return kind_ == Kind::Atom && symbol_ == nil_symbol(); }

std::span<const Term> Term::args() const {
  if (!args_) return {};
  return {args_->data(), args_->size()};
}

bool Term::is_ground() const {
  switch (kind_) {
    case Kind::Variable:
      return false;
    case Kind::Compound:
      return std::all_of(args_->begin(), args_->end(), [](const Term& a) { return a.is_ground(); });
    default:
      return true;
  }
}

void Term::collect_variables(std::vector<Symbol>& out) const {
  if (kind_ == Kind::Variable) {
    if (std::find(out.begin(), out.end(), symbol_) == out.end()) out.push_back(symbol_);
  } else if (kind_ == Kind::Compound) {
    for (const auto& a : *args_) a.collect_variables(out);
  }
}

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::Variable:
    case Kind::Atom:
      return std::string(symbol_.name());
    case Kind::Integer:
      return std::to_string(value_);
    case Kind::Compound:
      break;
  }
  if (is_cons()) {
    std::string out = "[";
    const Term* cur = this;
    bool first = true;
    while (cur->is_cons()) {
      if (!first) out += ",";
      first = false;
      out += cur->args()[0].to_string();
      cur = &cur->args()[1];
    }
    if (!cur->is_nil()) out += "|" + cur->to_string();
    return out + "]";
  }
  std::string out(symbol_.name());
  out += "(";
  for (std::size_t i = 0; i < args_->size(); ++i) {
    if (i) out += ",";
    out += (*args_)[i].to_string();
  }
  return out + ")";
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Term::Kind::Variable:
    case Term::Kind::Atom:
      return a.symbol_ == b.symbol_;
    case Term::Kind::Integer:
      return a.value_ == b.value_;
    case Term::Kind::Compound:
      if (a.symbol_ != b.symbol_ || a.args_->size() != b.args_->size()) return false;
      return a.args_ == b.args_ || std::equal(a.args_->begin(), a.args_->end(), b.args_->begin());
  }
  return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Term::Kind::Variable:
    case Term::Kind::Atom:
      return a.symbol_ <=> b.symbol_;
    case Term::Kind::Integer:
      return a.value_ <=> b.value_;
    case Term::Kind::Compound:
      if (auto c = a.symbol_ <=> b.symbol_; c != 0) return c;
      if (auto c = a.args_->size() <=> b.args_->size(); c != 0) return c;
      for (std::size_t i = 0; i < a.args_->size(); ++i) {
        if (auto c = (*a.args_)[i] <=> (*b.args_)[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

Literal::Literal(Symbol predicate, std::vector<Term> args)
    : predicate_(predicate), args_(std::move(args)) {
  if (predicate_.empty()) throw std::invalid_argument("literal predicate must be nonempty");
}

bool Literal::is_ground() const {
  return std::all_of(args_.begin(), args_.end(), [](const Term& t) { return t.is_ground(); });
}

void Literal::collect_variables(std::vector<Symbol>& out) const {
  for (const auto& a : args_) a.collect_variables(out);
}

std::string Literal::to_string() const {
  std::string out(predicate_.name());
  if (args_.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ",";
    out += args_[i].to_string();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Symbol> Clause::variables() const {
  std::vector<Symbol> vars;
  if (head) head->collect_variables(vars);
  for (const auto& l : body) l.collect_variables(vars);
  return vars;
}

std::string Clause::to_string() const {
  std::string out;
  if (head) out += head->to_string();
  if (!body.empty()) {
    out += ":- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += body[i].to_string();
    }
  }
  return out + ".";
}

Program::Program(std::initializer_list<Clause> clauses) {
  for (const auto& c : clauses) insert(c);
}

Program::Program(std::vector<Clause> clauses) {
  for (auto& c : clauses) insert(std::move(c));
}

bool Program::insert(Clause c) {
  if (c.size() == 0) return false;
  ClauseKey key = canonical_clause_key(c);
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return false;
  keys_.push_back(std::move(key));
  clauses_.push_back(std::move(c));
  return true;
}

std::string Program::to_string() const {
  std::vector<std::string> lines;
  lines.reserve(clauses_.size());
  for (const auto& c : clauses_) lines.push_back(canonical_clause(c).to_string());
  std::sort(lines.begin(), lines.end(), [](const std::string& a, const std::string& b) {
    // Headed clauses before goal clauses, then by text.
    const bool ga = a.starts_with(":-"), gb = b.starts_with(":-");
    if (ga != gb) return gb;
    return a < b;
  });
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace lff
