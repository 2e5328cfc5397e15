#pragma once

#include <map>
#include <optional>
#include <string>

#include "lff/term.hpp"

namespace lff {

/// Finite map from variables to terms. Identity bindings are never stored.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Symbol, Term>> bindings);

  /// Binds `var` to `t`; binding a variable to itself is a no-op.
  void bind(Symbol var, Term t);
  const Term* lookup(Symbol var) const;

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::map<Symbol, Term>& bindings() const { return bindings_; }

  /// Resolves binding chains so that applying the result once is idempotent.
  /// Fails (returns nullopt) on a cyclic chain.
  std::optional<Substitution> closure() const;

  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Symbol, Term> bindings_;
};

// Simultaneous replacement: bound variables are replaced by their bindings
// without re-applying the substitution to the inserted terms.
Term apply(const Substitution& s, const Term& t);
Literal apply(const Substitution& s, const Literal& l);
Clause apply(const Substitution& s, const Clause& c);

/// Most general unifier of two literals (with occurs check), fully resolved.
std::optional<Substitution> unify(const Literal& a, const Literal& b);
std::optional<Substitution> unify(const Term& a, const Term& b);

}  // namespace lff
