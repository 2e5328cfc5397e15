#include "lff/substitution.hpp"

#include <set>
#include <utility>
#include <vector>

namespace lff {

Substitution::Substitution(std::initializer_list<std::pair<const Symbol, Term>> bindings) {
  for (const auto& [v, t] : bindings) bind(v, t);
}

void Substitution::bind(Symbol var, Term t) {
  if (t.is_variable() && t.symbol() == var) {
    bindings_.erase(var);
    return;
  }
  bindings_.insert_or_assign(var, std::move(t));
}

const Term* Substitution::lookup(Symbol var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

namespace {

// Fully dereferences `t` through `s`; `active` guards against cycles.
std::optional<Term> resolve(const Substitution& s, const Term& t, std::set<Symbol>& active) {
  if (t.is_variable()) {
    const Term* b = s.lookup(t.symbol());
    if (!b) return t;
    if (!active.insert(t.symbol()).second) return std::nullopt;
    auto r = resolve(s, *b, active);
    active.erase(t.symbol());
    return r;
  }
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) {
    auto r = resolve(s, a, active);
    if (!r) return std::nullopt;
    args.push_back(std::move(*r));
  }
  return Term::compound(t.symbol(), std::move(args));
}

}  // namespace

std::optional<Substitution> Substitution::closure() const {
  Substitution out;
  std::set<Symbol> active;
  for (const auto& [v, t] : bindings_) {
    active.insert(v);
    auto r = resolve(*this, t, active);
    active.erase(v);
    if (!r) return std::nullopt;
    if (r->is_variable() && r->symbol() == v) return std::nullopt;
    out.bind(v, std::move(*r));
  }
  return out;
}

std::string Substitution::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += std::string(v.name()) + "->" + t.to_string();
  }
  return out + "}";
}

Term apply(const Substitution& s, const Term& t) {
  if (t.is_variable()) {
    const Term* b = s.lookup(t.symbol());
    return b ? *b : t;
  }
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(apply(s, a));
  return Term::compound(t.symbol(), std::move(args));
}

Literal apply(const Substitution& s, const Literal& l) {
  std::vector<Term> args;
  args.reserve(l.arity());
  for (const auto& a : l.args()) args.push_back(apply(s, a));
  return Literal(l.predicate(), std::move(args));
}

Clause apply(const Substitution& s, const Clause& c) {
  Clause out;
  if (c.head) out.head = apply(s, *c.head);
  out.body.reserve(c.body.size());
  for (const auto& l : c.body) out.body.push_back(apply(s, l));
  return out;
}

namespace {

class Unifier {
 public:
  bool unify(const Term& a, const Term& b) {
    std::vector<std::pair<Term, Term>> stack{{a, b}};
    while (!stack.empty()) {
      auto [x, y] = std::move(stack.back());
      stack.pop_back();
      x = walk(x);
      y = walk(y);
      if (x.is_variable() && y.is_variable() && x.symbol() == y.symbol()) continue;
      if (x.is_variable()) {
        if (occurs(x.symbol(), y)) return false;
        subst_.bind(x.symbol(), y);
        continue;
      }
      if (y.is_variable()) {
        if (occurs(y.symbol(), x)) return false;
        subst_.bind(y.symbol(), x);
        continue;
      }
      if (x.kind() != y.kind()) return false;
      if (!x.is_compound()) {
        if (!(x == y)) return false;
        continue;
      }
      if (x.symbol() != y.symbol() || x.arity() != y.arity()) return false;
      for (std::size_t i = 0; i < x.arity(); ++i) stack.emplace_back(x.args()[i], y.args()[i]);
    }
    return true;
  }

  std::optional<Substitution> result() const { return subst_.closure(); }

 private:
  Term walk(Term t) const {
    while (t.is_variable()) {
      const Term* b = subst_.lookup(t.symbol());
      if (!b) break;
      t = *b;
    }
    return t;
  }

  bool occurs(Symbol v, const Term& t) const {
    const Term w = walk(t);
    if (w.is_variable()) return w.symbol() == v;
    if (!w.is_compound()) return false;
    for (const auto& a : w.args()) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  Substitution subst_;
};

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return u.result();
}

std::optional<Substitution> unify(const Literal& a, const Literal& b) {
  if (a.predicate() != b.predicate() || a.arity() != b.arity()) return std::nullopt;
  Unifier u;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!u.unify(a.args()[i], b.args()[i])) return std::nullopt;
  }
  return u.result();
}

}  // namespace lff
