#include "lff/bias.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lff/logic.hpp"

namespace lff {

void Bias::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (head_pred.name.empty()) fail("bias has no head_pred");
  if (max_vars < 1 || max_body < 1 || max_clauses < 1) fail("bias limits must be at least 1");
  if (head_pred.arity > max_vars) fail("head_pred arity exceeds max_vars");
  for (const auto& p : predicates()) {
    if (p.arity > 4) fail(p.to_string() + ": arity above 4 is not supported");
    auto t = types.find(p);
    if (t == types.end()) fail("missing type for " + p.to_string());
    if (t->second.size() != p.arity) fail("type arity mismatch for " + p.to_string());
    auto d = directions.find(p);
    if (d == directions.end()) fail("missing direction for " + p.to_string());
    if (d->second.size() != p.arity) fail("direction arity mismatch for " + p.to_string());
  }
  if (predicates().size() > 64) fail("at most 64 predicates are supported");
}

std::vector<PredicateKey> Bias::predicates() const {
  std::vector<PredicateKey> out{head_pred};
  for (const auto& p : body_preds) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

bool well_formed(const Clause& c, const Bias& bias) {
  if (!c.head || c.head->key() != bias.head_pred) return false;
  if (c.body.empty() || c.body.size() > bias.max_body) return false;

  std::unordered_map<Symbol, Symbol> var_type;
  auto check_literal = [&](const Literal& l) {
    auto t = bias.types.find(l.key());
    if (t == bias.types.end()) return false;
    for (std::size_t i = 0; i < l.arity(); ++i) {
      const Term& a = l.args()[i];
      if (!a.is_variable()) return false;
      auto [it, inserted] = var_type.emplace(a.symbol(), t->second[i]);
      if (!inserted && it->second != t->second[i]) return false;
    }
    return true;
  };

  std::unordered_set<Symbol> head_vars;
  for (const auto& a : c.head->args()) {
    if (!a.is_variable() || !head_vars.insert(a.symbol()).second) return false;
  }
  if (!check_literal(*c.head)) return false;

  const auto preds = bias.predicates();
  for (const auto& l : c.body) {
    if (std::find(preds.begin(), preds.end(), l.key()) == preds.end()) return false;
    if (!check_literal(l)) return false;
    if (l == *c.head) return false;
  }
  if (c.variables().size() > bias.max_vars) return false;

  // Direction safety: some order of the body binds every input before use.
  // A variable is bound if it is a head input or an output of a literal
  // whose inputs are all bound.
  const auto& head_dirs = bias.directions.at(bias.head_pred);
  std::unordered_set<Symbol> bound;
  for (std::size_t i = 0; i < c.head->arity(); ++i) {
    if (head_dirs[i] == Direction::In) bound.insert(c.head->args()[i].symbol());
  }
  std::vector<bool> done(c.body.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j < c.body.size(); ++j) {
      if (done[j]) continue;
      const auto& l = c.body[j];
      const auto& dirs = bias.directions.at(l.key());
      bool ready = true;
      for (std::size_t i = 0; i < l.arity() && ready; ++i) {
        ready = dirs[i] != Direction::In || bound.contains(l.args()[i].symbol());
      }
      if (!ready) continue;
      for (std::size_t i = 0; i < l.arity(); ++i) {
        if (dirs[i] == Direction::Out) bound.insert(l.args()[i].symbol());
      }
      done[j] = changed = true;
    }
  }
  if (std::find(done.begin(), done.end(), false) != done.end()) return false;
  return is_connected(c);
}

}  // namespace lff
