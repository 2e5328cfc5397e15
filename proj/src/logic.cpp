#include "lff/logic.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace lff {
namespace {

// One-way matching: only pattern variables are bound; target terms are
// treated as rigid, so shared variable names between the clauses are harmless.
class Matcher {
 public:
  bool match(const Term& pattern, const Term& target) {
    switch (pattern.kind()) {
      case Term::Kind::Variable: {
        auto [it, inserted] = bindings_.try_emplace(pattern.symbol(), target);
        if (inserted) {
          trail_.push_back(pattern.symbol());
          return true;
        }
        return it->second == target;
      }
      case Term::Kind::Compound:
        if (!target.is_compound() || target.symbol() != pattern.symbol() ||
            target.arity() != pattern.arity()) {
          return false;
        }
        for (std::size_t i = 0; i < pattern.arity(); ++i) {
          if (!match(pattern.args()[i], target.args()[i])) return false;
        }
        return true;
      default:
        return pattern == target;
    }
  }

  bool match(const Literal& p, const Literal& t) {
    if (p.predicate() != t.predicate() || p.arity() != t.arity()) return false;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (!match(p.args()[i], t.args()[i])) return false;
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      bindings_.erase(trail_.back());
      trail_.pop_back();
    }
  }

 private:
  std::unordered_map<Symbol, Term> bindings_;
  std::vector<Symbol> trail_;
};

bool match_body(Matcher& m, const std::vector<const Literal*>& pattern, std::size_t i,
                const std::vector<Literal>& target) {
  if (i == pattern.size()) return true;
  for (const auto& t : target) {
    const auto mark = m.mark();
    if (m.match(*pattern[i], t) && match_body(m, pattern, i + 1, target)) return true;
    m.undo(mark);
  }
  return false;
}

}  // namespace

bool clause_subsumes(const Clause& c1, const Clause& c2) {
  if (c1.head && !c2.head) return false;

  // Cheap rejection: every c1 body predicate must occur in c2's body.
  std::vector<const Literal*> pattern;
  pattern.reserve(c1.body.size());
  std::vector<std::size_t> candidates;
  for (const auto& l : c1.body) {
    const auto n = static_cast<std::size_t>(std::count_if(
        c2.body.begin(), c2.body.end(),
        [&](const Literal& t) { return t.predicate() == l.predicate() && t.arity() == l.arity(); }));
    if (n == 0) return false;
    pattern.push_back(&l);
    candidates.push_back(n);
  }
  // Most constrained literals first.
  std::vector<std::size_t> order(pattern.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return candidates[a] < candidates[b]; });
  std::vector<const Literal*> sorted;
  sorted.reserve(order.size());
  for (auto i : order) sorted.push_back(pattern[i]);

  Matcher m;
  if (c1.head && !m.match(*c1.head, *c2.head)) return false;
  return match_body(m, sorted, 0, c2.body);
}

bool theory_subsumes(const Program& t1, const Program& t2) {
  return std::all_of(t2.begin(), t2.end(), [&](const Clause& c2) {
    return std::any_of(t1.begin(), t1.end(),
                       [&](const Clause& c1) { return clause_subsumes(c1, c2); });
  });
}

std::size_t program_size(const Program& h) {
  std::size_t n = 0;
  for (const auto& c : h) n += c.size();
  return n;
}

bool is_recursive(const Clause& c) {
  if (!c.head) return false;
  return std::any_of(c.body.begin(), c.body.end(),
                     [&](const Literal& l) { return l.key() == c.head->key(); });
}

bool has_recursion(const Program& h) {
  return std::any_of(h.begin(), h.end(), [](const Clause& c) { return is_recursive(c); });
}

bool is_connected(const Clause& c) {
  std::vector<const Literal*> lits;
  if (c.head) lits.push_back(&*c.head);
  for (const auto& l : c.body) lits.push_back(&l);

  std::vector<std::vector<Symbol>> vars;
  for (const auto* l : lits) {
    std::vector<Symbol> v;
    l->collect_variables(v);
    if (!v.empty()) vars.push_back(std::move(v));
  }
  if (vars.size() <= 1) return true;

  // Union-find over the non-ground literals, joined through shared variables.
  std::vector<std::size_t> parent(vars.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<Symbol, std::size_t> owner;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (auto v : vars[i]) {
      auto [it, inserted] = owner.emplace(v, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  const auto root = find(0);
  for (std::size_t i = 1; i < vars.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

}  // namespace lff
