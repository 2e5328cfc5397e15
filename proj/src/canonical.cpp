#include "lff/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace lff {
namespace {

enum Tag : std::int64_t { kVar = 0, kAtom = 1, kInt = 2, kCompound = 3 };

// Free variables beyond this many fall back to first-occurrence naming.
constexpr std::size_t kMaxPermutedVariables = 8;

class Encoder {
 public:
  explicit Encoder(const std::vector<Symbol>& vars) : vars_(vars), index_(vars.size()) {}

  std::vector<std::size_t>& index() { return index_; }

  void term(const Term& t, ClauseKey& out) const {
    switch (t.kind()) {
      case Term::Kind::Variable:
        out.push_back(kVar);
        out.push_back(static_cast<std::int64_t>(index_[position(t.symbol())]));
        return;
      case Term::Kind::Atom:
        out.push_back(kAtom);
        out.push_back(t.symbol().id());
        return;
      case Term::Kind::Integer:
        out.push_back(kInt);
        out.push_back(t.value());
        return;
      case Term::Kind::Compound:
        out.push_back(kCompound);
        out.push_back(t.symbol().id());
        out.push_back(static_cast<std::int64_t>(t.arity()));
        for (const auto& a : t.args()) term(a, out);
        return;
    }
  }

  void literal(const Literal& l, ClauseKey& out) const {
    out.push_back(l.predicate().id());
    out.push_back(static_cast<std::int64_t>(l.arity()));
    for (const auto& a : l.args()) term(a, out);
  }

  ClauseKey clause(const Clause& c) const {
    ClauseKey out;
    out.push_back(c.head ? 1 : 0);
    if (c.head) literal(*c.head, out);
    std::vector<ClauseKey> body;
    body.reserve(c.body.size());
    for (const auto& l : c.body) {
      ClauseKey k;
      literal(l, k);
      body.push_back(std::move(k));
    }
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    for (const auto& k : body) out.insert(out.end(), k.begin(), k.end());
    return out;
  }

 private:
  std::size_t position(Symbol v) const {
    return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) - vars_.begin());
  }

  const std::vector<Symbol>& vars_;
  std::vector<std::size_t> index_;
};

std::size_t head_variable_count(const Clause& c) {
  if (!c.head) return 0;
  std::vector<Symbol> vars;
  c.head->collect_variables(vars);
  return vars.size();
}

// Returns the canonical index assignment for c's variables (first-occurrence order).
std::vector<std::size_t> best_assignment(const Clause& c, const std::vector<Symbol>& vars,
                                         ClauseKey* key_out) {
  Encoder enc(vars);
  auto& index = enc.index();
  std::iota(index.begin(), index.end(), 0);
  const std::size_t pinned = head_variable_count(c);
  if (vars.size() - pinned > kMaxPermutedVariables) {
    if (key_out) *key_out = enc.clause(c);
    return index;
  }
  ClauseKey best = enc.clause(c);
  std::vector<std::size_t> best_index = index;
  while (std::next_permutation(index.begin() + static_cast<std::ptrdiff_t>(pinned), index.end())) {
    ClauseKey k = enc.clause(c);
    if (k < best) {
      best = std::move(k);
      best_index = index;
    }
  }
  if (key_out) *key_out = std::move(best);
  return best_index;
}

}  // namespace

Symbol canonical_variable_name(std::size_t i) {
  if (i < 26) return Symbol(std::string(1, static_cast<char>('A' + i)));
  return Symbol("V" + std::to_string(i));
}

ClauseKey canonical_clause_key(const Clause& c) {
  const auto vars = c.variables();
  ClauseKey key;
  best_assignment(c, vars, &key);
  return key;
}

Clause canonical_clause(const Clause& c) {
  const auto vars = c.variables();
  const auto index = best_assignment(c, vars, nullptr);
  std::unordered_map<Symbol, Term> rename;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    rename.emplace(vars[i], Term::variable(canonical_variable_name(index[i])));
  }
  auto rename_term = [&](auto&& self, const Term& t) -> Term {
    if (t.is_variable()) return rename.at(t.symbol());
    if (!t.is_compound()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(self(self, a));
    return Term::compound(t.symbol(), std::move(args));
  };
  auto rename_literal = [&](const Literal& l) {
    std::vector<Term> args;
    for (const auto& a : l.args()) args.push_back(rename_term(rename_term, a));
    return Literal(l.predicate(), std::move(args));
  };

  Clause out;
  if (c.head) out.head = rename_literal(*c.head);
  std::vector<std::pair<ClauseKey, Literal>> body;
  Encoder enc(vars);
  enc.index() = index;
  for (const auto& l : c.body) {
    ClauseKey k;
    enc.literal(l, k);
    body.emplace_back(std::move(k), rename_literal(l));
  }
  std::sort(body.begin(), body.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  body.erase(std::unique(body.begin(), body.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             body.end());
  for (auto& [k, l] : body) out.body.push_back(std::move(l));
  return out;
}

ProgramKey canonical_form(const Program& p) {
  ProgramKey key(p.clause_keys().begin(), p.clause_keys().end());
  std::sort(key.begin(), key.end());
  return key;
}

std::size_t ClauseKeyHash::operator()(const ClauseKey& k) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : k) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t ProgramKeyHash::operator()(const ProgramKey& k) const noexcept {
  std::size_t h = k.size();
  ClauseKeyHash ch;
  for (const auto& c : k) h ^= ch(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace lff
