#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lff/canonical.hpp"
#include "lff/logic.hpp"

namespace oracle {

std::vector<lff::Substitution> all_maps(const std::vector<lff::Symbol>& vars,
                                        const std::vector<Term>& values) {
  std::vector<lff::Substitution> out;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    lff::Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], values[idx[i]]);
    out.push_back(std::move(s));
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++idx[i] < values.size()) break;
      idx[i] = 0;
    }
    if (i == vars.size()) return out;
  }
}

namespace {

std::vector<lff::Symbol> vars_of(const std::vector<const Literal*>& lits) {
  std::vector<lff::Symbol> v;
  for (const auto* l : lits) l->collect_variables(v);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void collect_terms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  if (t.is_compound()) {
    for (const auto& a : t.args()) collect_terms(a, out);
  }
}

std::vector<const Literal*> literals(const Clause& c) {
  std::vector<const Literal*> out;
  if (c.head) out.push_back(&*c.head);
  for (const auto& l : c.body) out.push_back(&l);
  return out;
}

}  // namespace

std::vector<lff::Substitution> ground_unifiers(const Literal& a, const Literal& b,
                                               const std::vector<Term>& values) {
  std::vector<lff::Substitution> out;
  for (auto& s : all_maps(vars_of({&a, &b}), values)) {
    if (lff::apply(s, a) == lff::apply(s, b)) out.push_back(std::move(s));
  }
  return out;
}

bool subsumes(const Clause& c1, const Clause& c2) {
  if (c1.head && !c2.head) return false;
  std::vector<Term> values;
  for (const auto* l : literals(c2)) {
    for (const auto& a : l->args()) collect_terms(a, values);
  }
  if (values.empty()) values.push_back(Term::atom("$none"));
  for (const auto& s : all_maps(vars_of(literals(c1)), values)) {
    const Clause d = lff::apply(s, c1);
    if (d.head && !(*d.head == *c2.head)) continue;
    const bool inside = std::all_of(d.body.begin(), d.body.end(), [&](const Literal& l) {
      return std::find(c2.body.begin(), c2.body.end(), l) != c2.body.end();
    });
    if (inside) return true;
  }
  return false;
}

bool theory_subsumes(const Program& t1, const Program& t2) {
  for (const auto& c2 : t2) {
    bool any = false;
    for (const auto& c1 : t1) any = any || subsumes(c1, c2);
    if (!any) return false;
  }
  return true;
}

bool connected(const Clause& c) {
  std::vector<std::vector<lff::Symbol>> vars;
  for (const auto* l : literals(c)) {
    std::vector<lff::Symbol> v;
    l->collect_variables(v);
    if (!v.empty()) vars.push_back(v);
  }
  const std::size_t n = vars.size();
  if (n <= 1) return true;
  // Any nontrivial split with no shared variable disconnects the clause.
  for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool shared = false;
    for (std::size_t i = 0; i < n && !shared; ++i) {
      for (std::size_t j = 0; j < n && !shared; ++j) {
        if (!((mask >> i) & 1) || ((mask >> j) & 1)) continue;
        for (auto v : vars[i]) {
          if (std::find(vars[j].begin(), vars[j].end(), v) != vars[j].end()) shared = true;
        }
      }
    }
    if (!shared) return false;
  }
  return true;
}

namespace {

bool same_clause(const Clause& a, const Clause& b) {
  if (a.head.has_value() != b.head.has_value()) return false;
  auto set_of = [](const std::vector<Literal>& body) {
    std::vector<Literal> v = body;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto bb = set_of(b.body);
  const auto va = a.variables();
  const auto vb = b.variables();
  if (va.size() != vb.size()) return false;
  std::vector<std::size_t> perm(vb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    lff::Substitution s;
    for (std::size_t i = 0; i < va.size(); ++i) s.bind(va[i], Term::variable(vb[perm[i]]));
    const Clause r = lff::apply(s, a);
    if (r.head && !(*r.head == *b.head)) continue;
    if (set_of(r.body) == bb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool same_program(const Program& a, const Program& b) {
  if (a.num_clauses() != b.num_clauses()) return false;
  std::vector<std::size_t> perm(b.num_clauses());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      ok = same_clause(a.clauses()[i], b.clauses()[perm[i]]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::set<std::string> least_model(const std::vector<Clause>& clauses,
                                  const std::vector<Term>& extra_constants) {
  std::vector<Term> domain = extra_constants;
  for (const auto& c : clauses) {
    for (const auto* l : literals(c)) {
      for (const auto& a : l->args()) {
        if (!a.is_variable() && std::find(domain.begin(), domain.end(), a) == domain.end()) {
          domain.push_back(a);
        }
      }
    }
  }
  if (domain.empty()) domain.push_back(Term::atom("$none"));
  std::set<std::string> model;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : clauses) {
      for (const auto& s : all_maps(vars_of(literals(c)), domain)) {
        const Clause g = lff::apply(s, c);
        const bool body = std::all_of(g.body.begin(), g.body.end(),
                                      [&](const Literal& l) { return model.contains(l.to_string()); });
        if (body && model.insert(g.head->to_string()).second) changed = true;
      }
    }
  }
  return model;
}

std::string text(const Program& p) {
  std::set<std::string> parts;
  for (const auto& c : p) parts.insert(lff::canonical_clause(c).to_string());
  std::string out;
  for (const auto& s : parts) out += s + "\n";
  return out;
}

std::set<std::string> texts(const std::vector<Program>& programs) {
  std::set<std::string> out;
  for (const auto& p : programs) out.insert(text(p));
  return out;
}

namespace {

// One-literal deletions of g that keep it a nonempty, connected program
// subsuming g.
std::vector<Program> children(const Program& g) {
  std::vector<Program> out;
  for (std::size_t i = 0; i < g.num_clauses(); ++i) {
    const Clause& c = g.clauses()[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      Clause d = c;
      if (c.head && k == 0) {
        d.head.reset();
      } else {
        d.body.erase(d.body.begin() + static_cast<std::ptrdiff_t>(k - (c.head ? 1 : 0)));
      }
      std::vector<Clause> rest;
      for (std::size_t j = 0; j < g.num_clauses(); ++j) {
        if (j != i) rest.push_back(g.clauses()[j]);
      }
      if (d.size() > 0) rest.push_back(d);
      Program child(std::move(rest));
      if (child.empty()) continue;
      bool ok = true;
      for (const auto& x : child) ok = ok && connected(x);
      if (ok && oracle::theory_subsumes(child, g)) out.push_back(std::move(child));
    }
  }
  return out;
}

}  // namespace

std::vector<Program> deletion_lattice(const Program& h) {
  std::set<std::string> seen{text(h)};
  std::vector<Program> out{h};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto& c : children(out[i])) {
      if (seen.insert(text(c)).second) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Program> deletion_minimal(const Program& h, const std::vector<Literal>& pos,
                                      const lff::KnowledgeBase& bk, const lff::EvalConfig& cfg) {
  std::vector<Program> out;
  for (const auto& g : deletion_lattice(h)) {
    if (lff::is_satisfiable(g, pos, bk, cfg)) continue;
    const auto kids = children(g);
    const bool minimal = std::none_of(kids.begin(), kids.end(), [&](const Program& k) {
      return !lff::is_satisfiable(k, pos, bk, cfg);
    });
    if (minimal) out.push_back(g);
  }
  return out;
}

std::vector<Clause> clauses_of_size(const lff::Bias& bias, std::size_t size) {
  std::vector<Clause> out;
  if (size < 2 || size - 1 > bias.max_body) return out;
  const auto preds = bias.predicates();
  std::vector<Term> vars;
  for (std::size_t i = 0; i < bias.max_vars; ++i) vars.push_back(Term::variable(lff::canonical_variable_name(i)));
  std::vector<Term> head_args(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(bias.head_pred.arity));
  const Literal head(bias.head_pred.name, head_args);

  // Every body literal over the variable pool.
  std::vector<Literal> atoms;
  for (const auto& p : preds) {
    std::vector<std::size_t> idx(p.arity, 0);
    for (;;) {
      std::vector<Term> args;
      for (auto i : idx) args.push_back(vars[i]);
      atoms.emplace_back(p.name, std::move(args));
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < vars.size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
  }
  std::set<std::string> seen;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == size - 1) {
      std::vector<Literal> body;
      for (auto i : pick) body.push_back(atoms[i]);
      Clause c(head, std::move(body));
      if (!lff::well_formed(c, bias)) return;
      for (std::size_t i = 0; i < c.body.size(); ++i) {
        Clause rest = c;
        rest.body.erase(rest.body.begin() + static_cast<std::ptrdiff_t>(i));
        if (subsumes(c, rest)) return;
      }
      if (seen.insert(lff::canonical_clause(c).to_string()).second) out.push_back(c);
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Program> programs_of_size(const lff::Bias& bias, std::size_t size) {
  std::vector<std::vector<Clause>> by_size(size + 1);
  for (std::size_t s = 2; s <= size; ++s) by_size[s] = clauses_of_size(bias, s);
  std::vector<Program> out;
  std::set<std::string> seen;
  std::vector<Clause> chosen;
  auto recursive = [&](const Clause& c) {
    return std::any_of(c.body.begin(), c.body.end(),
                       [&](const Literal& l) { return l.key() == bias.head_pred; });
  };
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      bool rec_clause = false, base = false;
      for (const auto& c : chosen) (recursive(c) ? rec_clause : base) = true;
      if (rec_clause && !base) return;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = 0; j < chosen.size(); ++j) {
          if (i != j && subsumes(chosen[i], chosen[j])) return;
        }
      }
      Program p(chosen);
      if (p.num_clauses() == chosen.size() && seen.insert(text(p)).second) out.push_back(p);
      return;
    }
    if (chosen.size() == bias.max_clauses) return;
    for (std::size_t s = 2; s <= remaining; ++s) {
      for (const auto& c : by_size[s]) {
        chosen.push_back(c);
        self(self, remaining - s);
        chosen.pop_back();
      }
    }
  };
  rec(rec, size);
  return out;
}

}  // namespace oracle
