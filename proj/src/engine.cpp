#include "lff/engine.hpp"

#include <stdexcept>

namespace lff {
namespace detail {

std::uint32_t CompiledImage::compile_term(const Term& t,
                                          std::unordered_map<Symbol, std::uint32_t>& vars) {
  Cell cell{};
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto [it, inserted] = vars.try_emplace(t.symbol(), static_cast<std::uint32_t>(vars.size()));
      cell.tag = Tag::Var;
      cell.value = it->second;
      break;
    }
    case Term::Kind::Atom:
      cell.tag = Tag::Atom;
      cell.value = t.symbol().id();
      break;
    case Term::Kind::Integer:
      cell.tag = Tag::Int;
      cell.value = t.value();
      break;
    case Term::Kind::Compound: {
      std::vector<std::uint32_t> children;
      children.reserve(t.arity());
      for (const auto& a : t.args()) children.push_back(compile_term(a, vars));
      cell.tag = Tag::Struct;
      cell.value = t.symbol().id();
      cell.arity = static_cast<std::uint32_t>(children.size());
      cell.args = static_cast<std::uint32_t>(arg_refs.size());
      arg_refs.insert(arg_refs.end(), children.begin(), children.end());
      break;
    }
  }
  cells.push_back(cell);
  return static_cast<std::uint32_t>(cells.size() - 1);
}

std::uint32_t CompiledImage::compile_literal(const Literal& l,
                                             std::unordered_map<Symbol, std::uint32_t>& vars) {
  if (l.arity() == 0) return compile_term(Term::atom(l.predicate()), vars);
  return compile_term(Term::compound(l.predicate(), l.args()), vars);
}

void CompiledImage::add_clause(const Clause& c) {
  if (!c.head) throw std::invalid_argument("cannot execute a goal clause");
  std::unordered_map<Symbol, std::uint32_t> vars;
  CompiledClause cc;
  cc.head = compile_literal(*c.head, vars);
  for (const auto& l : c.body) cc.body.push_back(compile_literal(l, vars));
  cc.num_vars = static_cast<std::uint32_t>(vars.size());
  const auto code = pred_code(c.head->predicate().id(), static_cast<std::uint32_t>(c.head->arity()));
  index[code].push_back(static_cast<std::uint32_t>(clauses.size()));
  clauses.push_back(std::move(cc));
}

}  // namespace detail

namespace {

const std::unordered_map<std::uint64_t, Builtin>& builtin_codes() {
  static const auto table = [] {
    std::unordered_map<std::uint64_t, Builtin> t;
    const std::pair<const char*, std::uint32_t> names[] = {
        {"decrement", 2}, {"increment", 2}, {"geq", 2}, {"zero", 1},
        {"one", 1},       {"even", 1},      {"odd", 1}, {"sum", 3}};
    for (auto [name, arity] : names) {
      const PredicateKey key{Symbol(name), arity};
      t.emplace(detail::pred_code(key.name.id(), arity), *builtin_for(key));
    }
    return t;
  }();
  return table;
}

}  // namespace

SldEngine::SldEngine(const KnowledgeBase& kb) : image_(kb.image()) {
  static_cells_ = static_cast<std::uint32_t>(image_.cells.size());
  static_args_ = static_cast<std::uint32_t>(image_.arg_refs.size());
}

void SldEngine::add_clause(const Clause& c) {
  image_.cells.resize(static_cells_);
  image_.arg_refs.resize(static_args_);
  image_.add_clause(c);
  static_cells_ = static_cast<std::uint32_t>(image_.cells.size());
  static_args_ = static_cast<std::uint32_t>(image_.arg_refs.size());
}

SldEngine::Ref SldEngine::deref(Ref r) const {
  for (;;) {
    const auto& cell = image_.cells[r.cell];
    if (cell.tag != detail::Tag::Var) return r;
    const auto& b = bindings_[r.frame + static_cast<std::uint32_t>(cell.value)];
    if (b.cell == kUnbound) return r;
    r = {b.cell, b.frame};
  }
}

SldEngine::Ref SldEngine::arg(Ref r, std::uint32_t i) const {
  const auto& cell = image_.cells[r.cell];
  return {image_.arg_refs[cell.args + i], r.frame};
}

void SldEngine::bind(std::uint32_t slot, Ref value) {
  bindings_[slot] = {value.cell, value.frame};
  trail_.push_back(slot);
}

bool SldEngine::occurs(std::uint32_t slot, Ref t) const {
  t = deref(t);
  const auto& cell = image_.cells[t.cell];
  if (cell.tag == detail::Tag::Var) return t.frame + static_cast<std::uint32_t>(cell.value) == slot;
  if (cell.tag != detail::Tag::Struct) return false;
  for (std::uint32_t i = 0; i < cell.arity; ++i) {
    if (occurs(slot, arg(t, i))) return true;
  }
  return false;
}

bool SldEngine::unify(Ref a, Ref b) {
  std::vector<std::pair<Ref, Ref>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    x = deref(x);
    y = deref(y);
    const auto& cx = image_.cells[x.cell];
    const auto& cy = image_.cells[y.cell];
    const bool vx = cx.tag == detail::Tag::Var, vy = cy.tag == detail::Tag::Var;
    if (vx && vy) {
      const auto sx = x.frame + static_cast<std::uint32_t>(cx.value);
      const auto sy = y.frame + static_cast<std::uint32_t>(cy.value);
      if (sx == sy) continue;
      // Bind the younger slot to the older one.
      if (sx > sy) bind(sx, y); else bind(sy, x);
      continue;
    }
    if (vx) {
      const auto sx = x.frame + static_cast<std::uint32_t>(cx.value);
      if (occurs(sx, y)) return false;
      bind(sx, y);
      continue;
    }
    if (vy) {
      const auto sy = y.frame + static_cast<std::uint32_t>(cy.value);
      if (occurs(sy, x)) return false;
      bind(sy, x);
      continue;
    }
    if (cx.tag != cy.tag || cx.value != cy.value) return false;
    if (cx.tag == detail::Tag::Struct) {
      if (cx.arity != cy.arity) return false;
      for (std::uint32_t i = 0; i < cx.arity; ++i) stack.emplace_back(arg(x, i), arg(y, i));
    }
  }
  return true;
}

SldEngine::Ref SldEngine::make_int(std::int64_t v) {
  image_.cells.push_back({detail::Tag::Int, 0, v, 0});
  return {static_cast<std::uint32_t>(image_.cells.size() - 1), 0};
}

SldEngine::Marks SldEngine::marks() const {
  return {static_cast<std::uint32_t>(bindings_.size()), static_cast<std::uint32_t>(trail_.size()),
          static_cast<std::uint32_t>(image_.cells.size()), static_cast<std::uint32_t>(goals_.size())};
}

void SldEngine::restore(const Marks& m) {
  while (trail_.size() > m.trail) {
    const auto slot = trail_.back();
    trail_.pop_back();
    if (slot < m.bindings) bindings_[slot] = Binding{};
  }
  bindings_.resize(m.bindings);
  image_.cells.resize(m.cells);
  goals_.resize(m.goals);
}

bool SldEngine::tick() {
  ++steps_;
  ++total_steps_;
  if (steps_ > limits_.max_steps) {
    aborted_ = true;
    return false;
  }
  if ((steps_ & 255u) == 0 && std::chrono::steady_clock::now() > deadline_) {
    aborted_ = true;
    return false;
  }
  return true;
}

bool SldEngine::builtin_ready(Builtin b, const GoalNode& g) {
  auto bound = [&](std::uint32_t i) {
    return image_.cells[deref(arg(g.lit, i)).cell].tag != detail::Tag::Var;
  };
  switch (b) {
    case Builtin::Zero:
    case Builtin::One:
      return true;
    case Builtin::Even:
    case Builtin::Odd:
      return bound(0);
    case Builtin::Decrement:
    case Builtin::Increment:
      return bound(0) || bound(1);
    case Builtin::Geq:
      return bound(0) && bound(1);
    case Builtin::Sum:
      return int(bound(0)) + int(bound(1)) + int(bound(2)) >= 2;
  }
  return true;
}

bool SldEngine::call_builtin(Builtin b, const GoalNode& g) {
  const std::uint32_t n = image_.cells[g.lit.cell].arity;
  Ref a[3];
  const detail::Cell* c[3];
  for (std::uint32_t i = 0; i < n; ++i) {
    a[i] = deref(arg(g.lit, i));
    c[i] = &image_.cells[a[i].cell];
  }
  auto is_var = [&](int i) { return c[i]->tag == detail::Tag::Var; };
  auto is_int = [&](int i) { return c[i]->tag == detail::Tag::Int; };
  // Nonvar arguments must be integers.
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!is_var(static_cast<int>(i)) && !is_int(static_cast<int>(i))) return false;
  }
  // Copy values before make_int may reallocate the cell vector.
  std::int64_t v[3] = {0, 0, 0};
  for (std::uint32_t i = 0; i < n; ++i) v[i] = c[i]->value;
  bool var[3] = {false, false, false};
  for (std::uint32_t i = 0; i < n; ++i) var[i] = is_var(static_cast<int>(i));

  auto set = [&](int i, std::int64_t value) {
    if (!var[i]) return v[i] == value;
    return unify(a[i], make_int(value));
  };
  switch (b) {
    case Builtin::Zero:
      return set(0, 0);
    case Builtin::One:
      return set(0, 1);
    case Builtin::Even:
      return v[0] % 2 == 0;
    case Builtin::Odd:
      return v[0] % 2 != 0;
    case Builtin::Geq:
      return v[0] >= v[1];
    case Builtin::Decrement:
      return var[0] ? set(0, v[1] + 1) : set(1, v[0] - 1);
    case Builtin::Increment:
      return var[0] ? set(0, v[1] - 1) : set(1, v[0] + 1);
    case Builtin::Sum:
      if (var[2]) return set(2, v[0] + v[1]);
      if (var[1]) return set(1, v[2] - v[0]);
      return set(0, v[2] - v[1]);
  }
  return false;
}

bool SldEngine::select(std::uint32_t goals, GoalNode& selected, std::uint32_t& rest) {
  const auto& codes = builtin_codes();
  std::vector<std::uint32_t> skipped;
  for (std::uint32_t cur = goals; cur != kNil; cur = goals_[cur].next) {
    const GoalNode& g = goals_[cur];
    const auto& cell = image_.cells[g.lit.cell];
    const auto code = detail::pred_code(static_cast<std::uint32_t>(cell.value),
                                        cell.tag == detail::Tag::Struct ? cell.arity : 0);
    auto it = codes.find(code);
    if (it != codes.end() && !builtin_ready(it->second, g)) {
      skipped.push_back(cur);
      continue;
    }
    selected = g;
    rest = g.next;
    // Rebuild the delayed prefix in front of the remainder.
    for (auto s = skipped.rbegin(); s != skipped.rend(); ++s) {
      GoalNode copy = goals_[*s];
      copy.next = rest;
      goals_.push_back(copy);
      rest = static_cast<std::uint32_t>(goals_.size() - 1);
    }
    return true;
  }
  return false;
}

bool SldEngine::try_clauses(const GoalNode& goal, std::uint32_t rest,
                            const std::vector<std::uint32_t>& clauses, std::uint32_t start,
                            std::uint32_t& goals) {
  const Marks m = marks();
  for (std::uint32_t i = start; i < clauses.size(); ++i) {
    if (!tick()) return false;
    const auto& cc = image_.clauses[clauses[i]];
    const auto frame = static_cast<std::uint32_t>(bindings_.size());
    bindings_.resize(bindings_.size() + cc.num_vars);
    if (!unify({cc.head, frame}, goal.lit)) {
      restore(m);
      continue;
    }
    std::uint32_t list = rest;
    for (auto it = cc.body.rbegin(); it != cc.body.rend(); ++it) {
      goals_.push_back({{*it, frame}, goal.depth + 1, list});
      list = static_cast<std::uint32_t>(goals_.size() - 1);
    }
    if (i + 1 < clauses.size()) choices_.push_back({goal, rest, &clauses, i + 1, m});
    goals = list;
    return true;
  }
  return false;
}

SldEngine::Run SldEngine::run(std::uint32_t goal_cell, std::size_t depth_limit) {
  bindings_.clear();
  trail_.clear();
  goals_.clear();
  choices_.clear();
  cutoff_ = false;

  const auto& codes = builtin_codes();
  static const std::vector<std::uint32_t> kNoClauses;

  goals_.push_back({{goal_cell, 0}, 0, kNil});
  std::uint32_t goals = 0;

  for (;;) {
    bool ok = true;
    GoalNode g{};
    std::uint32_t rest = kNil;
    if (goals == kNil || !select(goals, g, rest)) return Run::Proved;

    if (g.depth > depth_limit) {
      cutoff_ = true;
      ok = false;
    } else {
      const auto& cell = image_.cells[g.lit.cell];
      const auto code = detail::pred_code(static_cast<std::uint32_t>(cell.value),
                                          cell.tag == detail::Tag::Struct ? cell.arity : 0);
      if (auto it = codes.find(code); it != codes.end()) {
        if (!tick()) return Run::Aborted;
        ok = call_builtin(it->second, g);
        if (ok) goals = rest;
      } else {
        auto idx = image_.index.find(code);
        const auto& clauses = idx == image_.index.end() ? kNoClauses : idx->second;
        ok = try_clauses(g, rest, clauses, 0, goals);
        if (aborted_) return Run::Aborted;
      }
    }

    while (!ok) {
      if (choices_.empty()) return cutoff_ ? Run::CutOff : Run::Failed;
      ChoicePoint cp = choices_.back();
      choices_.pop_back();
      restore(cp.marks);
      ok = try_clauses(cp.goal, cp.rest, *cp.clauses, cp.next_clause, goals);
      if (aborted_) return Run::Aborted;
    }
  }
}

Proof SldEngine::prove(const Literal& goal, const SearchLimits& limits) {
  limits_ = limits;
  steps_ = 0;
  aborted_ = false;
  deadline_ = std::chrono::steady_clock::now() + limits.timeout;

  image_.cells.resize(static_cells_);
  image_.arg_refs.resize(static_args_);
  std::unordered_map<Symbol, std::uint32_t> vars;
  const auto goal_cell = image_.compile_literal(goal, vars);
  if (!vars.empty()) throw std::invalid_argument("goal must be ground: " + goal.to_string());
  const auto query_cells = static_cast<std::uint32_t>(image_.cells.size());

  const std::size_t max_depth = std::max<std::size_t>(1, limits.max_depth);
  std::size_t depth = std::min<std::size_t>(8, max_depth);
  for (;;) {
    image_.cells.resize(query_cells);
    const Run r = run(goal_cell, depth);
    switch (r) {
      case Run::Proved:
        return Proof::Proved;
      case Run::Failed:
        return Proof::Failed;
      case Run::Aborted:
        return Proof::Exhausted;
      case Run::CutOff:
        break;
    }
    if (depth >= max_depth) return Proof::Exhausted;
    depth = std::min(max_depth, depth * 2);
  }
}

}  // namespace lff
