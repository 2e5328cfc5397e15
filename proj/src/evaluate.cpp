#include "lff/evaluate.hpp"

#include <algorithm>
#include <unordered_set>

namespace lff {

std::string Outcome::to_string() const {
  std::string out;
  switch (completeness) {
    case Completeness::Complete: out = "complete"; break;
    case Completeness::PartiallyComplete: out = "partially-complete"; break;
    case Completeness::TotallyIncomplete: out = "totally-incomplete"; break;
  }
  out += consistency == Consistency::Consistent ? ",consistent" : ",inconsistent";
  return out;
}

Outcome classify(const std::vector<bool>& pos_entailed, const std::vector<bool>& neg_entailed) {
  Outcome o;
  const auto covered = std::count(pos_entailed.begin(), pos_entailed.end(), true);
  if (covered == static_cast<std::ptrdiff_t>(pos_entailed.size())) {
    o.completeness = Completeness::Complete;
  } else if (covered == 0) {
    o.completeness = Completeness::TotallyIncomplete;
  } else {
    o.completeness = Completeness::PartiallyComplete;
  }
  const bool any_neg = std::find(neg_entailed.begin(), neg_entailed.end(), true) != neg_entailed.end();
  o.consistency = any_neg ? Consistency::Inconsistent : Consistency::Consistent;
  return o;
}

Clause order_body(const Clause& c, const ModeTable& modes) {
  if (c.body.size() < 2) return c;
  std::unordered_set<Symbol> bound;
  std::vector<Symbol> vars;
  if (c.head) {
    c.head->collect_variables(vars);
    bound.insert(vars.begin(), vars.end());
  }
  auto ready = [&](const Literal& l) {
    auto it = modes.find(l.key());
    if (it == modes.end()) return true;
    for (std::size_t i = 0; i < l.arity() && i < it->second.size(); ++i) {
      if (it->second[i] != Direction::In) continue;
      std::vector<Symbol> in_vars;
      l.args()[i].collect_variables(in_vars);
      for (auto v : in_vars) {
        if (!bound.contains(v)) return false;
      }
    }
    return true;
  };

  std::vector<Literal> rest = c.body, ordered;
  ordered.reserve(rest.size());
  while (!rest.empty()) {
    auto it = std::find_if(rest.begin(), rest.end(), ready);
    if (it == rest.end()) it = rest.begin();
    std::vector<Symbol> lv;
    it->collect_variables(lv);
    bound.insert(lv.begin(), lv.end());
    ordered.push_back(std::move(*it));
    rest.erase(it);
  }
  return Clause(c.head, std::move(ordered));
}

SldEngine make_engine(const KnowledgeBase& kb, const Program& h) {
  SldEngine engine(kb);
  for (const auto& c : h) {
    if (c.head) engine.add_clause(order_body(c, kb.modes()));
  }
  return engine;
}

bool entails(const KnowledgeBase& kb, const Program& h, const Literal& goal, const EvalConfig& cfg) {
  SldEngine engine = make_engine(kb, h);
  return engine.prove(goal, cfg.limits()) == Proof::Proved;
}

Outcome test(const std::vector<Literal>& pos, const std::vector<Literal>& neg,
             const KnowledgeBase& kb, const Program& h, const EvalConfig& cfg) {
  SldEngine engine = make_engine(kb, h);
  const auto limits = cfg.limits();
  Outcome o;
  std::size_t covered = 0, missed = 0;
  for (const auto& e : pos) {
    if (engine.prove(e, limits) == Proof::Proved) ++covered; else ++missed;
    if (covered > 0 && missed > 0) break;
  }
  if (missed == 0 && covered == pos.size()) {
    o.completeness = Completeness::Complete;
  } else if (covered == 0) {
    o.completeness = Completeness::TotallyIncomplete;
  } else {
    o.completeness = Completeness::PartiallyComplete;
  }
  for (const auto& e : neg) {
    if (engine.prove(e, limits) == Proof::Proved) {
      o.consistency = Consistency::Inconsistent;
      break;
    }
  }
  return o;
}

bool is_satisfiable(const Program& s, const std::vector<Literal>& pos, const KnowledgeBase& kb,
                    const EvalConfig& cfg) {
  static const Symbol is_sat("$is_sat");
  SldEngine engine(kb);
  bool has_goal = false, has_headed = false;
  for (const auto& c : s) {
    if (c.head) {
      has_headed = true;
      engine.add_clause(order_body(c, kb.modes()));
    } else {
      has_goal = true;
      engine.add_clause(Clause(Literal(is_sat, {}), order_body(c, kb.modes()).body));
    }
  }
  const auto limits = cfg.limits();
  if (has_goal) {
    const auto r = engine.prove(Literal(is_sat, {}), limits);
    if (r != Proof::Failed) return true;
  }
  if (has_headed) {
    for (const auto& e : pos) {
      if (engine.prove(e, limits) != Proof::Failed) return true;
    }
  }
  return false;
}

}  // namespace lff
