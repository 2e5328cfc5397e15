#include "lff/constraints.hpp"

#include <algorithm>

#include "lff/logic.hpp"

namespace lff {

std::string to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::Specialisation: return "specialisation";
    case ConstraintKind::Generalisation: return "generalisation";
    case ConstraintKind::Redundancy: return "redundancy";
  }
  return "?";
}

bool ConstraintStore::add(Constraint c) {
  auto key = std::make_pair(static_cast<int>(c.kind), canonical_form(c.payload));
  if (!seen_.insert(std::move(key)).second) return false;
  ++counts_[static_cast<std::size_t>(c.kind)];
  constraints_.push_back(std::move(c));
  return true;
}

std::vector<Constraint> constrain(const Program& h, const Outcome& outcome) {
  std::vector<Constraint> out;
  if (outcome.completeness != Completeness::Complete) {
    out.push_back({ConstraintKind::Specialisation, h});
  }
  if (outcome.consistency == Consistency::Inconsistent) {
    out.push_back({ConstraintKind::Generalisation, h});
  }
  if (outcome.completeness == Completeness::TotallyIncomplete) {
    out.push_back({ConstraintKind::Redundancy, h});
  }
  return out;
}

bool redundant(const Program& p, const Program& q) {
  const bool contains_spec = std::all_of(q.begin(), q.end(), [&](const Clause& c) {
    return std::any_of(p.begin(), p.end(), [&](const Clause& cp) { return clause_subsumes(c, cp); });
  });
  if (!contains_spec) return false;
  return std::all_of(p.begin(), p.end(), [&](const Clause& cp) {
    if (!is_recursive(cp)) return true;
    return std::any_of(q.begin(), q.end(), [&](const Clause& c) { return clause_subsumes(c, cp); });
  });
}

bool violates(const Program& candidate, const Constraint& c) {
  switch (c.kind) {
    case ConstraintKind::Specialisation: return theory_subsumes(c.payload, candidate);
    case ConstraintKind::Generalisation: return theory_subsumes(candidate, c.payload);
    case ConstraintKind::Redundancy: return redundant(candidate, c.payload);
  }
  return false;
}

bool violates(const Program& candidate, const ConstraintStore& store) {
  return std::any_of(store.constraints().begin(), store.constraints().end(),
                     [&](const Constraint& c) { return violates(candidate, c); });
}

}  // namespace lff
