#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "lff/canonical.hpp"
#include "lff/evaluate.hpp"
#include "lff/term.hpp"

namespace lff {

enum class ConstraintKind { Specialisation, Generalisation, Redundancy };

std::string to_string(ConstraintKind k);

struct Constraint {
  ConstraintKind kind;
  Program payload;
};

/// Append-only set of constraints, deduplicated by kind and canonical payload.
class ConstraintStore {
 public:
  /// Returns false if an equal constraint is already stored.
  bool add(Constraint c);
  template <typename It>
  std::size_t add(It first, It last) {
    std::size_t n = 0;
    for (; first != last; ++first) n += add(*first) ? 1 : 0;
    return n;
  }

  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  std::size_t count(ConstraintKind k) const { return counts_[static_cast<std::size_t>(k)]; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<int, ProgramKey>& k) const noexcept {
      return ProgramKeyHash{}(k.second) * 3 + static_cast<std::size_t>(k.first);
    }
  };
  std::vector<Constraint> constraints_;
  std::unordered_set<std::pair<int, ProgramKey>, KeyHash> seen_;
  std::array<std::size_t, 3> counts_{};
};

/// Constraints learned from a failed hypothesis: specialisation when
/// incomplete, generalisation when inconsistent, redundancy when totally
/// incomplete.
std::vector<Constraint> constrain(const Program& h, const Outcome& outcome);

/// Every clause of q subsumes some clause of p, and every recursive clause
/// of p is subsumed by some clause of q.
bool redundant(const Program& p, const Program& q);

bool violates(const Program& candidate, const Constraint& c);
bool violates(const Program& candidate, const ConstraintStore& store);

}  // namespace lff
