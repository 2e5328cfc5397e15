#pragma once

#include <unordered_map>
#include <vector>

#include "lff/canonical.hpp"
#include "lff/constraints.hpp"
#include "lff/evaluate.hpp"
#include "lff/knowledge_base.hpp"
#include "lff/term.hpp"

namespace lff {

/// Satisfiability results keyed by canonical subprogram. Valid only for one
/// fixed (bk, positive examples, budget) triple.
class SatCache {
 public:
  bool check(const Program& s, const std::vector<Literal>& pos, const KnowledgeBase& bk,
             const EvalConfig& cfg);
  std::size_t size() const { return cache_.size(); }
  std::size_t checks() const { return checks_; }

 private:
  std::unordered_map<ProgramKey, bool, ProgramKeyHash> cache_;
  std::size_t checks_ = 0;
};

struct MuspOptions {
  EvalConfig eval;
  /// Programs larger than this are not searched.
  std::size_t max_size = 12;
  bool memoize = true;
};

/// Programs obtained from `h` by deleting one literal, kept when nonempty,
/// connected clause by clause, and subsuming `h`. Deleting a head leaves a
/// goal clause; deleting a clause's only literal drops the clause.
std::vector<Program> subprogs(const Program& h);

/// Depth-first deletion descent: an unsatisfiable program none of whose
/// subprograms is unsatisfiable is reported. `h` is assumed unsatisfiable.
std::vector<Program> deletion_minimal_unsat(const Program& h, const std::vector<Literal>& pos,
                                            const KnowledgeBase& bk, const MuspOptions& opts,
                                            SatCache* cache = nullptr);

/// The smallest of the deletion-minimal unsatisfiable subprograms. Empty
/// when `h` exceeds the size cap.
std::vector<Program> find_musps(const Program& h, const std::vector<Literal>& pos,
                                const KnowledgeBase& bk, const MuspOptions& opts,
                                SatCache* cache = nullptr);

/// A specialisation and a redundancy constraint for each MUSP of `h`.
std::vector<Constraint> unsat_constraints(const Program& h, const std::vector<Literal>& pos,
                                          const KnowledgeBase& bk, const MuspOptions& opts,
                                          SatCache* cache = nullptr,
                                          std::size_t* musps_found = nullptr);

}  // namespace lff
