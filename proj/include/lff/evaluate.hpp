#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "lff/engine.hpp"
#include "lff/knowledge_base.hpp"
#include "lff/term.hpp"

namespace lff {

struct EvalConfig {
  std::chrono::nanoseconds timeout = std::chrono::milliseconds(10);
  std::size_t max_depth = 64;
  std::size_t max_steps = 20000;

  SearchLimits limits() const { return {max_depth, max_steps, timeout}; }
};

struct ExampleSet {
  std::vector<Literal> pos;
  std::vector<Literal> neg;
};

enum class Completeness { Complete, PartiallyComplete, TotallyIncomplete };
enum class Consistency { Consistent, Inconsistent };

struct Outcome {
  Completeness completeness = Completeness::TotallyIncomplete;
  Consistency consistency = Consistency::Consistent;

  bool is_solution() const {
    return completeness == Completeness::Complete && consistency == Consistency::Consistent;
  }
  std::string to_string() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Classification from per-example entailment results.
Outcome classify(const std::vector<bool>& pos_entailed, const std::vector<bool>& neg_entailed);

/// Body reordered so each literal's `in` arguments are bound by the head
/// (definite clauses) or by earlier literals, where possible.
Clause order_body(const Clause& c, const ModeTable& modes);

/// Engine over `kb` plus the definite clauses of `h` (bodies mode-ordered).
SldEngine make_engine(const KnowledgeBase& kb, const Program& h);

/// Budget exhaustion counts as not entailed.
bool entails(const KnowledgeBase& kb, const Program& h, const Literal& goal, const EvalConfig& cfg);

/// Stops early once the completeness class is settled and at the first
/// entailed negative.
Outcome test(const std::vector<Literal>& pos, const std::vector<Literal>& neg,
             const KnowledgeBase& kb, const Program& h, const EvalConfig& cfg);

/// Subprogram satisfiability. Goal clauses `:- body` become `is_sat :- body`;
/// the subprogram is satisfiable if is_sat is derivable or its definite
/// clauses entail some positive example. An inconclusive check (budget
/// exhausted) is reported as satisfiable.
bool is_satisfiable(const Program& s, const std::vector<Literal>& pos, const KnowledgeBase& kb,
                    const EvalConfig& cfg);

}  // namespace lff
