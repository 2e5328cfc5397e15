#pragma once

#include <unordered_map>
#include <vector>

#include "lff/knowledge_base.hpp"
#include "lff/term.hpp"

namespace lff {

/// Hypothesis language: which predicates may appear where, argument types
/// and directions, and size limits.
struct Bias {
  PredicateKey head_pred;
  std::vector<PredicateKey> body_preds;
  std::unordered_map<PredicateKey, std::vector<Symbol>> types;
  ModeTable directions;
  std::size_t max_vars = 5;
  std::size_t max_body = 5;
  std::size_t max_clauses = 2;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;

  /// head_pred first, then body_preds without repeats.
  std::vector<PredicateKey> predicates() const;
};

/// Clause-level membership in the hypothesis language: correct head with
/// distinct variables, allowed body predicates, size and variable limits,
/// one type per variable, a body order in which every `in` argument is
/// bound by a head `in` variable or an earlier literal's `out`, connected, variables
/// only (no constants or function symbols), and no body literal equal to
/// the head.
bool well_formed(const Clause& c, const Bias& bias);

}  // namespace lff
