#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>

#include "lff/bias.hpp"
#include "lff/constraints.hpp"
#include "lff/evaluate.hpp"
#include "lff/knowledge_base.hpp"
#include "lff/musp.hpp"

namespace lff {

struct LearnerConfig {
  /// 0 means max_clauses * (max_body + 1).
  std::size_t max_size = 0;
  EvalConfig eval;
  bool musp_enabled = true;
  std::size_t musp_max_size = 12;
  std::chrono::nanoseconds timeout = std::chrono::seconds(600);
  /// Called with every generated candidate before it is tested.
  std::function<void(const Program&)> on_candidate;
};

struct RunStats {
  std::uint64_t programs_generated = 0;
  std::array<std::size_t, 3> constraints_by_kind{};  // indexed by ConstraintKind
  std::uint64_t musps_found = 0;
  std::uint64_t candidates_pruned = 0;
  std::chrono::nanoseconds total_time{0};
  std::chrono::nanoseconds musp_time{0};
  std::chrono::nanoseconds generate_time{0};
  std::chrono::nanoseconds test_time{0};
  std::optional<std::size_t> solution_size;
  std::optional<std::size_t> solution_rules;
  std::size_t last_size = 0;  // largest size searched
  bool timed_out = false;
};

struct LearnResult {
  std::optional<Program> solution;
  RunStats stats;
};

/// Generate, test, constrain. Sizes are searched in increasing order and
/// the first complete and consistent hypothesis is returned, so it has the
/// fewest literals among hypotheses in the language. With MUSP extraction
/// on, every totally incomplete hypothesis also contributes constraints
/// from its minimal unsatisfiable subprograms.
LearnResult learn(const KnowledgeBase& bk, const ExampleSet& examples, const Bias& bias,
                  const LearnerConfig& cfg);

}  // namespace lff
