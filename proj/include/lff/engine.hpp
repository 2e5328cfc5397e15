#pragma once

#include <chrono>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lff/knowledge_base.hpp"
#include "lff/term.hpp"

namespace lff {

enum class Proof {
  Proved,
  Failed,     // search space exhausted without hitting any limit
  Exhausted,  // depth, step, or time limit reached before a proof
};

struct SearchLimits {
  std::size_t max_depth = 64;
  std::size_t max_steps = 20000;
  std::chrono::nanoseconds timeout = std::chrono::milliseconds(10);
};

namespace detail {

enum class Tag : std::uint8_t { Var, Atom, Int, Struct };

struct Cell {
  Tag tag;
  std::uint32_t arity;   // Struct only
  std::int64_t value;    // var index, symbol id, or integer
  std::uint32_t args;    // Struct: offset into arg_refs
};

struct CompiledClause {
  std::uint32_t head;
  std::vector<std::uint32_t> body;
  std::uint32_t num_vars;
};

inline std::uint64_t pred_code(std::uint32_t symbol, std::uint32_t arity) {
  return (static_cast<std::uint64_t>(symbol) << 8) | arity;
}

struct CompiledImage {
  std::vector<Cell> cells;
  std::vector<std::uint32_t> arg_refs;
  std::vector<CompiledClause> clauses;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;

  void add_clause(const Clause& c);
  std::uint32_t compile_literal(const Literal& l, std::unordered_map<Symbol, std::uint32_t>& vars);
  std::uint32_t compile_term(const Term& t, std::unordered_map<Symbol, std::uint32_t>& vars);
};

}  // namespace detail

/// Depth-first SLD resolution over a knowledge base plus extra clauses.
///
/// Body goals run left to right, clauses in declaration order, with
/// iterative deepening on resolution depth. Builtins whose inputs are
/// unbound are delayed; a goal list holding only delayed builtins succeeds.
class SldEngine {
 public:
  explicit SldEngine(const KnowledgeBase& kb);

  /// Clauses are executed with their body as given.
  void add_clause(const Clause& c);

  Proof prove(const Literal& goal, const SearchLimits& limits);

  std::size_t steps_used() const { return total_steps_; }

 private:
  struct Ref {
    std::uint32_t cell;
    std::uint32_t frame;
  };
  struct Binding {
    std::uint32_t cell = kUnbound;
    std::uint32_t frame = 0;
  };
  struct GoalNode {
    Ref lit;
    std::uint32_t depth;
    std::uint32_t next;
  };
  struct Marks {
    std::uint32_t bindings, trail, cells, goals;
  };
  struct ChoicePoint {
    GoalNode goal;
    std::uint32_t rest;
    const std::vector<std::uint32_t>* clauses;
    std::uint32_t next_clause;
    Marks marks;
  };
  enum class Run { Proved, Failed, CutOff, Aborted };

  static constexpr std::uint32_t kUnbound = 0xffffffffu;
  static constexpr std::uint32_t kNil = 0xffffffffu;

  Run run(std::uint32_t goal_cell, std::size_t depth_limit);
  bool try_clauses(const GoalNode& goal, std::uint32_t rest,
                   const std::vector<std::uint32_t>& clauses, std::uint32_t start,
                   std::uint32_t& goals);
  bool select(std::uint32_t goals, GoalNode& selected, std::uint32_t& rest);
  bool builtin_ready(Builtin b, const GoalNode& g);
  bool call_builtin(Builtin b, const GoalNode& g);

  Ref deref(Ref r) const;
  Ref arg(Ref r, std::uint32_t i) const;
  bool unify(Ref a, Ref b);
  bool occurs(std::uint32_t slot, Ref t) const;
  void bind(std::uint32_t slot, Ref value);
  Ref make_int(std::int64_t v);
  Marks marks() const;
  void restore(const Marks& m);
  bool tick();

  detail::CompiledImage image_;
  std::uint32_t static_cells_ = 0;
  std::uint32_t static_args_ = 0;

  std::vector<Binding> bindings_;
  std::vector<std::uint32_t> trail_;
  std::vector<GoalNode> goals_;
  std::vector<ChoicePoint> choices_;

  SearchLimits limits_;
  std::size_t steps_ = 0;
  std::size_t total_steps_ = 0;
  std::chrono::steady_clock::time_point deadline_;
  bool aborted_ = false;
  bool cutoff_ = false;
};

}  // namespace lff
