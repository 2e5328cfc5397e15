#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <unordered_map>
#include <optional>
#include <vector>

#include "lff/bias.hpp"
#include "lff/constraints.hpp"
#include "lff/term.hpp"

namespace lff {

/// Enumerates hypotheses of one size at a time in a fixed order, skipping
/// those that violate the constraint store.
///
/// Clauses come from per-size pools of canonical well-formed clauses that
/// are reduced: no body literal can be removed by mapping the clause into
/// the rest of itself. A non-reduced clause is equivalent to a smaller one.
/// A program is a tuple of distinct pool clauses with at most max_clauses
/// members. Besides the constraints, a program is skipped if it is
/// recursive without a base case or one of its clauses subsumes another
/// (the subsumed clause adds nothing, so the program cannot be optimal).
class Generator {
 public:
  explicit Generator(Bias bias);

  const Bias& bias() const { return bias_; }

  /// Canonical reduced well-formed clauses with exactly `clause_size` literals.
  const std::vector<Clause>& pool(std::size_t clause_size);

  /// Starts enumerating programs of exactly `size` literals.
  void reset(std::size_t size);

  /// Next program of the current size consistent with `store`, or nullopt
  /// once the size is exhausted. Constraints added between calls apply to
  /// all later candidates.
  std::optional<Program> generate(const ConstraintStore& store);

  /// generate() gives up with nullopt once `deadline` passes.
  void set_deadline(std::chrono::steady_clock::time_point deadline) { deadline_ = deadline; }
  bool expired() const { return expired_; }

  /// Candidates skipped because of the store since construction.
  std::uint64_t pruned() const { return pruned_; }
  /// Candidates skipped by the base-case and subsumption rules.
  std::uint64_t rejected() const { return rejected_; }

 private:
  static constexpr std::size_t kMaxBody = 8;
  static constexpr std::uint8_t kNoArg = 0xff;

  // Literal over numbered variables; predicate 0 is the head predicate and
  // variables 0..head_arity-1 are the head arguments.
  struct Lit {
    std::uint8_t pred = 0;
    std::array<std::uint8_t, 4> args{kNoArg, kNoArg, kNoArg, kNoArg};

    friend bool operator==(const Lit&, const Lit&) = default;
    friend auto operator<=>(const Lit&, const Lit&) = default;
  };
  struct Body {
    std::array<Lit, kMaxBody> lits{};
    std::uint8_t size = 0;

    const Lit* begin() const { return lits.data(); }
    const Lit* end() const { return lits.data() + size; }
    friend bool operator==(const Body& a, const Body& b) {
      return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
    friend bool operator<(const Body& a, const Body& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
  };
  struct BodyHash {
    std::size_t operator()(const Body& b) const noexcept;
  };

  // Relation of a clause to constraint `constraint`: bit i is set when the
  // clause stands in the constraint's relation to payload clause i.
  struct Relation {
    std::uint32_t constraint;
    std::uint32_t mask;
  };
  // A canonical connected body. Every body past the first level was built
  // from `parent` on the level below by adding literal `added`.
  struct Node {
    Body body;
    std::int32_t parent = -1;
    std::uint8_t added = 0;
    std::uint64_t preds = 0;
    std::uint32_t checked = 0;  // payloads already folded into relations
    bool dead = false;          // pruned, with all extensions, as a lone clause
    std::vector<Relation> relations;
  };
  enum class LevelState { None, Partial, Full };
  struct Signature {
    std::vector<std::size_t> arity;
    std::vector<std::array<int, 4>> types;
    std::vector<std::array<bool, 4>> in;
  };
  struct PoolClause {
    std::uint8_t level = 0;  // body length
    std::uint32_t node = 0;  // index into levels_[level]
    bool recursive = false;
  };
  struct PayloadClause {
    Clause clause;
    bool compact = false;  // variables only, bias predicates, canonical head
    bool headed = false;
    Body body;
    std::uint64_t preds = 0;
    std::uint64_t name_mask = 0;
  };
  struct Payload {
    ConstraintKind kind;
    std::vector<PayloadClause> clauses;
    std::uint32_t full = 0;
  };

  void build_signature();
  void build_level(std::size_t k, bool full);
  void ensure_full(std::size_t k);
  void ensure_some(std::size_t k);
  void prepare();
  void sync_payloads(const ConstraintStore& store);
  PayloadClause compile_payload(const Clause& c) const;
  Clause to_clause(const Body& b) const;
  void refresh(std::size_t level, std::uint32_t index);
  const Node& node(const PoolClause& pc) const { return levels_[pc.level][pc.node]; }
  bool relation(const Node& n, std::size_t level, const PayloadClause& pc, ConstraintKind kind,
                bool parent_holds) const;
  bool store_prunes() const;
  bool structurally_rejected() const;
  bool first_tuple();
  bool next_tuple();

  Bias bias_;
  std::size_t head_arity_ = 0;
  std::vector<PredicateKey> preds_;  // head predicate first
  std::unordered_map<PredicateKey, std::uint8_t> pred_ids_;
  Signature sig_;
  // levels_[k] holds bodies of k literals. A partial level keeps only the
  // extensions of parents that are not dead.
  std::vector<std::vector<Node>> levels_;
  std::vector<LevelState> level_state_;
  std::vector<std::vector<PoolClause>> pools_;  // indexed by clause size
  std::vector<std::vector<Clause>> pool_views_;
  std::vector<bool> view_ready_;
  std::vector<Payload> payloads_;

  std::vector<std::vector<std::size_t>> partitions_;
  std::size_t partition_ = 0;
  std::vector<std::size_t> tuple_;
  std::vector<const PoolClause*> current_;
  bool fresh_ = true;
  bool prepared_ = false;
  std::chrono::steady_clock::time_point deadline_ = std::chrono::steady_clock::time_point::max();
  bool expired_ = false;
  bool past_deadline();

  std::uint64_t pruned_ = 0;
  std::uint64_t rejected_ = 0;
};

/// Bitmask over predicate names used to skip hopeless subsumption checks.
std::uint64_t predicate_mask(const std::vector<Literal>& body);

/// clause_subsumes with a cheap predicate-mask precheck.
bool quick_subsumes(const Clause& c1, std::uint64_t mask1, const Clause& c2, std::uint64_t mask2);

}  // namespace lff
