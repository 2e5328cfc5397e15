#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lff/term.hpp"

namespace lff {

enum class Direction { In, Out };

using ModeTable = std::unordered_map<PredicateKey, std::vector<Direction>>;

/// Natively evaluated integer relations.
enum class Builtin { Decrement, Increment, Geq, Zero, One, Even, Odd, Sum };

std::optional<Builtin> builtin_for(const PredicateKey& key);

/// The bundled list relations: head/2, tail/2, empty/1, element/2, cons/3,
/// append/3 (append an element at the end), eq/2.
std::vector<Clause> standard_library();

namespace detail {
struct CompiledImage;
}

/// Background knowledge: definite clauses over list/integer terms plus the
/// native integer builtins. Immutable after construction.
class KnowledgeBase {
 public:
  /// Library relations are added unless `clauses` already defines them.
  explicit KnowledgeBase(std::vector<Clause> clauses = {}, bool with_standard_library = true);

  const std::vector<Clause>& clauses() const { return clauses_; }
  /// Clauses as supplied, without the bundled library.
  const std::vector<Clause>& user_clauses() const { return user_clauses_; }

  bool defines(const PredicateKey& key) const;
  static bool is_builtin(const PredicateKey& key) { return builtin_for(key).has_value(); }

  /// Argument directions used to order hypothesis bodies before execution.
  void set_modes(ModeTable modes) { modes_ = std::move(modes); }
  const ModeTable& modes() const { return modes_; }

  const detail::CompiledImage& image() const { return *image_; }

 private:
  std::vector<Clause> clauses_;
  std::vector<Clause> user_clauses_;
  std::unordered_set<PredicateKey> defined_;
  ModeTable modes_;
  std::shared_ptr<const detail::CompiledImage> image_;
};

}  // namespace lff
