#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace lff {

/// Interned name. Two symbols are equal iff their names are equal.
///
/// Ids are process-global and assigned in first-seen order, so they are
/// stable within a run but must not be used to order output.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  std::string_view name() const;
  std::uint32_t id() const { return id_; }
  bool empty() const { return id_ == 0; }

  friend bool operator==(Symbol, Symbol) = default;
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  std::uint32_t id_ = 0;
};

/// Predicate name plus arity.
struct PredicateKey {
  Symbol name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateKey&, const PredicateKey&) = default;
  friend auto operator<=>(const PredicateKey&, const PredicateKey&) = default;

  std::string to_string() const;
};

}  // namespace lff

template <>
struct std::hash<lff::Symbol> {
  std::size_t operator()(lff::Symbol s) const noexcept { return s.id(); }
};

template <>
struct std::hash<lff::PredicateKey> {
  std::size_t operator()(const lff::PredicateKey& k) const noexcept {
    return (static_cast<std::size_t>(k.name.id()) << 8) ^ k.arity;
  }
};
