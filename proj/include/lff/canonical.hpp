#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lff/term.hpp"

namespace lff {

/// Token sequence identifying a clause up to variable renaming and body
/// literal order/duplication.
using ClauseKey = std::vector<std::int64_t>;

/// Sorted clause keys; identifies a program up to clause order as well.
using ProgramKey = std::vector<ClauseKey>;

/// Minimal token encoding over all variable renamings (head pinned first).
ClauseKey canonical_clause_key(const Clause& c);

/// `c` with variables renamed A, B, C, ... in canonical order and the body
/// sorted and deduplicated.
Clause canonical_clause(const Clause& c);

ProgramKey canonical_form(const Program& p);

/// Name of the i-th canonical variable: A..Z, then V26, V27, ...
Symbol canonical_variable_name(std::size_t i);

struct ClauseKeyHash {
  std::size_t operator()(const ClauseKey& k) const noexcept;
};

struct ProgramKeyHash {
  std::size_t operator()(const ProgramKey& k) const noexcept;
};

}  // namespace lff
