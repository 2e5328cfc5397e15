#pragma once

#include "lff/term.hpp"

namespace lff {

/// theta-subsumption: some substitution maps c1's literal set into c2's.
/// A headless c1 matches its body into c2's body whatever c2's head is;
/// a headed c1 never subsumes a goal clause.
bool clause_subsumes(const Clause& c1, const Clause& c2);

/// Every clause of t2 is subsumed by some clause of t1.
bool theory_subsumes(const Program& t1, const Program& t2);

/// Total literal count, heads included.
std::size_t program_size(const Program& h);

bool is_recursive(const Clause& c);
bool has_recursion(const Program& h);

/// Literal/variable incidence graph is one component. Variable-free
/// literals join every component.
bool is_connected(const Clause& c);

}  // namespace lff
