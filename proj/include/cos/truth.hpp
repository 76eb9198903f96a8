// Truth-table evaluation over atoms and variables (variables treated as
// atoms). Assignments are swept 64 at a time.

#ifndef COS_TRUTH_HPP
#define COS_TRUTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cos/formula.hpp"

namespace cos {

struct too_many_atoms : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Distinct atom and variable names of f, sorted.
std::vector<std::string> leaf_names(const Formula& f);

/// True iff f evaluates to true under every assignment to its leaves.
/// Throws too_many_atoms if the number of distinct names exceeds the bound.
bool is_tautology(const Formula& f, std::size_t atom_bound = 24);

/// True iff premiss implies conclusion under every assignment to the union of
/// their leaves.
bool implies_semantically(const Formula& premiss, const Formula& conclusion,
                          std::size_t atom_bound = 16);

/// True iff the two formulae have identical truth tables.
bool equivalent_semantically(const Formula& a, const Formula& b,
                             std::size_t atom_bound = 16);

}  // namespace cos

#endif
