// Equality = of formulae: commutativity, associativity and the four unit
// equations, closed under contexts. Decided by reduction to a canonical form:
// units eliminated where the equations allow, connectives fully flattened,
// children sorted under a fixed total order.

#ifndef COS_CANONICAL_HPP
#define COS_CANONICAL_HPP

#include "cos/formula.hpp"

namespace cos {

/// Fixed total order: f < t < atoms < variables < And-compounds < Or-compounds;
/// leaves by name then positive before negated; compounds lexicographically by
/// their (canonical) children, shorter prefix first.
int compare_formulas(const Formula& a, const Formula& b);

/// Idempotent; result is =-equal to the input and never larger.
Formula canonicalize(const Formula& f);

bool equal_mod_ac(const Formula& a, const Formula& b);

}  // namespace cos

#endif
