// Expansion of nonatomic structural steps into atomic derivations:
// interaction into {ai + switch}, weakening into {aw + switch}, contraction
// into {ac + medial}, following the inductive constructions; plus the
// derivations of coweakening and cocontraction from KSg + cut, and the
// SKSg-to-SKS translation for ground derivations.

#ifndef COS_MACRO_EXPAND_HPP
#define COS_MACRO_EXPAND_HPP

#include "cos/derivation.hpp"

namespace cos {

struct expand_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Expands one ground instance of i/w/c (either direction) applied at path
/// inside premiss/conclusion. The result is a derivation with the same
/// endpoints in the atomic subsystem ({ai,s}, {aw,s} or {ac,m} plus =).
CosDerivation expand_structural(Rule r, const Formula& premiss, const Formula& conclusion,
                                const Path& path);

/// Derives a coweakening or cocontraction instance in KSg plus cut, as the two
/// displayed five- and six-step derivations.
CosDerivation derive_co_rules(Rule r, const Formula& premiss, const Formula& conclusion,
                              const Path& path);

/// Replaces every nonatomic structural step of a ground derivation by its
/// atomic expansion. KSg input lands in KS, aKSg in aKS, anything else in SKS.
CosDerivation sksg_to_sks(const CosDerivation& d);

/// Expands macro steps in place, keeping the derivation's own system.
CosDerivation expand_macros(const CosDerivation& d);

}  // namespace cos

#endif
