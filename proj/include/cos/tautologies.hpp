// Statman and DT tautology families. The Statman generator comes with the
// stage derivation (2n interactions, 2n switches, 2n-1 contractions as macro
// steps) and the resulting polynomial analytic proofs.

#ifndef COS_TAUTOLOGIES_HPP
#define COS_TAUTOLOGIES_HPP

#include "cos/derivation.hpp"

namespace cos {

/// S_n over atoms c_1..c_n, d_1..d_n; size is 2n^2 + 2.
Formula statman(std::size_t n);

/// KS derivation (macro steps) from S_n to S_{n+1}: 2n interaction macros,
/// 2n switches, 2n-1 contraction macros. Macro accounting gives 28n-6.
CosDerivation statman_step(std::size_t n);

/// KS proof of S_n with macro steps; expand_macros yields the strict KS proof.
CosDerivation statman_proof(std::size_t n);

/// f(n) of the DT set, with beta-atoms named b<k>.
Formula dt(std::size_t n);

}  // namespace cos

#endif
