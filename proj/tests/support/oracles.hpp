#pragma once

#include <cstdint>
#include <vector>

#include "linvol/first_return.hpp"
#include "linvol/involution.hpp"

namespace linvol::oracles {

/// Independent sign oracle for p/q + (r/s)*sqrt(d), entirely in 128-bit
/// integer arithmetic (cross-multiplication, no gmp, no doubles). Inputs
/// must be small enough that the products fit; q, s > 0.
int quadSign(int64_t p, int64_t q, int64_t r, int64_t s, uint64_t d);

/// Factors of length <= maxLen of the fixed point of f (iterated from the
/// letter 'a' via f.f so the prefix stabilizes), closed under inversion,
/// empty word included. Iteration continues until the factor set is stable
/// across two further rounds.
std::vector<RWord> substitutionFactorOracle(const Substitution& f, int maxLen);

/// Factors of length <= maxLen of one long finite orbit coding, closed
/// under inversion, empty word included. steps bounds the orbit length;
/// the start point retries past singular orbits deterministically.
std::vector<RWord> orbitFactorOracle(const LinearInvolution& t, int maxLen, int steps);

/// True iff the given transversal (one word per inverse pair) is a basis of
/// the subgroup it generates, decided by exhaustive length-nonincreasing
/// Nielsen transformations: the tuple is rank-deficient iff the search
/// reaches a tuple containing the empty word.
bool nielsenIsBasis(const std::vector<RWord>& transversal);

}  // namespace linvol::oracles
