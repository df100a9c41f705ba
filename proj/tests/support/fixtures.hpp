#pragma once

#include "linvol/involution.hpp"

namespace linvol::fixtures {

/// Three-letter coherent nonorientable involution over Q(sqrt 5):
/// top (a b b^-1), bottom (c c^-1 a^-1), len b = len c = (3 - sqrt5)/2.
LinearInvolution golden();

/// Four-letter coherent nonorientable involution with rational lengths:
/// top (a b a^-1 c), bottom (c^-1 d^-1 b^-1 d), flips {a, d}.
LinearInvolution fourLetter();

/// Same rows as fourLetter but with c flipped as well (noncoherent) and
/// lengths a = d = 1/4, b = 1/8, c = 3/8; has the periodic point 7/8.
LinearInvolution fourLetterPeriodic();

/// Orientable pair of mutually inverse 2-letter exchanges (golden rotation):
/// top (a b), bottom (b^-1 a^-1), no flips.
LinearInvolution rotation();

/// rotation() with letter a flipped: orientable but noncoherent.
LinearInvolution rotationFlipped();

}  // namespace linvol::fixtures
