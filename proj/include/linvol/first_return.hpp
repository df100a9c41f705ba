#pragma once

#include <span>
#include <vector>

#include "linvol/involution.hpp"

namespace linvol {

/// Maximal open piece of K whose points share the return itinerary: the
/// natural coding of length rho_K, read off before each step. `map` is the
/// total affine map source -> image accumulated along the way.
struct ReturnPiece {
  Interval source;
  RWord itinerary;
  AffineBranch map;
  Interval image;  // map(source) = T^rho(source), back inside K
};

/// First-return decomposition of a finite union of disjoint open intervals.
/// Pieces come back sorted by (component, left endpoint). Throws HorizonError
/// when some piece has not returned after `horizon` steps (possible
/// connection, or the horizon is too small).
std::vector<ReturnPiece> firstReturn(const LinearInvolution& t, std::span<const Interval> k,
                                     int horizon);

/// First-return system on J x {0,1} packaged as a linear involution on
/// (0, |J|). Letters are named in order of first occurrence scanning the
/// upper pieces left to right, then the lower ones; itineraries[b] is the
/// return word of the piece named by positive letter b, and the piece paired
/// with it carries the inverse itinerary.
struct InducedSystem {
  LinearInvolution system;
  std::vector<RWord> itineraries;
  FieldElem origin;  // left endpoint of J in the original coordinates
};

/// No admissibility check is performed on (lo, hi); callers are expected to
/// know what they are doing. Prefer induceOnWord / rauzyStep.
InducedSystem induceUnchecked(const LinearInvolution& t, const FieldElem& lo, const FieldElem& hi,
                              int horizon);

/// Induce on the projection of I_w to the base interval (admissible for any
/// language word w).
InducedSystem induceOnWord(const LinearInvolution& t, const RWord& w, int horizon);

/// Positive-letter substitution, extended to inverses by x^-1 -> image(x)^-1.
struct Substitution {
  std::vector<RWord> images;  // by base letter

  RWord of(SignedLetter x) const {
    const RWord& im = images[x.base];
    return x.pos ? im : im.inverse();
  }
  RWord apply(const RWord& w) const;
  /// this . inner (apply inner first).
  Substitution composeAfter(const Substitution& inner) const;
};

struct RauzyStep {
  LinearInvolution next;
  Substitution sub;  // new letter -> its itinerary in the old letters
};

/// One step of Rauzy induction: cut the interval on the right by the smaller
/// of the two last lengths and induce. Equal last lengths signal a connection
/// and throw ConnectionError.
RauzyStep rauzyStep(const LinearInvolution& t, int horizon);

}  // namespace linvol
