#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linvol/involution.hpp"
#include "linvol/parallel.hpp"

namespace linvol {

/// All language words up to maxLen, shortlex-sorted, empty word included.
struct LanguageSlice {
  int maxLen = 0;
  std::vector<RWord> words;
  std::string source;  // fingerprint of the involution the slice came from

  bool contains(const RWord& w) const;
  std::vector<RWord> ofLength(int n) const;
  std::vector<RWord> upToLength(int n) const;
};

/// Enumerates L(T) up to maxLen by breadth-first interval refinement
/// (keep w iff I_w is nonempty). Exec::Parallel distributes each level over
/// the previous one's words; output is identical for both policies.
LanguageSlice language(const LinearInvolution& t, int maxLen, Exec exec = Exec::Serial);

/// Length-n natural coding of z. Throws SingularPointError if the orbit
/// meets a division point before n steps.
RWord codingOfPoint(const LinearInvolution& t, Pt z, int n);

enum class Parity { Even, Odd };

/// A letter is odd when its two intervals share a component; a word's parity
/// is the parity of its odd-letter count.
Parity wordParity(const LinearInvolution& t, const RWord& w);

struct LaminaryReport {
  bool reduced = false;
  bool symmetric = false;
  bool factorial = false;
  bool pass() const { return reduced && symmetric && factorial; }
};

LaminaryReport checkLaminary(const LanguageSlice& slice);

/// Splits the slice into two factorial halves swapped by inversion, coloring
/// each word by the component of I_w. Returns nullopt when no such split
/// exists within the slice (the language is nonorientable).
std::optional<std::pair<std::vector<RWord>, std::vector<RWord>>> checkOrientable(
    const LinearInvolution& t, const LanguageSlice& slice);

/// Least n <= maxLen such that every length-n word of the slice contains u
/// (nonorientable case) or u or u^-1 (orientable case) as a factor. nullopt
/// means "not witnessed within the slice", never "fails".
std::optional<int> checkRecurrence(const LinearInvolution& t, const LanguageSlice& slice,
                                   const RWord& u);

}  // namespace linvol
