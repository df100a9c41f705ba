#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linvol/field.hpp"
#include "linvol/words.hpp"

namespace linvol {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point's orbit ran into a division point (or a mirror of one).
class SingularPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConnectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HorizonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Component : uint8_t { Upper = 0, Lower = 1 };

inline Component mirrorOf(Component c) {
  return c == Component::Upper ? Component::Lower : Component::Upper;
}

struct Pt {
  FieldElem x;
  Component comp = Component::Upper;
  friend bool operator==(const Pt& a, const Pt& b) { return a.comp == b.comp && a.x == b.x; }
};

/// Open subinterval (lo, hi) of one component of I x {0,1}.
struct Interval {
  FieldElem lo, hi;
  Component comp = Component::Upper;

  FieldElem length() const { return hi - lo; }
  bool isEmpty() const { return !(lo < hi); }
  bool contains(const Pt& z) const { return z.comp == comp && lo < z.x && z.x < hi; }
  bool containsInterval(const Interval& o) const {
    return o.comp == comp && lo <= o.lo && o.hi <= hi;
  }
  bool sameSpan(const Interval& o) const { return comp == o.comp && lo == o.lo && hi == o.hi; }
};

/// Intersection on matching components; empty result is represented by an
/// interval with hi <= lo.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

struct LabeledInterval {
  Interval iv;
  RWord label;
};

/// Affine branch p -> sign*p + offset carrying component `from` to `to`.
/// sign is +1 (translation) or -1 (symmetry).
struct AffineBranch {
  int sign = 1;
  FieldElem offset;
  Component from = Component::Upper;
  Component to = Component::Upper;

  Pt map(const Pt& z) const;
  Interval mapInterval(const Interval& iv) const;
  /// Source coordinate whose image is the given coordinate.
  FieldElem pullback(const FieldElem& image) const;
  AffineBranch inverted() const;
  /// this after g (apply g first).
  AffineBranch composeAfter(const AffineBranch& g) const;
};

struct GenPerm {
  std::vector<SignedLetter> top, bottom;
  int alphabetSize() const;
};

struct Classification {
  bool orientable = false;
  bool coherent = false;
};

struct Connection {
  Pt from;  // singularity of T^-1
  Pt to;    // singularity of T
  int steps = 0;
};

/// Marker requesting the coherent flip set in build(): exactly the letters
/// whose two intervals share a component.
inline constexpr struct CoherentFlips {
} kCoherentFlips{};

/// Linear involution T = sigma2 . sigma1 on two copies of an open interval.
/// Immutable after build(); all queries are pure.
class LinearInvolution {
 public:
  static LinearInvolution build(GenPerm perm, std::vector<FieldElem> lengths,
                                std::set<uint8_t> flips,
                                std::optional<FieldElem> intervalLength = std::nullopt);
  static LinearInvolution build(GenPerm perm, std::vector<FieldElem> lengths, CoherentFlips,
                                std::optional<FieldElem> intervalLength = std::nullopt);

  int alphabetSize() const { return k_; }
  const FieldElem& intervalLength() const { return length_; }
  const GenPerm& perm() const { return perm_; }
  const FieldElem& letterLength(uint8_t base) const { return lengths_[base]; }
  const std::set<uint8_t>& flips() const { return flips_; }
  bool flipped(uint8_t base) const { return flips_.count(base) != 0; }

  const Interval& letterInterval(SignedLetter x) const { return intervals_[slot(x)]; }
  const AffineBranch& sigma1Branch(SignedLetter x) const { return branches_[slot(x)]; }
  /// sigma1 branch followed by the component swap: the branch of T on I_x.
  AffineBranch tBranch(SignedLetter x) const;

  /// Division points of one component, in increasing order.
  const std::vector<FieldElem>& divisionCoords(Component c) const {
    return divisions_[static_cast<int>(c)];
  }
  /// Letters of one component, left to right.
  const std::vector<SignedLetter>& row(Component c) const {
    return rowOf_[static_cast<int>(c)];
  }
  std::vector<Pt> divisionPoints() const;  // the set Sigma
  bool isDivisionPoint(const Pt& z) const;

  Pt sigma1(const Pt& z) const;  // throws SingularPointError on division points
  Pt sigma2(const Pt& z) const;
  Pt apply(const Pt& z) const;     // T
  Pt applyInv(const Pt& z) const;  // T^-1
  /// The unique letter whose interval contains z.
  SignedLetter locate(const Pt& z) const;

  /// I_w for nonempty reduced w, or nullopt when w is not in the language.
  std::optional<Interval> wordInterval(const RWord& w) const;
  /// Same interval tagged with its word.
  std::optional<LabeledInterval> labeledWordInterval(const RWord& w) const;
  struct WordCell {
    Interval iw;    // I_w
    Interval last;  // T^{|w|-1}(I_w), inside the last letter's interval
  };
  std::optional<WordCell> wordCell(const RWord& w) const;

  Classification classify() const;
  /// True when I_base and its inverse lie on distinct components.
  bool evenLetter(uint8_t base) const;

  /// Search for a connection: forward orbit of a singularity of T^-1 hitting
  /// a singularity of T within `horizon` steps. Absence only certifies "no
  /// connection up to horizon".
  std::optional<Connection> detectConnection(int horizon) const;

  LinearInvolution relabeled(std::span<const SignedLetter> imageOfPositive) const;
  LinearInvolution swappedComponents() const;
  LinearInvolution rescaled(const FieldElem& newIntervalLength) const;

  friend bool operator==(const LinearInvolution& s, const LinearInvolution& t);

  /// Canonical text form (spec-file body); identical data gives identical text.
  std::string describe() const;

 private:
  LinearInvolution() = default;
  size_t slot(SignedLetter x) const {
    return static_cast<size_t>(x.base) * 2 + (x.pos ? 0 : 1);
  }
  void deriveLayout();

  int k_ = 0;
  GenPerm perm_;
  std::vector<FieldElem> lengths_;  // per base letter
  std::set<uint8_t> flips_;
  FieldElem length_;

  // derived
  std::vector<Interval> intervals_;      // per slot
  std::vector<AffineBranch> branches_;   // per slot
  std::vector<FieldElem> divisions_[2];  // interior division coords per component
  std::vector<SignedLetter> rowOf_[2];   // letters left to right per component
};

/// Deterministic interior sample: midpoint, then the 1/3 point, 1/4 point,
/// ... as the retry attempt grows.
Pt samplePoint(const Interval& iv, int attempt = 0);

}  // namespace linvol
