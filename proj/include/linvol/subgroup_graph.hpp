#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linvol/involution.hpp"
#include "linvol/words.hpp"

namespace linvol {

/// Folded Stallings graph of a finitely generated subgroup of the free group
/// on k letters, base vertex 0. Vertices are numbered breadth-first from the
/// base with edges explored in canonical letter order, so equal subgroups
/// built from the same generators serialize identically. A complete graph
/// (every vertex carries all 2k directions) is the coset automaton of a
/// finite-index subgroup.
class SubgroupGraph {
 public:
  SubgroupGraph() = default;

  static SubgroupGraph fold(std::span<const RWord> generators, int alphabetSize);
  static SubgroupGraph bouquet(int alphabetSize);
  /// Coset automaton of the stabilizer of 0 under an action where letter b
  /// sends vertex v to action[b][v]. Requires permutations acting
  /// transitively.
  static SubgroupGraph fromAction(const std::vector<std::vector<int>>& action);

  int alphabetSize() const { return k_; }
  int vertexCount() const { return static_cast<int>(out_.size()); }
  static constexpr int base() { return 0; }

  std::optional<int> step(int v, SignedLetter x) const;
  std::optional<int> trace(int v, const RWord& w) const;
  bool member(const RWord& w) const { return trace(base(), w) == base(); }

  int edgeCount() const;
  int rank() const { return edgeCount() - vertexCount() + 1; }
  bool complete() const;
  /// Finite iff the graph is complete; then the index equals the vertex count.
  std::optional<int> index() const;

  /// Spanning-tree basis: one reduced word per geometric edge outside the
  /// canonical BFS tree. Size equals rank().
  std::vector<RWord> basisWords() const;
  /// Subgroup equality by mutual membership of basis words.
  bool sameSubgroup(const SubgroupGraph& other) const;

  /// Line format: "vertices n" / "base 0" / one "edge src letter dst" per
  /// positive-letter edge, sorted by (src, letter).
  std::string serialize() const;

  friend bool operator==(const SubgroupGraph& a, const SubgroupGraph& b) {
    return a.k_ == b.k_ && a.out_ == b.out_;
  }

 private:
  int k_ = 0;
  // out_[v][slot]: destination of the edge labeled by the slot's letter
  // (positive letters first, then inverses), or -1.
  std::vector<std::vector<int>> out_;

  size_t slotOf(SignedLetter x) const {
    return x.pos ? x.base : static_cast<size_t>(k_) + x.base;
  }
  SignedLetter letterOfSlot(size_t s) const {
    return s < static_cast<size_t>(k_)
               ? SignedLetter{static_cast<uint8_t>(s), true}
               : SignedLetter{static_cast<uint8_t>(s - static_cast<size_t>(k_)), false};
  }
  void canonicalize();
};

enum class BasisVerdict { Yes, NotSymmetric, NotFree, WrongSubgroup };

std::string to_string(BasisVerdict v);

/// X is a symmetric basis of `target` iff it is closed under inversion
/// (without the empty word), folds to a graph of rank |X|/2, and generates
/// the same subgroup as `target`.
BasisVerdict isSymmetricBasis(std::span<const RWord> x, const SubgroupGraph& target);

/// Parity covering graph of the involution's even group: the bouquet when
/// every letter is even, otherwise the 2-vertex graph where even letters
/// loop and odd letters cross.
SubgroupGraph evenSubgroup(const LinearInvolution& t);

struct LiftedPt {
  Pt z;
  int coset = SubgroupGraph::base();
  friend bool operator==(const LiftedPt& a, const LiftedPt& b) {
    return a.coset == b.coset && a.z == b.z;
  }
};

/// Product system on I^ x {cosets of G}: one step applies T to the point and
/// advances the coset by the letter the point sits in. Its first return to
/// the base fiber has the prime words as itineraries. With G = F_A (one
/// coset) the lift is the involution itself. Borrows both arguments, which
/// must outlive it.
class CosetLift {
 public:
  CosetLift(const LinearInvolution& t, const SubgroupGraph& g);

  LiftedPt apply(const LiftedPt& p) const;
  LiftedPt applyInv(const LiftedPt& p) const;
  int degree() const { return *g_->index(); }
  const LinearInvolution& base() const { return *t_; }
  const SubgroupGraph& cosets() const { return *g_; }

 private:
  const LinearInvolution* t_;
  const SubgroupGraph* g_;
};

}  // namespace linvol
