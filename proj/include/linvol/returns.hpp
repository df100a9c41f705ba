#pragma once

#include <vector>

#include "linvol/first_return.hpp"
#include "linvol/language.hpp"
#include "linvol/subgroup_graph.hpp"

namespace linvol {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The dynamical and combinatorial routes disagreed; always a bug, never a
/// property of the input.
class RouteError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class AnchorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReturnKind { Complete, Mixed, Right, Left, Prime };

struct ReturnSet {
  ReturnKind kind = ReturnKind::Complete;
  RWord anchor;                  // empty for Prime
  std::vector<RWord> words;      // shortlex-sorted, duplicate-free
  bool contains(const RWord& w) const;
};

struct ReturnBudget {
  /// 0 = automatic (10 * k * cap, growing with the cap).
  int horizon = 0;
  /// Hard bound on the language-scan depth.
  int scanCapMax = 4096;
};

/// Each of the five kinds is computed twice: a dynamical route through the
/// first-return map (authoritative) and a combinatorial scan of the language
/// prefix tree used as a cross-check; disagreement throws RouteError.
/// Anchors outside the language throw AnchorError.
ReturnSet completeReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget = {});
ReturnSet mixedReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget = {});
ReturnSet rightReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget = {});
ReturnSet leftReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget = {});
ReturnSet primeWords(const LinearInvolution& t, const SubgroupGraph& g, ReturnBudget budget = {});

/// Complete first return words to an arbitrary finite set X, by language
/// scan only, bounded by maxLen; no closure certificate (the golden-tested
/// cases are X = {w} and X = {w, w^-1}, handled above).
std::vector<RWord> completeReturnsToSet(const LinearInvolution& t, std::span<const RWord> x,
                                        int maxLen);

/// K_w = I_{w^-1} u sigma2(I_{w^-1}), the induction domain whose return
/// itineraries are the mixed first return words to w.
std::vector<Interval> returnDomain(const LinearInvolution& t, const RWord& w);

// Single-route entry points (exposed for tests and the verification sweeps).
std::vector<RWord> mixedReturnsDynamic(const LinearInvolution& t, const RWord& w, int horizon);
std::vector<RWord> completeReturnsDynamic(const LinearInvolution& t, const RWord& w, int horizon);
std::vector<RWord> completeReturnsScan(const LanguageSlice& slice, const RWord& w);
std::vector<RWord> completeReturnsToSingletonScan(const LanguageSlice& slice, const RWord& w);
/// Prefix-tree scan: grow words from the seed occurrence by interval
/// refinement, emitting each branch at its first second occurrence of the
/// anchor pair (or of the anchor alone when pairWithInverse is false).
/// Branches still alive at depthCap throw RouteError: the dynamical route
/// bounds every complete return word, so a longer survivor is a
/// disagreement.
std::vector<RWord> completeReturnsTreeScan(const LinearInvolution& t, const RWord& w,
                                           bool pairWithInverse, int depthCap);
std::vector<RWord> primeWordsDynamic(const LinearInvolution& t, const SubgroupGraph& g,
                                     int horizon);
std::vector<RWord> primeWordsScan(const LinearInvolution& t, const SubgroupGraph& g, int maxLen,
                                  bool* closed = nullptr);

/// N(u): erase a leading w and a trailing w^-1 when present.
RWord mixedTruncate(const RWord& u, const RWord& w);

}  // namespace linvol
