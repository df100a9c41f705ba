#include "linvol/returns.hpp"

#include <algorithm>
#include <set>

namespace linvol {

namespace {

std::vector<RWord> sortedUnique(std::vector<RWord> words) {
  std::sort(words.begin(), words.end(), ShortlexLess{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

int autoHorizon(const LinearInvolution& t, int cap) {
  return std::max(256, 10 * t.alphabetSize() * cap);
}

void requireAnchor(const LinearInvolution& t, const RWord& w) {
  if (w.empty()) throw AnchorError("anchor word must be nonempty");
  if (!t.wordInterval(w))
    throw AnchorError("anchor word '" + w.str() + "' is not in the language");
}

int maxLength(const std::vector<RWord>& words) {
  int m = 0;
  for (const RWord& w : words) m = std::max(m, w.size());
  return m;
}

/// Run a dynamical computation, growing the automatic horizon until it
/// closes or the budget is out.
template <typename Fn>
auto withGrowingHorizon(const LinearInvolution& t, const RWord& w, const ReturnBudget& budget,
                        Fn&& fn) {
  int cap = std::max(4 * std::max(w.size(), 1), 8);
  for (;;) {
    const int horizon = budget.horizon > 0 ? budget.horizon : autoHorizon(t, cap);
    try {
      return fn(horizon);
    } catch (const HorizonError& e) {
      if (budget.horizon > 0 || cap > budget.scanCapMax)
        throw BudgetError(std::string("budget exhausted before closure: ") + e.what());
      cap *= 2;
    }
  }
}

void crossCheck(const char* what, const std::vector<RWord>& dynamical,
                const std::vector<RWord>& scanned) {
  if (dynamical != scanned) {
    std::string msg = std::string(what) + ": dynamical and language-scan routes disagree;";
    msg += " dynamical " + std::to_string(dynamical.size()) + " words, scan " +
           std::to_string(scanned.size());
    throw RouteError(msg);
  }
}

int scanCapFor(const ReturnBudget& budget, const RWord& w, const std::vector<RWord>& dynamical) {
  const int cap = std::max(4 * w.size(), maxLength(dynamical) + w.size());
  if (cap > budget.scanCapMax)
    throw BudgetError("scan cap " + std::to_string(cap) + " exceeds budget " +
                      std::to_string(budget.scanCapMax));
  return cap;
}

// Positions where w or wInv occurs in u (the two cannot both match at one
// position since they differ and have equal length).
std::vector<int> pairOccurrences(const RWord& u, const RWord& w, const RWord& wInv) {
  std::vector<int> occ = u.occurrences(w);
  std::vector<int> inv = u.occurrences(wInv);
  occ.insert(occ.end(), inv.begin(), inv.end());
  std::sort(occ.begin(), occ.end());
  return occ;
}

bool isCompleteFirstReturn(const RWord& u, const std::vector<int>& occ, int patLen) {
  if (u.size() <= patLen) return false;
  if (occ.size() < 2) return false;
  if (occ.front() != 0 || occ.back() != u.size() - patLen) return false;
  return occ.size() == 2;
}

}  // namespace

bool ReturnSet::contains(const RWord& w) const {
  return std::binary_search(words.begin(), words.end(), w, ShortlexLess{});
}

std::vector<RWord> completeReturnsTreeScan(const LinearInvolution& t, const RWord& w,
                                           bool pairWithInverse, int depthCap) {
  const RWord wInv = w.inverse();
  struct Node {
    RWord word;
    Interval forward;  // T^{|word|}(I_word)
  };
  std::vector<Node> level;
  auto seed = [&](const RWord& s) {
    if (auto cell = t.wordCell(s))
      level.push_back({s, t.tBranch(s.back()).mapInterval(cell->last)});
  };
  seed(w);
  if (pairWithInverse) seed(wInv);

  std::vector<SignedLetter> letters;
  for (bool pos : {true, false})
    for (int b = 0; b < t.alphabetSize(); ++b) letters.push_back({static_cast<uint8_t>(b), pos});

  std::vector<RWord> out;
  for (int len = w.size() + 1; len <= depthCap && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& n : level) {
      for (SignedLetter x : letters) {
        auto hit = intersect(n.forward, t.letterInterval(x));
        if (!hit) continue;
        RWord u = n.word.appended(x);
        if (u.endsWith(w) || (pairWithInverse && u.endsWith(wInv)))
          out.push_back(std::move(u));  // first second-occurrence: branch done
        else
          next.push_back({std::move(u), t.tBranch(x).mapInterval(*hit)});
      }
    }
    level = std::move(next);
  }
  if (!level.empty())
    throw RouteError("tree scan: " + std::to_string(level.size()) +
                     " branches outlive every dynamical return word");
  return sortedUnique(std::move(out));
}

std::vector<Interval> returnDomain(const LinearInvolution& t, const RWord& w) {
  auto iwInv = t.wordInterval(w.inverse());
  if (!iwInv) throw AnchorError("anchor word '" + w.str() + "' is not in the language");
  Interval mirror = *iwInv;
  mirror.comp = mirrorOf(mirror.comp);
  return {*iwInv, mirror};
}

RWord mixedTruncate(const RWord& u, const RWord& w) {
  const RWord wInv = w.inverse();
  const bool pre = u.size() > w.size() && u.startsWith(w);
  const bool suf = u.size() > w.size() && u.endsWith(wInv);
  const int from = pre ? w.size() : 0;
  const int len = u.size() - from - (suf ? w.size() : 0);
  if (len < 0) throw std::logic_error("mixedTruncate: overlapping prefix and suffix");
  return u.factor(from, len);
}

std::vector<RWord> mixedReturnsDynamic(const LinearInvolution& t, const RWord& w, int horizon) {
  std::vector<RWord> out;
  for (const ReturnPiece& p : firstReturn(t, returnDomain(t, w), horizon))
    out.push_back(p.itinerary);
  return sortedUnique(std::move(out));
}

std::vector<RWord> completeReturnsDynamic(const LinearInvolution& t, const RWord& w, int horizon) {
  const std::vector<Interval> k = returnDomain(t, w);
  const Component invComp = k[0].comp;  // component of I_{w^-1}
  const RWord wInv = w.inverse();
  std::vector<RWord> out;
  for (const ReturnPiece& p : firstReturn(t, k, horizon)) {
    // Points on the mirrored side carry a leading w; landing back in
    // I_{w^-1} appends a trailing w^-1. No cancellation can occur.
    RWord cr = p.itinerary;
    int expected = cr.size();
    if (p.source.comp != invComp) {
      cr = w * cr;
      expected += w.size();
    }
    if (p.image.comp == invComp) {
      cr = cr * wInv;
      expected += w.size();
    }
    if (cr.size() != expected)
      throw std::logic_error("completeReturnsDynamic: unexpected cancellation");
    out.push_back(cr);
  }
  return sortedUnique(std::move(out));
}

std::vector<RWord> completeReturnsScan(const LanguageSlice& slice, const RWord& w) {
  const RWord wInv = w.inverse();
  std::vector<RWord> out;
  for (const RWord& u : slice.words)
    if (isCompleteFirstReturn(u, pairOccurrences(u, w, wInv), w.size())) out.push_back(u);
  return sortedUnique(std::move(out));
}

std::vector<RWord> completeReturnsToSingletonScan(const LanguageSlice& slice, const RWord& w) {
  std::vector<RWord> out;
  for (const RWord& u : slice.words)
    if (isCompleteFirstReturn(u, u.occurrences(w), w.size())) out.push_back(u);
  return sortedUnique(std::move(out));
}

std::vector<RWord> completeReturnsToSet(const LinearInvolution& t, std::span<const RWord> x,
                                        int maxLen) {
  for (const RWord& w : x) requireAnchor(t, w);
  const LanguageSlice slice = language(t, maxLen);
  std::vector<RWord> out;
  for (const RWord& u : slice.words) {
    bool prefix = false, suffix = false, internal = false;
    for (const RWord& w : x)
      for (int p : u.occurrences(w)) {
        if (w.size() == u.size()) continue;  // the full word is not proper
        if (p == 0)
          prefix = true;
        else if (p + w.size() == u.size())
          suffix = true;
        else
          internal = true;
      }
    if (prefix && suffix && !internal) out.push_back(u);
  }
  return sortedUnique(std::move(out));
}

ReturnSet completeReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget) {
  requireAnchor(t, w);
  auto dyn = withGrowingHorizon(t, w, budget,
                                [&](int h) { return completeReturnsDynamic(t, w, h); });
  crossCheck("completeReturns", dyn,
             completeReturnsTreeScan(t, w, true, scanCapFor(budget, w, dyn)));
  return ReturnSet{ReturnKind::Complete, w, std::move(dyn)};
}

ReturnSet mixedReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget) {
  requireAnchor(t, w);
  auto dyn =
      withGrowingHorizon(t, w, budget, [&](int h) { return mixedReturnsDynamic(t, w, h); });
  // complete return words are mixed return words with up to one anchor
  // glued back on each side
  const int cap = maxLength(dyn) + 2 * w.size() + 1;
  if (cap > budget.scanCapMax)
    throw BudgetError("scan cap " + std::to_string(cap) + " exceeds budget " +
                      std::to_string(budget.scanCapMax));
  const std::vector<RWord> crScan = completeReturnsTreeScan(t, w, true, cap);
  std::vector<RWord> scanned;
  for (const RWord& u : crScan) scanned.push_back(mixedTruncate(u, w));
  scanned = sortedUnique(std::move(scanned));
  if (scanned.size() != crScan.size())
    throw RouteError("mixedReturns: truncation collapsed distinct complete return words");
  crossCheck("mixedReturns", dyn, scanned);
  return ReturnSet{ReturnKind::Mixed, w, std::move(dyn)};
}

namespace {

// Complete first return words to the singleton {w}, dynamically: the
// first-return itineraries of I_w extended by the trailing w they run into.
std::vector<RWord> singletonCompleteDynamic(const LinearInvolution& t, const RWord& w,
                                            int horizon) {
  auto iw = t.wordInterval(w);
  if (!iw) throw AnchorError("anchor word '" + w.str() + "' is not in the language");
  const Interval k[1] = {*iw};
  std::vector<RWord> out;
  for (const ReturnPiece& p : firstReturn(t, k, horizon)) {
    RWord v = p.itinerary * w;
    if (v.size() != p.itinerary.size() + w.size())
      throw std::logic_error("singleton return: unexpected cancellation");
    out.push_back(v);
  }
  return sortedUnique(std::move(out));
}

}  // namespace

ReturnSet rightReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget) {
  requireAnchor(t, w);
  auto dynComplete = withGrowingHorizon(
      t, w, budget, [&](int h) { return singletonCompleteDynamic(t, w, h); });
  crossCheck("rightReturns", dynComplete,
             completeReturnsTreeScan(t, w, false, scanCapFor(budget, w, dynComplete)));
  std::vector<RWord> out;
  for (const RWord& v : dynComplete) out.push_back(v.factor(w.size(), v.size() - w.size()));
  return ReturnSet{ReturnKind::Right, w, sortedUnique(std::move(out))};
}

ReturnSet leftReturns(const LinearInvolution& t, const RWord& w, ReturnBudget budget) {
  requireAnchor(t, w);
  auto dynComplete = withGrowingHorizon(
      t, w, budget, [&](int h) { return singletonCompleteDynamic(t, w, h); });
  crossCheck("leftReturns", dynComplete,
             completeReturnsTreeScan(t, w, false, scanCapFor(budget, w, dynComplete)));
  std::vector<RWord> out;
  for (const RWord& v : dynComplete) out.push_back(v.prefix(v.size() - w.size()));
  return ReturnSet{ReturnKind::Left, w, sortedUnique(std::move(out))};
}

std::vector<RWord> primeWordsDynamic(const LinearInvolution& t, const SubgroupGraph& g,
                                     int horizon) {
  struct Work {
    Interval cur;
    RWord itin;
    int coset;
    int steps;
  };
  std::vector<Work> stack;
  for (int b = 0; b < t.alphabetSize(); ++b)
    for (bool pos : {true, false}) {
      SignedLetter x{static_cast<uint8_t>(b), pos};
      stack.push_back({t.letterInterval(x), RWord{}, SubgroupGraph::base(), 0});
    }

  std::vector<RWord> out;
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.steps >= 1 && w.coset == SubgroupGraph::base()) {
      out.push_back(w.itin);
      continue;
    }
    SignedLetter x{};
    {
      bool contained = false;
      for (SignedLetter cand : t.row(w.cur.comp)) {
        const Interval& iv = t.letterInterval(cand);
        if (!(w.cur.lo < iv.hi)) continue;
        if (w.cur.hi <= iv.hi) {
          x = cand;
          contained = true;
        }
        break;
      }
      if (!contained) {  // split at the first straddled division point
        for (const FieldElem& d : t.divisionCoords(w.cur.comp)) {
          if (w.cur.lo < d && d < w.cur.hi) {
            Work lo = w, hi = w;
            lo.cur.hi = d;
            hi.cur.lo = d;
            stack.push_back(std::move(lo));
            stack.push_back(std::move(hi));
            break;
          }
        }
        continue;
      }
    }
    if (w.steps >= horizon)
      throw HorizonError("primeWordsDynamic: no closure within " + std::to_string(horizon) +
                         " steps");
    const auto next = g.step(w.coset, x);
    if (!next) throw AnchorError("subgroup graph is not a coset automaton (infinite index)");
    w.itin = w.itin.appended(x);
    w.cur = t.tBranch(x).mapInterval(w.cur);
    w.coset = *next;
    w.steps++;
    stack.push_back(std::move(w));
  }
  std::vector<RWord> unique = sortedUnique(out);
  if (unique.size() != out.size())
    throw std::logic_error("primeWordsDynamic: a prime word surfaced on two pieces");
  return unique;
}

std::vector<RWord> primeWordsScan(const LinearInvolution& t, const SubgroupGraph& g, int maxLen,
                                  bool* closed) {
  struct Node {
    RWord word;
    Interval forward;
    int coset;
  };
  std::vector<Node> level;
  std::vector<RWord> out;
  for (int b = 0; b < t.alphabetSize(); ++b)
    for (bool pos : {true, false}) {
      SignedLetter x{static_cast<uint8_t>(b), pos};
      const auto c = g.step(SubgroupGraph::base(), x);
      if (!c) throw AnchorError("subgroup graph is not a coset automaton (infinite index)");
      Node n{RWord::single(x), t.tBranch(x).mapInterval(t.letterInterval(x)), *c};
      if (*c == SubgroupGraph::base())
        out.push_back(n.word);
      else
        level.push_back(std::move(n));
    }
  for (int len = 2; len <= maxLen && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& n : level)
      for (int b = 0; b < t.alphabetSize(); ++b)
        for (bool pos : {true, false}) {
          SignedLetter x{static_cast<uint8_t>(b), pos};
          auto hit = intersect(n.forward, t.letterInterval(x));
          if (!hit) continue;
          const auto c = g.step(n.coset, x);
          if (!c) throw AnchorError("subgroup graph is not a coset automaton (infinite index)");
          Node child{n.word.appended(x), t.tBranch(x).mapInterval(*hit), *c};
          if (child.coset == SubgroupGraph::base())
            out.push_back(child.word);
          else
            next.push_back(std::move(child));
        }
    level = std::move(next);
  }
  if (closed) *closed = level.empty();
  return sortedUnique(std::move(out));
}

ReturnSet primeWords(const LinearInvolution& t, const SubgroupGraph& g, ReturnBudget budget) {
  if (!g.index()) throw AnchorError("prime words need a subgroup of finite index");
  if (g.alphabetSize() != t.alphabetSize())
    throw AnchorError("subgroup graph alphabet does not match the involution");
  auto dyn = withGrowingHorizon(t, RWord{}, budget,
                                [&](int h) { return primeWordsDynamic(t, g, h); });
  const int cap = maxLength(dyn) + 1;
  if (cap > budget.scanCapMax) throw BudgetError("scan cap exceeds budget");
  bool closed = false;
  auto scanned = primeWordsScan(t, g, cap, &closed);
  crossCheck("primeWords", dyn, scanned);
  return ReturnSet{ReturnKind::Prime, RWord{}, std::move(dyn)};
}

}  // namespace linvol
