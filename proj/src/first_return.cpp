#include "linvol/first_return.hpp"

#include <algorithm>
#include <map>

namespace linvol {

namespace {

struct Work {
  Interval source;  // subinterval of K
  Interval cur;     // = map(source) = T^steps(source)
  AffineBranch map;
  RWord itin;  // one letter per applied step
  int steps = 0;
};

AffineBranch identityBranch(Component c) {
  AffineBranch br;
  br.sign = 1;
  br.from = c;
  br.to = c;
  return br;
}

// Split a work item at the given strictly interior coordinates of `cur`.
void splitAt(const Work& w, std::vector<FieldElem> cuts, std::vector<Work>& stack) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  FieldElem lo = w.cur.lo;
  const AffineBranch back = w.map.inverted();
  auto emit = [&](const FieldElem& a, const FieldElem& b) {
    Work part = w;
    part.cur = Interval{a, b, w.cur.comp};
    part.source = back.mapInterval(part.cur);
    stack.push_back(std::move(part));
  };
  for (const FieldElem& c : cuts) {
    emit(lo, c);
    lo = c;
  }
  emit(lo, w.cur.hi);
}

}  // namespace

std::vector<ReturnPiece> firstReturn(const LinearInvolution& t, std::span<const Interval> k,
                                     int horizon) {
  if (k.empty()) throw std::invalid_argument("firstReturn: empty return set");
  std::vector<Interval> kParts(k.begin(), k.end());
  std::sort(kParts.begin(), kParts.end(), [](const Interval& a, const Interval& b) {
    if (a.comp != b.comp) return a.comp == Component::Upper;
    return a.lo < b.lo;
  });
  FieldElem kMeasure;
  for (size_t i = 0; i < kParts.size(); ++i) {
    const Interval& iv = kParts[i];
    if (iv.isEmpty()) throw std::invalid_argument("firstReturn: empty interval in return set");
    if (iv.lo.sign() < 0 || t.intervalLength() < iv.hi)
      throw std::invalid_argument("firstReturn: interval outside the domain");
    if (i > 0 && kParts[i - 1].comp == iv.comp && iv.lo < kParts[i - 1].hi)
      throw std::invalid_argument("firstReturn: overlapping intervals in return set");
    kMeasure += iv.length();
  }

  std::vector<Work> stack;
  for (const Interval& iv : kParts)
    stack.push_back({iv, iv, identityBranch(iv.comp), RWord{}, 0});

  std::vector<ReturnPiece> pieces;
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();

    if (w.steps >= 1) {
      // Did this piece come back to K?  Split at K boundaries if needed.
      std::vector<FieldElem> cuts;
      bool inside = false;
      for (const Interval& kv : kParts) {
        if (kv.comp != w.cur.comp) continue;
        if (kv.containsInterval(w.cur)) inside = true;
        for (const FieldElem& c : {kv.lo, kv.hi})
          if (w.cur.lo < c && c < w.cur.hi) cuts.push_back(c);
      }
      if (!cuts.empty()) {
        splitAt(w, std::move(cuts), stack);
        continue;
      }
      if (inside) {
        pieces.push_back({w.source, w.itin, w.map, w.cur});
        continue;
      }
    }

    // Not returned: make sure the image sits inside one letter interval,
    // record the letter and apply one more step of T.
    SignedLetter x{};
    {
      bool contained = false;
      for (SignedLetter cand : t.row(w.cur.comp)) {
        const Interval& iv = t.letterInterval(cand);
        if (!(w.cur.lo < iv.hi)) continue;  // entirely left of cur
        if (w.cur.hi <= iv.hi) {
          x = cand;
          contained = true;
        }
        break;
      }
      if (!contained) {
        std::vector<FieldElem> cuts;
        for (const FieldElem& d : t.divisionCoords(w.cur.comp))
          if (w.cur.lo < d && d < w.cur.hi) cuts.push_back(d);
        splitAt(w, std::move(cuts), stack);
        continue;
      }
    }
    if (w.steps >= horizon)
      throw HorizonError("firstReturn: piece did not return within " + std::to_string(horizon) +
                         " steps (possible connection or horizon too small)");
    const AffineBranch step = t.tBranch(x);
    w.itin = w.itin.appended(x);
    w.cur = step.mapInterval(w.cur);
    w.map = step.composeAfter(w.map);
    w.steps++;
    stack.push_back(std::move(w));
  }

  std::sort(pieces.begin(), pieces.end(), [](const ReturnPiece& a, const ReturnPiece& b) {
    if (a.source.comp != b.source.comp) return a.source.comp == Component::Upper;
    return a.source.lo < b.source.lo;
  });
  FieldElem covered;
  for (const ReturnPiece& p : pieces) covered += p.source.length();
  if (covered != kMeasure)
    throw std::logic_error("firstReturn: pieces do not tile the return set");
  return pieces;
}

InducedSystem induceUnchecked(const LinearInvolution& t, const FieldElem& lo, const FieldElem& hi,
                              int horizon) {
  if (lo.sign() < 0 || !(lo < hi) || t.intervalLength() < hi)
    throw std::invalid_argument("induce: bad subinterval");
  const Interval kTop{lo, hi, Component::Upper};
  const Interval kBot{lo, hi, Component::Lower};
  const Interval kParts[2] = {kTop, kBot};
  std::vector<ReturnPiece> pieces = firstReturn(t, kParts, horizon);
  if (pieces.size() % 2 != 0) throw std::logic_error("induce: piece count odd");

  // sigma2 . S is the first involution of the induced system, so the piece
  // mirroring a piece's image is its inverse letter.
  auto keyOf = [](const Interval& iv) {
    return std::pair<int, std::string>(static_cast<int>(iv.comp), iv.lo.str() + "," + iv.hi.str());
  };
  std::map<std::pair<int, std::string>, size_t> byKey;
  for (size_t i = 0; i < pieces.size(); ++i) byKey[keyOf(pieces[i].source)] = i;

  const size_t n = pieces.size();
  std::vector<SignedLetter> nameOf(n);
  std::vector<bool> named(n, false);
  std::vector<RWord> itineraries;
  std::set<uint8_t> flips;
  for (size_t i = 0; i < n; ++i) {
    if (named[i]) continue;
    Interval mirrored = pieces[i].image;
    mirrored.comp = mirrorOf(mirrored.comp);
    auto it = byKey.find(keyOf(mirrored));
    if (it == byKey.end() || it->second == i)
      throw std::logic_error("induce: unpaired return piece");
    const size_t j = it->second;
    if (named[j] || pieces[j].itinerary != pieces[i].itinerary.inverse() ||
        pieces[j].source.length() != pieces[i].source.length())
      throw std::logic_error("induce: inconsistent piece pairing");
    const uint8_t b = static_cast<uint8_t>(itineraries.size());
    nameOf[i] = {b, true};
    nameOf[j] = {b, false};
    named[i] = named[j] = true;
    itineraries.push_back(pieces[i].itinerary);
    if (pieces[i].map.sign < 0) flips.insert(b);
  }

  GenPerm perm;
  std::vector<FieldElem> lengths(itineraries.size());
  for (size_t i = 0; i < n; ++i) {
    (pieces[i].source.comp == Component::Upper ? perm.top : perm.bottom).push_back(nameOf[i]);
    if (nameOf[i].pos) lengths[nameOf[i].base] = pieces[i].source.length();
  }
  InducedSystem out{LinearInvolution::build(std::move(perm), std::move(lengths), std::move(flips),
                                            hi - lo),
                    std::move(itineraries), lo};
  return out;
}

InducedSystem induceOnWord(const LinearInvolution& t, const RWord& w, int horizon) {
  auto iw = t.wordInterval(w);
  if (!iw) throw std::invalid_argument("induceOnWord: word '" + w.str() + "' not in the language");
  return induceUnchecked(t, iw->lo, iw->hi, horizon);
}

RWord Substitution::apply(const RWord& w) const {
  RWord out;
  for (int i = 0; i < w.size(); ++i) out = out * of(w.letter(i));
  return out;
}

Substitution Substitution::composeAfter(const Substitution& inner) const {
  Substitution out;
  out.images.reserve(inner.images.size());
  for (const RWord& im : inner.images) out.images.push_back(apply(im));
  return out;
}

RauzyStep rauzyStep(const LinearInvolution& t, int horizon) {
  const SignedLetter lastTop = t.perm().top.back();
  const SignedLetter lastBot = t.perm().bottom.back();
  const FieldElem& a = t.letterLength(lastTop.base);
  const FieldElem& b = t.letterLength(lastBot.base);
  if (a == b)
    throw ConnectionError("rauzyStep: the two rightmost intervals have equal length");
  const FieldElem cut = t.intervalLength() - std::min(a, b);
  InducedSystem ind = induceUnchecked(t, FieldElem(0), cut, horizon);
  return RauzyStep{std::move(ind.system), Substitution{std::move(ind.itineraries)}};
}

}  // namespace linvol
