#include "linvol/language.hpp"

#include <algorithm>

namespace linvol {

bool LanguageSlice::contains(const RWord& w) const {
  return std::binary_search(words.begin(), words.end(), w, ShortlexLess{});
}

std::vector<RWord> LanguageSlice::ofLength(int n) const {
  std::vector<RWord> out;
  for (const RWord& w : words)
    if (w.size() == n) out.push_back(w);
  return out;
}

std::vector<RWord> LanguageSlice::upToLength(int n) const {
  std::vector<RWord> out;
  for (const RWord& w : words)
    if (w.size() <= n) out.push_back(w);
  return out;
}

namespace {

std::vector<SignedLetter> allLetters(int k) {
  std::vector<SignedLetter> out;
  for (bool pos : {true, false})
    for (int b = 0; b < k; ++b) out.push_back({static_cast<uint8_t>(b), pos});
  return out;
}

struct Node {
  RWord word;
  Interval forward;  // T^{|word|}(I_word)
};

}  // namespace

LanguageSlice language(const LinearInvolution& t, int maxLen, Exec exec) {
  LanguageSlice slice;
  slice.maxLen = maxLen;
  slice.source = t.describe();
  slice.words.push_back(RWord{});
  if (maxLen == 0) return slice;

  const std::vector<SignedLetter> letters = allLetters(t.alphabetSize());

  // Level 1: every letter occurs (its interval is nonempty by construction).
  std::vector<Node> level;
  for (SignedLetter x : letters) {
    level.push_back({RWord::single(x), t.tBranch(x).mapInterval(t.letterInterval(x))});
    slice.words.push_back(level.back().word);
  }

  for (int len = 2; len <= maxLen; ++len) {
    std::vector<std::vector<Node>> children(level.size());
    parallelFor(exec, level.size(), [&](size_t i) {
      const Node& node = level[i];
      for (SignedLetter x : letters) {
        auto hit = intersect(node.forward, t.letterInterval(x));
        if (!hit) continue;
        children[i].push_back({node.word.appended(x), t.tBranch(x).mapInterval(*hit)});
      }
    });
    std::vector<Node> next;
    for (auto& c : children)
      for (Node& n : c) next.push_back(std::move(n));
    for (const Node& n : next) slice.words.push_back(n.word);
    level = std::move(next);
    if (level.empty()) break;
  }
  return slice;
}

RWord codingOfPoint(const LinearInvolution& t, Pt z, int n) {
  std::vector<SignedLetter> letters;
  letters.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    letters.push_back(t.locate(z));
    if (i + 1 < n) z = t.apply(z);
  }
  RWord w = RWord::fromLetters(letters);
  if (w.size() != n) throw std::logic_error("natural coding came out unreduced");
  return w;
}

Parity wordParity(const LinearInvolution& t, const RWord& w) {
  int odd = 0;
  for (int i = 0; i < w.size(); ++i) {
    const SignedLetter x = w.letter(i);
    if (x.base >= t.alphabetSize()) throw WordError("letter outside the involution's alphabet");
    if (!t.evenLetter(x.base)) ++odd;
  }
  return odd % 2 == 0 ? Parity::Even : Parity::Odd;
}

LaminaryReport checkLaminary(const LanguageSlice& slice) {
  LaminaryReport rep;
  rep.reduced = true;  // RWord construction reduces; recheck adjacency anyway
  for (const RWord& w : slice.words)
    for (int i = 0; i + 1 < w.size(); ++i)
      if (w.letter(i + 1) == w.letter(i).inverse()) rep.reduced = false;
  rep.symmetric = true;
  for (const RWord& w : slice.words)
    if (!slice.contains(w.inverse())) rep.symmetric = false;
  // One-step truncations suffice for factoriality of a level-complete slice.
  rep.factorial = true;
  for (const RWord& w : slice.words) {
    if (w.size() == 0) continue;
    if (!slice.contains(w.prefix(w.size() - 1)) || !slice.contains(w.suffix(w.size() - 1)))
      rep.factorial = false;
  }
  return rep;
}

std::optional<std::pair<std::vector<RWord>, std::vector<RWord>>> checkOrientable(
    const LinearInvolution& t, const LanguageSlice& slice) {
  std::vector<RWord> plus, minus;
  auto side = [&](const RWord& w) -> Component {
    auto iv = t.wordInterval(w);
    if (!iv) throw std::logic_error("slice word missing an interval");
    return iv->comp;
  };
  for (const RWord& w : slice.words) {
    if (w.empty()) {
      plus.push_back(w);
      minus.push_back(w);
      continue;
    }
    const Component c = side(w);
    // the two halves must be swapped by inversion and closed under factors
    if (side(w.inverse()) == c) return std::nullopt;
    if (w.size() > 1) {
      if (side(w.prefix(w.size() - 1)) != c || side(w.suffix(w.size() - 1)) != c)
        return std::nullopt;
    }
    (c == Component::Upper ? plus : minus).push_back(w);
  }
  return std::make_pair(std::move(plus), std::move(minus));
}

std::optional<int> checkRecurrence(const LinearInvolution& t, const LanguageSlice& slice,
                                   const RWord& u) {
  const bool orientable = t.classify().orientable;
  const RWord uInv = u.inverse();
  for (int n = u.size(); n <= slice.maxLen; ++n) {
    bool all = true;
    for (const RWord& w : slice.ofLength(n)) {
      const bool hasU = !w.occurrences(u).empty();
      const bool hasInv = orientable && !w.occurrences(uInv).empty();
      if (!hasU && !hasInv) {
        all = false;
        break;
      }
    }
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace linvol
