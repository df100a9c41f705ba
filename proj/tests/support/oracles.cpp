#include "support/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "linvol/language.hpp"

namespace linvol::oracles {

namespace {

int sgn128(__int128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace

int quadSign(int64_t p, int64_t q, int64_t r, int64_t s, uint64_t d) {
  if (q <= 0 || s <= 0) throw std::invalid_argument("denominators must be positive");
  // common denominator qs: sign of (p s) + (r q) sqrt(d)
  const __int128 a = static_cast<__int128>(p) * s;
  const __int128 b = static_cast<__int128>(r) * q;
  const int sa = sgn128(a), sb = sgn128(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const __int128 a2 = a * a;
  const __int128 b2d = b * b * static_cast<__int128>(d);
  if (a2 == b2d) throw std::invalid_argument("radicand is a perfect square");
  return a2 > b2d ? sa : sb;
}

namespace {

std::vector<RWord> closeUp(const std::set<std::string>& factors) {
  std::set<std::string> all(factors);
  for (const std::string& f : factors) all.insert(RWord::parse(f).inverse().chars());
  std::vector<RWord> out;
  out.push_back(RWord{});
  for (const std::string& f : all)
    if (!f.empty()) out.push_back(RWord::parse(f));
  std::sort(out.begin(), out.end(), ShortlexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<std::string> factorsUpTo(const std::string& w, int maxLen) {
  std::set<std::string> out;
  for (size_t i = 0; i < w.size(); ++i)
    for (int len = 1; len <= maxLen && i + len <= w.size(); ++len)
      out.insert(w.substr(i, static_cast<size_t>(len)));
  return out;
}

}  // namespace

std::vector<RWord> substitutionFactorOracle(const Substitution& f, int maxLen) {
  const Substitution g = f.composeAfter(f);  // f^2 fixes the leading letter
  RWord w = RWord::parse("a");
  auto expectedLen = [&](const RWord& v) {
    int n = 0;
    for (int i = 0; i < v.size(); ++i) n += g.of(v.letter(i)).size();
    return n;
  };
  std::set<std::string> stable;
  int stableRounds = 0;
  for (int round = 0; round < 64; ++round) {
    const RWord next = g.apply(w);
    if (next.size() != expectedLen(w))
      throw std::logic_error("substitution oracle: image cancelled");
    if (!next.startsWith(w))
      throw std::logic_error("substitution oracle: iterate is not prefix-stable");
    w = next;
    if (w.size() < 4 * maxLen) continue;
    std::set<std::string> factors = factorsUpTo(w.chars(), maxLen);
    stableRounds = factors == stable ? stableRounds + 1 : 0;
    if (stableRounds >= 2) return closeUp(factors);
    stable = std::move(factors);
  }
  throw std::logic_error("substitution oracle: factor set did not stabilize");
}

std::vector<RWord> orbitFactorOracle(const LinearInvolution& t, int maxLen, int steps) {
  const Interval& start = t.letterInterval(t.perm().top.front());
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      const RWord coding = codingOfPoint(t, samplePoint(start, attempt), steps);
      return closeUp(factorsUpTo(coding.chars(), maxLen));
    } catch (const SingularPointError&) {
      continue;  // next deterministic sample
    }
  }
  throw std::logic_error("orbit oracle: no sample with a long enough regular orbit");
}

namespace {

std::string canonicalTuple(std::vector<RWord> tuple) {
  std::vector<std::string> keys;
  for (RWord& w : tuple) {
    const RWord inv = w.inverse();
    keys.push_back(shortlexLess(inv, w) ? inv.chars() : w.chars());
  }
  std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::string out;
  for (const std::string& k : keys) {
    out += k;
    out += '|';
  }
  return out;
}

}  // namespace

bool nielsenIsBasis(const std::vector<RWord>& transversal) {
  std::vector<std::vector<RWord>> queue{transversal};
  std::set<std::string> seen{canonicalTuple(transversal)};
  while (!queue.empty()) {
    std::vector<RWord> tuple = std::move(queue.back());
    queue.pop_back();
    for (const RWord& w : tuple)
      if (w.empty()) return false;
    for (size_t i = 0; i < tuple.size(); ++i) {
      for (size_t j = 0; j < tuple.size(); ++j) {
        if (i == j) continue;
        for (const RWord& u : {tuple[j], tuple[j].inverse()}) {
          for (const RWord& cand : {tuple[i] * u, u * tuple[i]}) {
            if (cand.size() > tuple[i].size()) continue;
            std::vector<RWord> next = tuple;
            next[i] = cand;
            std::string key = canonicalTuple(next);
            if (seen.insert(std::move(key)).second) queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  return true;
}

}  // namespace linvol::oracles
