// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Each criterion is desk-scale and fully pinned; failures print the detail.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "linvol/first_return.hpp"
#include "linvol/render.hpp"
#include "linvol/verify.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace linvol;

namespace {

std::vector<RWord> words(std::initializer_list<const char*> ws) {
  std::vector<RWord> out;
  for (const char* w : ws) out.push_back(RWord::parse(w));
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

std::string sweepSummary(const std::vector<CheckResult>& results) {
  int fail = 0, skip = 0;
  std::string firstBad;
  for (const CheckResult& r : results) {
    if (r.status == CheckStatus::Pass) continue;
    (r.status == CheckStatus::Fail ? fail : skip)++;
    if (firstBad.empty())
      firstBad = r.name + " w=" + r.anchor.str() + ": " + to_string(r.status) + " " + r.detail;
  }
  if (fail == 0 && skip == 0) return "";
  std::ostringstream os;
  os << fail << " failed, " << skip << " skipped of " << results.size() << "; first: "
     << firstBad;
  return os.str();
}

// ---- criteria ----------------------------------------------------------

std::string criterionGoldenTables() {
  const LinearInvolution t = fixtures::golden();
  struct Row {
    const char* anchor;
    std::vector<RWord> cr, mr;
  };
  const Row rows[] = {
      {"a", words({"aBcbA", "aBcbCa", "AcBCa", "aBCbA", "AcbCa", "AcBCbA"}),
       words({"Bcb", "BcbCa", "AcBCa", "BCb", "AcbCa", "AcBCb"})},
      {"b", words({"bAcb", "bAcB", "bCaB", "Bcb", "BCaB", "BCb"}),
       words({"Acb", "Ac", "Ca", "Bcb", "BCa", "BCb"})},
      {"c", words({"cbAc", "cbC", "cBC", "CaBc", "CaBC", "CbAc"}),
       words({"bAc", "b", "B", "CaBc", "CaB", "CbAc"})},
  };
  for (const Row& row : rows) {
    const RWord w = RWord::parse(row.anchor);
    if (completeReturns(t, w).words != row.cr) return std::string("CR(") + row.anchor + ") differs";
    if (mixedReturns(t, w).words != row.mr) return std::string("MR(") + row.anchor + ") differs";
  }
  return "";
}

std::string criterionCardinality() {
  const LinearInvolution t = fixtures::golden();
  SweepOptions opts;
  opts.maxWordLen = 8;
  const auto results = verifyCardinalitySweep(t, opts);
  const size_t expected = language(t, 8).words.size() - 1;
  if (results.size() != expected) return "sweep covered the wrong anchor count";
  return sweepSummary(results);
}

std::string criterionMixedBasis() {
  SweepOptions opts;
  opts.maxWordLen = 6;
  {
    const auto golden = verifyMixedBasisSweep(fixtures::golden(), opts);
    if (std::string bad = sweepSummary(golden); !bad.empty()) return "golden: " + bad;
  }
  std::mt19937 rng(0x5eed2025);
  int verified = 0, skipped = 0, attempts = 0;
  while (verified < 20 && attempts < 200) {
    ++attempts;
    const int k = 3 + attempts % 3;
    const LinearInvolution t = testgen::randomNonorientableCoherent(rng, k);
    if (t.detectConnection(256)) {
      ++skipped;
      continue;
    }
    const auto results = verifyMixedBasisSweep(t, opts);
    if (std::string bad = sweepSummary(results); !bad.empty()) {
      std::ostringstream os;
      os << "random instance " << attempts << " (k=" << k << "): " << bad;
      return os.str();
    }
    ++verified;
  }
  if (verified < 20) return "connection detection rejected too many instances";
  std::printf("        (criterion 3: %d random instances verified, %d skipped by connection "
              "detection)\n",
              verified, skipped);
  return "";
}

std::string criterionPrimeWords() {
  const LinearInvolution t = fixtures::golden();
  const SubgroupGraph even = evenSubgroup(t);
  const ReturnSet primes = primeWords(t, even);
  if (primes.words != words({"a", "A", "bAc", "CaB", "bC", "cB", "BC", "cb", "Bc", "Cb"}))
    return "even-group prime words differ";
  if (primes.words.size() != 10) return "cardinality is not 2d(k-1)+2";
  if (isSymmetricBasis(primes.words, even) != BasisVerdict::Yes)
    return "prime words are not a symmetric basis of the even group";

  std::mt19937 rng(0xbada11ce);
  for (int i = 0; i < 6; ++i) {
    const int index = i < 3 ? 2 : 3;
    const SubgroupGraph g = testgen::randomCosetAutomaton(rng, 3, index);
    const CheckResult r = verifyPrimeBasis(t, g);
    if (r.status != CheckStatus::Pass)
      return "random index-" + std::to_string(index) + " subgroup: " + r.detail;
  }
  return "";
}

std::string criterionInverseInterval() {
  SweepOptions opts;
  opts.maxWordLen = 10;
  const auto results = verifyInverseIntervalSweep(fixtures::golden(), opts);
  const size_t expected = language(fixtures::golden(), 10).words.size() - 1;
  if (results.size() != expected) return "sweep covered the wrong anchor count";
  return sweepSummary(results);
}

std::string criterionSubstitutionOracle() {
  const LinearInvolution t = fixtures::golden();
  const Substitution f{{RWord::parse("cB"), RWord::parse("c"), RWord::parse("aB")}};
  const std::vector<RWord> oracle = oracles::substitutionFactorOracle(f, 12);
  const LanguageSlice slice = language(t, 12);
  for (int n = 0; n <= 12; ++n) {
    std::vector<RWord> expectN, gotN;
    for (const RWord& w : oracle)
      if (w.size() <= n) expectN.push_back(w);
    for (const RWord& w : slice.words)
      if (w.size() <= n) gotN.push_back(w);
    if (expectN != gotN) return "mismatch at n = " + std::to_string(n);
  }
  return "";
}

std::string criterionRauzyRoundTrip() {
  const LinearInvolution t = fixtures::golden();
  const RauzyStep s1 = rauzyStep(t, 64);
  const RauzyStep s2 = rauzyStep(s1.next, 64);
  const std::vector<SignedLetter> pi = {{2, true}, {0, false}, {1, true}};
  if (!(s2.next.relabeled(pi).swappedComponents().rescaled(FieldElem(1)) == t))
    return "round trip does not reproduce the involution";
  const Substitution tau = s1.sub.composeAfter(s2.sub);
  const Substitution piInv{{RWord::parse("B"), RWord::parse("c"), RWord::parse("a")}};
  const Substitution f = tau.composeAfter(piInv);
  const std::vector<RWord> expected = {RWord::parse("cB"), RWord::parse("c"),
                                       RWord::parse("aB")};
  if (f.images != expected) return "composed substitution is not the fixed-point substitution";
  return "";
}

std::string criterionPeriodicWitness() {
  const LinearInvolution t = fixtures::fourLetterPeriodic();
  const Pt z{FieldElem::rational(7, 8), Component::Upper};
  Pt w = z;
  for (int i = 0; i < 3; ++i) {
    w = t.apply(w);
    if (i < 2 && w == z) return "orbit closed early";
  }
  if (!(w == z)) return "T^3(z) != z";
  return "";
}

std::string criterionInducedLemma() {
  const LinearInvolution t = fixtures::golden();
  const LanguageSlice slice = language(t, 64);
  for (const RWord& w : language(t, 4).words) {
    if (w.empty()) continue;
    std::vector<RWord> itins;
    for (const ReturnPiece& p : firstReturn(t, returnDomain(t, w), 2048))
      itins.push_back(p.itinerary);
    std::sort(itins.begin(), itins.end(), ShortlexLess{});
    itins.erase(std::unique(itins.begin(), itins.end()), itins.end());
    if (itins != mixedReturns(t, w).words)
      return "itineraries differ from mixed returns at w = " + w.str();
    // third route: full language-slice scan, independent of the prefix tree
    std::vector<RWord> fromSlice;
    for (const RWord& u : completeReturnsScan(slice, w)) fromSlice.push_back(mixedTruncate(u, w));
    std::sort(fromSlice.begin(), fromSlice.end(), ShortlexLess{});
    if (itins != fromSlice) return "slice scan differs from itineraries at w = " + w.str();
  }
  const Interval upper[1] = {{FieldElem(0), FieldElem(1), Component::Upper}};
  const auto pieces = firstReturn(t, upper, 64);
  std::vector<std::string> order;
  for (const ReturnPiece& p : pieces) order.push_back(p.itinerary.str());
  if (order != std::vector<std::string>{"a", "bAc", "bC", "BC", "Bc"})
    return "upper-level itinerary order differs";
  return "";
}

std::string criterionParity() {
  const LinearInvolution t = fixtures::golden();
  for (const RWord& w : language(t, 4).words) {
    if (w.empty()) continue;
    for (const RWord& u : rightReturns(t, w).words)
      if (wordParity(t, u) != Parity::Even)
        return "odd right return word " + u.str() + " at w = " + w.str();
  }
  for (int b = 0; b < 3; ++b)
    if (t.evenLetter(static_cast<uint8_t>(b)) != (b == 0))
      return "even letters differ from {a}";
  return "";
}

std::string criterionFreeGroupSuite() {
  // fold idempotence and generator-order independence
  std::mt19937 rng(1123581321);
  for (int i = 0; i < 100; ++i) {
    std::vector<RWord> gens;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j)
      gens.push_back(testgen::randomReducedWord(rng, 3, 1 + static_cast<int>(rng() % 5)));
    const SubgroupGraph g = SubgroupGraph::fold(gens, 3);
    std::shuffle(gens.begin(), gens.end(), rng);
    if (!(SubgroupGraph::fold(gens, 3) == g)) return "fold depends on generator order";
    if (!(SubgroupGraph::fold(g.basisWords(), 3) == g)) return "fold is not idempotent";
  }
  // Schreier rank-index identity on 50 random finite-index graphs
  for (int i = 0; i < 50; ++i) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 8);
    const SubgroupGraph g = testgen::randomCosetAutomaton(rng, k, d);
    if (g.rank() - 1 != d * (k - 1)) return "Schreier identity fails";
  }
  // Nielsen-oracle agreement on every symmetric set with |X| <= 6, |x| <= 4
  // over a two-letter alphabet
  std::vector<RWord> reps;
  {
    std::vector<RWord> frontier{RWord{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<RWord> next;
      for (const RWord& w : frontier)
        for (int b = 0; b < 2; ++b)
          for (bool pos : {true, false}) {
            const SignedLetter x{static_cast<uint8_t>(b), pos};
            if (!w.empty() && w.back() == x.inverse()) continue;
            next.push_back(w.appended(x));
          }
      for (const RWord& w : next)
        if (shortlexLess(w, w.inverse())) reps.push_back(w);
      frontier = std::move(next);
    }
  }
  const int r = static_cast<int>(reps.size());
  std::vector<std::array<int, 3>> combos;
  for (int i = 0; i < r; ++i) {
    combos.push_back({i, -1, -1});
    for (int j = i + 1; j < r; ++j) {
      combos.push_back({i, j, -1});
      for (int l = j + 1; l < r; ++l) combos.push_back({i, j, l});
    }
  }
  std::atomic<long> mismatches{0};
  parallelFor(Exec::Parallel, combos.size(), [&](size_t idx) {
    std::vector<RWord> transversal;
    for (int id : combos[idx])
      if (id >= 0) transversal.push_back(reps[static_cast<size_t>(id)]);
    std::vector<RWord> x;
    for (const RWord& w : transversal) {
      x.push_back(w);
      x.push_back(w.inverse());
    }
    const bool viaFold = isSymmetricBasis(x, SubgroupGraph::fold(x, 2)) == BasisVerdict::Yes;
    if (viaFold != oracles::nielsenIsBasis(transversal)) mismatches.fetch_add(1);
  });
  if (mismatches.load() != 0)
    return std::to_string(mismatches.load()) + " Nielsen disagreements of " +
           std::to_string(combos.size());
  std::printf("        (criterion 11: %zu symmetric sets checked against the Nielsen oracle)\n",
              combos.size());
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<std::string()> run;
  };
  const Criterion criteria[] = {
      {1, "golden complete and mixed return tables", criterionGoldenTables},
      {2, "complete return sets have 2k elements up to length 8", criterionCardinality},
      {3, "mixed returns are symmetric bases of the free group", criterionMixedBasis},
      {4, "prime words are symmetric bases of finite-index subgroups", criterionPrimeWords},
      {5, "inverse-interval identity up to length 10", criterionInverseInterval},
      {6, "language equals the substitution fixed-point factors up to 12",
       criterionSubstitutionOracle},
      {7, "Rauzy round trip and composed substitution", criterionRauzyRoundTrip},
      {8, "periodic witness of the noncoherent instance", criterionPeriodicWitness},
      {9, "induced-map itineraries equal mixed returns", criterionInducedLemma},
      {10, "right return words are even; even letters are {a}", criterionParity},
      {11, "free-group unit suite (fold, Schreier, Nielsen oracle)", criterionFreeGroupSuite},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty()) {
      std::printf("[PASS] criterion %2d (%5.1fs): %s\n", c.id, sec, c.title);
    } else {
      std::printf("[FAIL] criterion %2d (%5.1fs): %s -- %s\n", c.id, sec, c.title,
                  detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures != 0) std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
