#include "linvol/verify.hpp"

namespace linvol {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "ok";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

std::vector<RWord> anchors(const LinearInvolution& t, int maxWordLen) {
  std::vector<RWord> words = language(t, maxWordLen).words;
  std::erase_if(words, [](const RWord& w) { return w.empty(); });
  return words;
}

template <typename Fn>
std::vector<CheckResult> sweep(const LinearInvolution& t, const SweepOptions& opts,
                               const char* what, Fn&& perWord) {
  const std::vector<RWord> words = anchors(t, opts.maxWordLen);
  std::vector<CheckResult> results(words.size());
  parallelFor(opts.exec, words.size(), [&](size_t i) {
    CheckResult& r = results[i];
    r.name = what;
    r.anchor = words[i];
    try {
      perWord(words[i], r);
    } catch (const BudgetError& e) {
      r.status = CheckStatus::Skip;
      r.detail = e.what();
    }
  });
  return results;
}

}  // namespace

std::vector<CheckResult> verifyMixedBasisSweep(const LinearInvolution& t, SweepOptions opts) {
  const SubgroupGraph whole = SubgroupGraph::bouquet(t.alphabetSize());
  return sweep(t, opts, "mixed-basis", [&](const RWord& w, CheckResult& r) {
    const ReturnSet mr = mixedReturns(t, w, opts.budget);
    const BasisVerdict v = isSymmetricBasis(mr.words, whole);
    r.status = v == BasisVerdict::Yes ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::to_string(mr.words.size()) + " words, verdict " + to_string(v);
  });
}

std::vector<CheckResult> verifyCardinalitySweep(const LinearInvolution& t, SweepOptions opts) {
  const size_t expected = 2 * static_cast<size_t>(t.alphabetSize());
  return sweep(t, opts, "cardinality", [&](const RWord& w, CheckResult& r) {
    const ReturnSet cr = completeReturns(t, w, opts.budget);
    r.status = cr.words.size() == expected ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::to_string(cr.words.size()) + " of " + std::to_string(expected);
  });
}

std::vector<CheckResult> verifyInverseIntervalSweep(const LinearInvolution& t,
                                                    SweepOptions opts) {
  return sweep(t, opts, "inverse-interval", [&](const RWord& w, CheckResult& r) {
    const auto cell = t.wordCell(w);
    const auto inv = t.wordInterval(w.inverse());
    if (!cell || !inv) {
      r.status = CheckStatus::Fail;
      r.detail = "missing interval";
      return;
    }
    const Interval mapped = t.sigma1Branch(w.back()).mapInterval(cell->last);
    r.status = mapped.sameSpan(*inv) ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = "I = (" + inv->lo.str() + ", " + inv->hi.str() + ")";
  });
}

CheckResult verifyPrimeBasis(const LinearInvolution& t, const SubgroupGraph& g,
                             ReturnBudget budget) {
  CheckResult r;
  r.name = "prime-basis";
  try {
    const auto d = g.index();
    if (!d) {
      r.status = CheckStatus::Fail;
      r.detail = "subgroup has infinite index";
      return r;
    }
    const ReturnSet primes = primeWords(t, g, budget);
    const size_t expected =
        2 * static_cast<size_t>(*d) * (static_cast<size_t>(t.alphabetSize()) - 1) + 2;
    const BasisVerdict v = isSymmetricBasis(primes.words, g);
    const bool ok = v == BasisVerdict::Yes && primes.words.size() == expected;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::to_string(primes.words.size()) + " prime words (expected " +
               std::to_string(expected) + "), verdict " + to_string(v);
  } catch (const BudgetError& e) {
    r.status = CheckStatus::Skip;
    r.detail = e.what();
  }
  return r;
}

}  // namespace linvol
