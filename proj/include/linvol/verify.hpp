#pragma once

#include <string>
#include <vector>

#include "linvol/parallel.hpp"
#include "linvol/returns.hpp"

namespace linvol {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  RWord anchor;  // empty when the check is not tied to a word
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct SweepOptions {
  int maxWordLen = 5;
  Exec exec = Exec::Parallel;
  ReturnBudget budget{};
};

/// Per-anchor sweeps over every nonempty language word up to maxWordLen.
/// The words are independent, so Exec::Parallel fans the loop out over
/// OpenMP; results land in per-word slots and are identical to the serial
/// reference. A word whose budget runs out is reported as Skip, never
/// silently dropped.

/// Mixed first return words form a symmetric basis of the whole free group.
std::vector<CheckResult> verifyMixedBasisSweep(const LinearInvolution& t, SweepOptions opts);

/// Complete first return word sets have exactly 2k elements.
std::vector<CheckResult> verifyCardinalitySweep(const LinearInvolution& t, SweepOptions opts);

/// I_{u^-1} equals sigma1(T^{|u|-1}(I_u)) endpoint-exactly.
std::vector<CheckResult> verifyInverseIntervalSweep(const LinearInvolution& t, SweepOptions opts);

/// Prime words with respect to a finite-index subgroup form a symmetric
/// basis of it, with the Schreier cardinality 2 d (k-1) + 2.
CheckResult verifyPrimeBasis(const LinearInvolution& t, const SubgroupGraph& g,
                             ReturnBudget budget = {});

std::string to_string(CheckStatus s);

}  // namespace linvol
