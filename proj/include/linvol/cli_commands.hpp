#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "linvol/spec_file.hpp"
#include "linvol/subgroup_graph.hpp"

namespace linvol::cli {

struct CommonOpts {
  int connectionHorizon = 256;
  int returnHorizon = 0;  // 0 = automatic
  int scanCapMax = 512;
  bool serial = false;
};

int cmdInfo(const SpecData& spec, const CommonOpts& opts, std::ostream& out);
int cmdLanguage(const SpecData& spec, int maxLen, const CommonOpts& opts, std::ostream& out);
int cmdReturns(const SpecData& spec, const std::string& word, const std::string& kind,
               const CommonOpts& opts, std::ostream& out);
int cmdPrime(const SpecData& spec, const std::string& subgroup, const CommonOpts& opts,
             std::ostream& out);
int cmdVerify(const SpecData& spec, const std::string& check, int maxWordLen,
              const std::string& subgroup, const CommonOpts& opts, std::ostream& out);
int cmdRauzy(const SpecData& spec, int steps, const CommonOpts& opts, std::ostream& out);
int cmdInduce(const SpecData& spec, const std::string& word, const CommonOpts& opts,
              std::ostream& out);
int cmdRender(const SpecData& spec, const std::string& outPath, const CommonOpts& opts,
              std::ostream& out);

/// "even" or "@path" (file of generator words, one per line).
SubgroupGraph loadSubgroup(const SpecData& spec, const LinearInvolution& t,
                           const std::string& arg);

/// Exit codes: 0 success, 1 verification failure, 2 invalid spec or word,
/// 3 connection / singular orbit / exhausted budget.
int runGuarded(const std::function<int()>& fn, std::ostream& err);

}  // namespace linvol::cli
