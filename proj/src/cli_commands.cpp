#include "linvol/cli_commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "linvol/first_return.hpp"
#include "linvol/render.hpp"
#include "linvol/returns.hpp"
#include "linvol/verify.hpp"

namespace linvol::cli {

namespace {

ReturnBudget budgetOf(const CommonOpts& opts) {
  ReturnBudget b;
  b.horizon = opts.returnHorizon;
  b.scanCapMax = opts.scanCapMax;
  return b;
}

int dynamicsHorizon(const LinearInvolution& t, const CommonOpts& opts) {
  return opts.returnHorizon > 0 ? opts.returnHorizon : 640 * t.alphabetSize();
}

void printRows(const SpecData& spec, const LinearInvolution& t, std::ostream& out) {
  auto rowStr = [&](const std::vector<SignedLetter>& row) {
    std::string s;
    for (SignedLetter x : row) {
      if (!s.empty()) s += ' ';
      s += spec.formatWord(RWord::single(x));
    }
    return s;
  };
  out << "top = " << rowStr(t.perm().top) << "\n";
  out << "bottom = " << rowStr(t.perm().bottom) << "\n";
  std::string fl;
  for (uint8_t f : t.flips()) {
    if (!fl.empty()) fl += ' ';
    fl += spec.nameOf(f);
  }
  out << "flips =" << (fl.empty() ? "" : " ") << fl << "\n";
  for (size_t b = 0; b < spec.names.size(); ++b)
    out << "len." << spec.nameOf(static_cast<uint8_t>(b)) << " = "
        << t.letterLength(static_cast<uint8_t>(b)).str() << "\n";
  out << "interval = " << t.intervalLength().str() << "\n";
}

}  // namespace

SubgroupGraph loadSubgroup(const SpecData& spec, const LinearInvolution& t,
                           const std::string& arg) {
  if (arg == "even") return evenSubgroup(t);
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open subgroup file '" + path + "'");
    std::vector<RWord> gens;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream is(line);
      std::string tok;
      while (is >> tok) {
        if (tok.front() == '#') break;
        gens.push_back(spec.parseWord(tok));
      }
    }
    if (gens.empty()) throw SpecError("subgroup file '" + path + "' holds no generators");
    return SubgroupGraph::fold(gens, static_cast<int>(spec.names.size()));
  }
  throw SpecError("subgroup must be 'even' or '@file'");
}

int cmdInfo(const SpecData& spec, const CommonOpts& opts, std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  const Classification c = t.classify();
  std::string evens;
  for (size_t b = 0; b < spec.names.size(); ++b)
    if (t.evenLetter(static_cast<uint8_t>(b))) {
      if (!evens.empty()) evens += ' ';
      evens += spec.nameOf(static_cast<uint8_t>(b));
    }
  out << (c.orientable ? "orientable" : "nonorientable") << ", "
      << (c.coherent ? "coherent" : "noncoherent") << ", k=" << t.alphabetSize()
      << ", even letters: " << (evens.empty() ? "none" : evens) << "\n";
  printRows(spec, t, out);
  const auto conn = t.detectConnection(opts.connectionHorizon);
  out << "connection(horizon=" << opts.connectionHorizon << ") = ";
  if (conn)
    out << "yes: n=" << conn->steps << " from x=" << conn->from.x.str() << " comp "
        << static_cast<int>(conn->from.comp) << "\n";
  else
    out << "none\n";
  return 0;
}

int cmdLanguage(const SpecData& spec, int maxLen, const CommonOpts& opts, std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  const LanguageSlice slice =
      language(t, maxLen, opts.serial ? Exec::Serial : Exec::Parallel);
  for (const RWord& w : slice.words) out << spec.formatWord(w) << "\n";
  return 0;
}

int cmdReturns(const SpecData& spec, const std::string& word, const std::string& kind,
               const CommonOpts& opts, std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  const RWord w = spec.parseWord(word);
  ReturnSet set;
  if (kind == "complete")
    set = completeReturns(t, w, budgetOf(opts));
  else if (kind == "mixed")
    set = mixedReturns(t, w, budgetOf(opts));
  else if (kind == "right")
    set = rightReturns(t, w, budgetOf(opts));
  else if (kind == "left")
    set = leftReturns(t, w, budgetOf(opts));
  else
    throw SpecError("unknown return kind '" + kind + "'");
  for (const RWord& u : set.words) out << spec.formatWord(u) << "\n";
  return 0;
}

int cmdPrime(const SpecData& spec, const std::string& subgroup, const CommonOpts& opts,
             std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  const SubgroupGraph g = loadSubgroup(spec, t, subgroup);
  const ReturnSet set = primeWords(t, g, budgetOf(opts));
  for (const RWord& u : set.words) out << spec.formatWord(u) << "\n";
  return 0;
}

int cmdVerify(const SpecData& spec, const std::string& check, int maxWordLen,
              const std::string& subgroup, const CommonOpts& opts, std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  const auto conn = t.detectConnection(opts.connectionHorizon);
  if (conn) {
    out << "connection found at n=" << conn->steps << "; theorems need a connection-free "
        << "involution\n";
    return 3;
  }
  SweepOptions sweepOpts;
  sweepOpts.maxWordLen = maxWordLen;
  sweepOpts.exec = opts.serial ? Exec::Serial : Exec::Parallel;
  sweepOpts.budget = budgetOf(opts);

  std::vector<CheckResult> results;
  auto add = [&](std::vector<CheckResult> r) {
    results.insert(results.end(), std::make_move_iterator(r.begin()),
                   std::make_move_iterator(r.end()));
  };
  const bool all = check == "all";
  if (all || check == "returns") add(verifyMixedBasisSweep(t, sweepOpts));
  if (all || check == "cardinality") add(verifyCardinalitySweep(t, sweepOpts));
  if (all || check == "inverse-interval") add(verifyInverseIntervalSweep(t, sweepOpts));
  if (all || check == "group")
    results.push_back(verifyPrimeBasis(t, loadSubgroup(spec, t, subgroup), sweepOpts.budget));
  if (results.empty()) throw SpecError("unknown check '" + check + "'");

  bool failed = false, skipped = false;
  for (const CheckResult& r : results) {
    out << to_string(r.status) << " " << r.name;
    if (!r.anchor.empty()) out << " w=" << spec.formatWord(r.anchor);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
    failed |= r.status == CheckStatus::Fail;
    skipped |= r.status == CheckStatus::Skip;
  }
  out << results.size() << " checks, "
      << (failed ? "FAILED" : (skipped ? "INCOMPLETE (skips)" : "all passed")) << "\n";
  return failed || skipped ? 1 : 0;
}

int cmdRauzy(const SpecData& spec, int steps, const CommonOpts& opts, std::ostream& out) {
  LinearInvolution t = spec.toInvolution();
  for (int s = 1; s <= steps; ++s) {
    RauzyStep step = rauzyStep(t, dynamicsHorizon(t, opts));
    out << "step " << s << ":\n";
    for (size_t b = 0; b < step.sub.images.size(); ++b)
      out << "  " << char('a' + b) << " -> "
          << (s == 1 ? spec.formatWord(step.sub.images[b]) : step.sub.images[b].str()) << "\n";
    t = std::move(step.next);
  }
  out << t.describe();
  return 0;
}

int cmdInduce(const SpecData& spec, const std::string& word, const CommonOpts& opts,
              std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  const RWord w = spec.parseWord(word);
  const auto cell = t.labeledWordInterval(w);
  if (!cell) throw AnchorError("word '" + word + "' is not in the language");
  const InducedSystem ind = induceOnWord(t, w, dynamicsHorizon(t, opts));
  out << "I_" << spec.formatWord(cell->label) << " = (" << cell->iv.lo.str() << ", "
      << cell->iv.hi.str() << ") on component " << static_cast<int>(cell->iv.comp) << "\n";
  out << "origin = " << ind.origin.str() << "\n";
  for (size_t b = 0; b < ind.itineraries.size(); ++b)
    out << char('a' + b) << " -> " << spec.formatWord(ind.itineraries[b]) << "\n";
  out << ind.system.describe();
  return 0;
}

int cmdRender(const SpecData& spec, const std::string& outPath, const CommonOpts&,
              std::ostream& out) {
  const LinearInvolution t = spec.toInvolution();
  std::ofstream file(outPath);
  if (!file) throw SpecError("cannot open output file '" + outPath + "'");
  file << renderSvg(t, spec.names);
  out << "wrote " << outPath << "\n";
  return 0;
}

int runGuarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WordError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const AnchorError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConnectionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SingularPointError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const HorizonError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace linvol::cli
