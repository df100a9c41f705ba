#include <CLI11.hpp>
#include <iostream>

#include "linvol/cli_commands.hpp"

using namespace linvol;

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for linear involutions: natural codings, "
               "return words and free-group verification"};
  app.require_subcommand(1);

  std::string specPath, word, kind = "mixed", subgroup = "even", check, outPath;
  int maxLen = 5, maxWordLen = 5, steps = 1;
  cli::CommonOpts opts;

  auto addCommon = [&](CLI::App* cmd, bool withSpec = true) {
    if (withSpec) cmd->add_option("spec", specPath, "involution spec file")->required();
    cmd->add_option("--connection-horizon", opts.connectionHorizon,
                    "steps searched for connections");
    cmd->add_option("--horizon", opts.returnHorizon,
                    "dynamical horizon override (0 = automatic)");
    cmd->add_option("--scan-cap", opts.scanCapMax, "language-scan length budget");
    cmd->add_flag("--serial", opts.serial, "disable OpenMP parallel sweeps");
  };

  CLI::App* info = app.add_subcommand("info", "classification and layout summary");
  addCommon(info);

  CLI::App* lang = app.add_subcommand("language", "enumerate the natural coding");
  addCommon(lang);
  lang->add_option("--max-len", maxLen, "maximum word length")->required();

  CLI::App* ret = app.add_subcommand("returns", "return words to a word anchor");
  addCommon(ret);
  ret->add_option("--word", word, "anchor word (uppercase = inverse)")->required();
  ret->add_option("--kind", kind, "complete | mixed | right | left");

  CLI::App* prime = app.add_subcommand("prime", "prime words w.r.t. a finite-index subgroup");
  addCommon(prime);
  prime->add_option("--subgroup", subgroup, "'even' or '@file' of generator words");

  CLI::App* verify = app.add_subcommand("verify", "check the return-word theorems instance-wise");
  addCommon(verify);
  verify->add_option("--check", check, "returns | group | cardinality | inverse-interval | all")
      ->required();
  verify->add_option("--max-word-len", maxWordLen, "anchor length bound");
  verify->add_option("--subgroup", subgroup, "subgroup for --check group");

  CLI::App* rauzy = app.add_subcommand("rauzy", "iterate Rauzy induction");
  addCommon(rauzy);
  rauzy->add_option("--steps", steps, "number of induction steps");

  CLI::App* induce = app.add_subcommand("induce", "first-return system on a word's interval");
  addCommon(induce);
  induce->add_option("--word", word, "language word")->required();

  CLI::App* render = app.add_subcommand("render", "emit a two-row SVG diagram");
  addCommon(render);
  render->add_option("-o,--out", outPath, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  return cli::runGuarded(
      [&]() -> int {
        const SpecData spec = parseSpecFile(specPath);
        if (info->parsed()) return cli::cmdInfo(spec, opts, std::cout);
        if (lang->parsed()) return cli::cmdLanguage(spec, maxLen, opts, std::cout);
        if (ret->parsed()) return cli::cmdReturns(spec, word, kind, opts, std::cout);
        if (prime->parsed()) return cli::cmdPrime(spec, subgroup, opts, std::cout);
        if (verify->parsed())
          return cli::cmdVerify(spec, check, maxWordLen, subgroup, opts, std::cout);
        if (rauzy->parsed()) return cli::cmdRauzy(spec, steps, opts, std::cout);
        if (induce->parsed()) return cli::cmdInduce(spec, word, opts, std::cout);
        if (render->parsed()) return cli::cmdRender(spec, outPath, opts, std::cout);
        return 2;
      },
      std::cerr);
}
