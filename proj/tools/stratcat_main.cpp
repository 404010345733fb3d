#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stratcat/cli.hpp"

using stratcat::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"stratcat: a stratified set theory workbench"};
  app.require_subcommand(1);

  RunConfig config;
  std::string conv_name = "quine";
  std::string exec_name = "parallel";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", config.json, "emit a JSON report on stdout");
    cmd->add_option("--seed", config.seed, "seed for sampled enumerations");
    cmd->add_option("--exec", exec_name, "sweep execution: parallel|serial")
        ->check(CLI::IsMember({"parallel", "serial"}));
  };

  auto* stratify = app.add_subcommand("stratify", "decide stratifiability of a formula");
  stratify->add_option("formula", config.formula, "a formula in the surface syntax");
  stratify->add_option("--corpus", config.corpus_path, "run a corpus file instead");
  stratify->add_option("--conv", conv_name, "pairing convention: quine|wk")
      ->check(CLI::IsMember({"quine", "wk"}));
  add_common(stratify);

  auto* spe = app.add_subcommand("spe-verify", "audit the stratified-topos structure");
  spe->add_option("--rank", config.rank, "object rank budget (<= 4)");
  add_common(spe);

  auto* yoneda = app.add_subcommand("yoneda", "check the internal Yoneda bijection");
  yoneda->add_option("--cat", config.category_path, "internal category file")->required();
  yoneda->add_option("--object", config.object_text, "object of C0, brace notation")->required();
  yoneda->add_option("--diagram", config.diagram_path, "internal diagram file")->required();
  add_common(yoneda);

  auto* internal_full = app.add_subcommand("internal-full",
                                           "fullness of the membership-generated family");
  internal_full->add_option("--rank", config.rank, "universe rank (<= 3)");
  add_common(internal_full);

  auto* audit = app.add_subcommand("smallmaps-audit", "audit the small-map axioms");
  audit->add_option("--pred", config.predicate, "all | fibre:N | stcan:K");
  audit->add_option("--rank", config.rank, "carrier sample rank (<= 3)");
  add_common(audit);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  try {
    config.conv = stratcat::strat::convention_from_name(conv_name);
    config.exec = stratcat::sweep::exec_from_name(exec_name);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (config.command == "stratify" && config.formula.empty() && config.corpus_path.empty()) {
    std::cerr << "stratify: need a formula or --corpus FILE\n";
    return 2;
  }

  auto report = stratcat::cli::run(config);
  if (config.json) {
    std::cout << report.json.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
  return report.exit_code;
}
