// nilcone: orbit labels, fundamental groups and semi-simplicity of admissible
// D-modules on the enhanced cyclic nilpotent cone.

#include "nilcone/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("-f,--format", format, "Output format: pretty, json or tsv")
      ->check(CLI::IsMember({"pretty", "json", "tsv"}));
}

void add_n(CLI::App* sub, nilcone::cli::CliConfig& cfg) { sub->add_option("-n", cfg.n, "Rank n"); }
void add_ell(CLI::App* sub, nilcone::cli::CliConfig& cfg) {
  sub->add_option("-l,--ell", cfg.ell, "Cycle length ell (>= 1)");
}
void add_chi(CLI::App* sub, nilcone::cli::CliConfig& cfg) {
  sub->add_option("--chi", cfg.chi, "Character, e.g. 1/5,1/7");
}
void add_kappa(CLI::App* sub, nilcone::cli::CliConfig& cfg) {
  sub->add_option("--kappa", cfg.kappa, "Cherednik parameters, e.g. k00=1/3,k=1/4,-1/4");
}

}  // namespace

int main(int argc, char** argv) {
  using nilcone::cli::CliConfig;
  using nilcone::cli::Subcommand;

  CLI::App app{"Orbits of the enhanced cyclic nilpotent cone and semi-simplicity of admissible D-modules"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "pretty";

  auto* orbits = app.add_subcommand("orbits", "List Q(n,ell) with summands and fundamental groups");
  add_n(orbits, cfg);
  add_ell(orbits, cfg);
  add_chi(orbits, cfg);
  add_kappa(orbits, cfg);
  add_format(orbits, format);

  auto* pi1 = app.add_subcommand("pi1", "Fundamental group of one orbit");
  add_n(pi1, cfg);
  add_ell(pi1, cfg);
  pi1->add_option("--lambda", cfg.lambda, "Partition, e.g. [2,1]");
  pi1->add_option("--nu", cfg.nu, "Multipartition, e.g. [2];[]");
  add_chi(pi1, cfg);
  add_kappa(pi1, cfg);
  add_format(pi1, format);

  auto* simples = app.add_subcommand("simples", "List Q_chi(n,ell), the simple objects");
  add_n(simples, cfg);
  add_ell(simples, cfg);
  add_chi(simples, cfg);
  add_kappa(simples, cfg);
  add_format(simples, format);

  auto* semisimple = app.add_subcommand("semisimple", "Decide semi-simplicity by all three criteria");
  add_n(semisimple, cfg);
  add_ell(semisimple, cfg);
  add_chi(semisimple, cfg);
  add_kappa(semisimple, cfg);
  semisimple->add_option("--seed", cfg.seed, "Sample chi (denominators <= 12) from this seed");
  add_format(semisimple, format);

  auto* hyperplanes = app.add_subcommand("hyperplanes", "List the roots of R_n and their hyperplanes");
  add_n(hyperplanes, cfg);
  add_ell(hyperplanes, cfg);
  add_format(hyperplanes, format);

  auto* translate = app.add_subcommand("translate", "Convert between chi, kappa and Hecke parameters");
  add_ell(translate, cfg);
  add_chi(translate, cfg);
  add_kappa(translate, cfg);
  add_format(translate, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return nilcone::cli::kInputError;
  }

  const auto* chosen = app.get_subcommands().front();
  cfg.subcommand = *nilcone::cli::subcommand_from_string(chosen->get_name());
  cfg.format = *nilcone::cli::format_from_string(format);
  int code = nilcone::cli::run(cfg, std::cout, std::cerr);
  if (code == nilcone::cli::kInputError) std::cerr << '\n' << chosen->help();
  return code;
}
