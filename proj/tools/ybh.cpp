#include "ybh/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using ybh::cli::RunConfig;
  RunConfig cfg;
  std::string output;

  CLI::App app{"Yang-Baxter homology of the normalized Jones R-matrix over Q[y, 1/y]"};
  app.require_subcommand(1);
  app.add_option("-o,--output", output, "Write the report to this file instead of stdout");
  app.add_flag("--allow-large", cfg.allow_large, "Permit degrees above 14 (slow)");

  auto* verify = app.add_subcommand("verify", "Check the R-matrix identities and the three differential constructions");
  verify->add_option("--max-n", cfg.max_n, "Highest degree to check")->default_val(6);
  verify->add_flag("--corrupt-r", cfg.corrupt_r, "Run the R-matrix checks against a perturbed R (negative control)");

  auto* diff = app.add_subcommand("diff", "Print the differential d_n");
  diff->add_option("--n", cfg.n, "Degree")->required();
  diff->add_option("--method", cfg.method, "skein|curtain|psi|all")
      ->check(CLI::IsMember({"skein", "curtain", "psi", "all"}))
      ->default_val("curtain");
  diff->add_option("--format", cfg.format, "text|json|matrix (default: $YBH_FORMAT or text)");

  auto* hom = app.add_subcommand("homology", "Homology groups H_n");
  hom->add_option("--max-n", cfg.max_n, "Highest degree")->default_val(3);
  hom->add_option("--min-n", cfg.min_n, "Lowest degree")->default_val(1);
  hom->add_option("--format", cfg.format, "text|json|csv (default: $YBH_FORMAT or text)");
  hom->add_flag("--with-cohomology", cfg.with_cohomology, "Also report cohomology");
  hom->add_option("--jobs", cfg.jobs, "Degrees computed concurrently")->default_val(1);

  auto* cohom = app.add_subcommand("cohomology", "Cohomology groups H^n (direct and universal-coefficient, cross-checked)");
  cohom->add_option("--max-n", cfg.max_n, "Highest degree")->default_val(3);
  cohom->add_option("--min-n", cfg.min_n, "Lowest degree")->default_val(1);
  cohom->add_option("--format", cfg.format, "text|json|csv (default: $YBH_FORMAT or text)");

  auto* conj = app.add_subcommand("conjecture", "Compare H_n with the Fibonacci prediction");
  conj->add_option("--max-n", cfg.max_n, "Highest degree")->default_val(5);
  conj->add_option("--format", cfg.format, "text|json|csv (default: $YBH_FORMAT or text)");
  conj->add_option("--jobs", cfg.jobs, "Degrees computed concurrently")->default_val(1);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("input", cfg.input, "Matrix in the text format written by `diff --format matrix`")->required();
  snf->add_option("--strategy", cfg.strategy, "row-major|sparsest")
      ->check(CLI::IsMember({"row-major", "sparsest"}))
      ->default_val("row-major");
  snf->add_option("--format", cfg.format, "text|json (default: $YBH_FORMAT or text)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ybh::cli::usage_error;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (output.empty()) return ybh::cli::run(cfg, std::cout, std::cerr);
  std::ofstream file(output);
  if (!file) {
    std::cerr << "error: cannot write '" << output << "'\n";
    return ybh::cli::runtime_error;
  }
  return ybh::cli::run(cfg, file, std::cerr);
}
