#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "neutro/cli.hpp"

namespace {

struct Flags {
  int variant = 1;
  std::string input;
  std::string output;
  std::string format = "csv";
  double step = 0.05;
  double tolerance = 1e-12;
};

void add_variant(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--variant", flags.variant, "Decomposition variant")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
}

void add_streams(CLI::App* cmd, Flags& flags, bool with_input) {
  if (with_input) {
    cmd->add_option("--input", flags.input, "Input file (default: stdin)");
  }
  cmd->add_option("--output", flags.output, "Output file (default: stdout)");
  cmd->add_option("--format", flags.format, "Row format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decomposes bifuzzy pairs and neutrosophic triplets into penta-/deca-valued "
      "partitions of unity and their entropy split"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* deca = app.add_subcommand(
      "deca", "Decompose triplets into the ten indexes plus the entropy triad");
  add_variant(deca, flags);
  add_streams(deca, flags, true);

  CLI::App* penta = app.add_subcommand("penta", "Decompose pairs into the five indexes");
  add_variant(penta, flags);
  add_streams(penta, flags, true);

  CLI::App* entropy = app.add_subcommand(
      "entropy", "Entropy, neutro-entropy and anti-entropy of triplets");
  add_variant(entropy, flags);
  add_streams(entropy, flags, true);

  CLI::App* grid = app.add_subcommand(
      "grid", "Decompose a uniform lattice spanning the whole cube");
  add_variant(grid, flags);
  add_streams(grid, flags, false);
  grid->add_option("--step", flags.step, "Lattice spacing; 1/step must be an integer")
      ->capture_default_str();

  CLI::App* prototypes = app.add_subcommand(
      "prototypes", "The ten pure states and their indicator decompositions");
  add_variant(prototypes, flags);
  add_streams(prototypes, flags, false);

  CLI::App* check = app.add_subcommand(
      "check", "Sweep the algebraic invariants over a lattice and report deviations");
  add_variant(check, flags);
  add_streams(check, flags, false);
  check->add_option("--step", flags.step, "Lattice spacing; 1/step must be an integer")
      ->capture_default_str();
  check->add_option("--tolerance", flags.tolerance, "Largest acceptable deviation")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return neutro::cli::kExitInput;
  }

  neutro::cli::Config config;
  if (app.got_subcommand(deca)) config.command = neutro::cli::Command::deca;
  if (app.got_subcommand(penta)) config.command = neutro::cli::Command::penta;
  if (app.got_subcommand(entropy)) config.command = neutro::cli::Command::entropy;
  if (app.got_subcommand(grid)) config.command = neutro::cli::Command::grid;
  if (app.got_subcommand(prototypes)) config.command = neutro::cli::Command::prototypes;
  if (app.got_subcommand(check)) config.command = neutro::cli::Command::check;
  config.variant = flags.variant == 1 ? neutro::Variant::I : neutro::Variant::II;
  if (!flags.input.empty()) config.input_path = flags.input;
  if (!flags.output.empty()) config.output_path = flags.output;
  config.format = flags.format == "csv" ? neutro::io::Format::csv : neutro::io::Format::jsonl;
  config.step = flags.step;
  config.tolerance = flags.tolerance;

  return neutro::cli::run(config, std::cin, std::cout, std::cerr);
}
