#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using barbridge::cli::RunConfig;

namespace {

void common(CLI::App* app, RunConfig& c) {
  app->add_option("--k", c.k, "Homology degree")->capture_default_str();
  app->add_option("--field", c.field, "Prime characteristic")->capture_default_str();
  app->add_option("--tie-break", c.tie_break, "error or jitter")->capture_default_str();
  app->add_option("--out", c.out, "JSON output path (stdout if omitted)");
  app->add_option("--svg", c.svg, "SVG output path");
  app->add_flag("--timings", c.timings, "Record wall-clock timings in the document");
}

void extension_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--bar", c.bar, "Rank of the source bar (longest first)")->capture_default_str();
  app->add_option("--cap", c.cap, "Enumeration cap")->capture_default_str();
  app->add_option("--extension-mode", c.extension_mode, "auto, general or f2")
      ->capture_default_str();
  app->add_option("--psi-override", c.psi_override, "Grade at which the source class is taken");
  app->add_flag("--strict-complete", c.strict_complete, "Exit 4 if enumeration was truncated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence barcodes, cycle extensions and analogous bars"};
  app.require_subcommand(1);
  RunConfig c;

  auto* persistence = app.add_subcommand("persistence", "Barcode of a Vietoris-Rips filtration");
  persistence->add_option("input", c.inputs, "Dissimilarity matrix (or points with --points)")
      ->required()
      ->expected(1);
  persistence->add_flag("--points", c.points, "Input is an n x d point cloud");
  persistence->add_option("--max-dim", c.max_dim, "Largest simplex dimension (default k + 1)");
  common(persistence, c);

  auto* extend = app.add_subcommand("extend", "Extend a bar or cycle of Z into Y");
  extend->add_option("inputs", c.inputs, "Z and Y dissimilarity matrices")->required()->expected(2);
  extend->add_flag("--points", c.points, "Inputs are point clouds");
  extend->add_option("--max-dim", c.max_dim, "Largest simplex dimension (default k + 1)");
  extend->add_option("--cycle", c.cycle, "Cycle file on Z instead of --bar");
  common(extend, c);
  extension_flags(extend, c);

  auto* analogous = app.add_subcommand("analogous", "Analogous bars between two systems");
  analogous->add_option("inputs", c.inputs, "M_Q M_P M_QP, or Q P with --points")->expected(0, 3);
  analogous->add_flag("--points", c.points, "Inputs are two point clouds in a shared space");
  analogous->add_option("--mode", c.mode, "feature or similarity")->capture_default_str();
  analogous->add_option("--member-cap", c.member_cap, "Feature mode: members dualized per set")
      ->capture_default_str();
  analogous->add_option("--generate", c.generator, "Use a built-in scenario: circles, clusters, torus");
  analogous->add_option("--seed", c.seed, "Generator seed")->capture_default_str();
  common(analogous, c);
  extension_flags(analogous, c);

  auto* dowker = app.add_subcommand("dowker-check", "Compare the barcodes of W(B) and W(B^T)");
  dowker->add_option("input", c.inputs, "Cross dissimilarity matrix")->expected(0, 1);
  dowker->add_option("--random", c.random, "Use a uniform random ROWSxCOLS matrix");
  dowker->add_option("--seed", c.seed, "Seed for --random")->capture_default_str();
  common(dowker, c);

  auto* generate = app.add_subcommand("generate", "Write a built-in scenario as CSV files");
  generate->add_option("generator", c.generator, "circles, clusters, torus or trefoil")->required();
  generate->add_option("--seed", c.seed, "Generator seed")->capture_default_str();
  generate->add_option("--out", c.out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return barbridge::cli::kInputError;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  return barbridge::cli::run(c, std::cout, std::cerr);
}
