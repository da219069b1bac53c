// cohom_atlas: enumerate and verify cohomogeneity one actions on a space.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohom/atlas.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and verify cohomogeneity one actions on symmetric spaces of noncompact type"};
  std::string space;
  cohom::RunConfig config;
  std::string format = "json";
  std::string out;
  std::vector<std::string> feature_flags;

  app.add_option("--space", space, "space, e.g. sl(4) or rh(3)*rh(3)")->required();
  app.add_option("--seed", config.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--samples", config.samples, "sample count for sampled checks")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}))
      ->capture_default_str();
  app.add_flag("--nc-search", config.nc_search, "run the nilpotent construction oracle (sl(k), k <= 4)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  app.add_option("--out", out, "write output to this file instead of stdout");
  app.add_option("--feature", feature_flags, "optional features")->check(CLI::IsMember({"su1n"}));
  CLI11_PARSE(app, argc, argv);

  config.format = format == "markdown" ? cohom::OutputFormat::markdown : cohom::OutputFormat::json;
  if (!out.empty()) config.output_path = out;
  for (const auto& f : feature_flags)
    if (f == "su1n") config.su1n = true;

  cohom::SpaceSpec spec;
  try {
    spec = cohom::parse_space(space);
  } catch (const cohom::SpaceParseError& e) {
    std::cerr << "error: --space " << space << ": " << e.what() << "\n";
    std::cerr << "       --space " << std::string(e.offset(), ' ') << "^\n";
    return 2;
  }
  try {
    const cohom::RunResult r = cohom::run(spec, config);
    if (!config.output_path) std::cout << r.output;
    if (r.exit_code != 0) std::cerr << "error: some identity checks failed\n";
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
