#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "decimation/cli.hpp"

namespace {

using decimation::cli::RunConfig;

void add_group(CLI::App* app, RunConfig& c) {
  app->add_option("--group,-g", c.group, "group as Z<l1>x...xZ<lr>, e.g. Z3xZ9")->required();
}

void add_density(CLI::App* app, RunConfig& c) {
  app->add_option("--density,-d", c.density, "density (sum of multiplicities)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of necklaces, bracelets and decimation classes over finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  std::string format = "json";
  std::string generators;
  app.add_option("--format,-f", format, "json, csv or text")->capture_default_str();
  app.add_option("--threads,-j", c.threads, "worker threads for per-subgroup rows")->capture_default_str();

  auto* count = app.add_subcommand("count", "full per-subgroup decimation class report");
  add_group(count, c);
  add_density(count, c);
  for (const char* name : {"necklaces", "symmetric", "bracelets"}) {
    auto* sub = app.add_subcommand(name, std::string("number of ") + name);
    add_group(sub, c);
    add_density(sub, c);
  }
  auto* multipliers = app.add_subcommand("multipliers", "multiplier group and witnesses of a vector");
  add_group(multipliers, c);
  multipliers->add_option("--vector,-v", c.vector, "multiplicities in index order, e.g. 2,1,0,0,0")->required();
  auto* orbits = app.add_subcommand("orbits", "orbits of a unit subgroup acting on the group");
  add_group(orbits, c);
  orbits->add_option("--generators", generators, "comma-separated units generating H (default <1>)");
  auto* lattice = app.add_subcommand("lattice", "subgroup lattice of the unit group mod the exponent");
  add_group(lattice, c);
  auto* oracle = app.add_subcommand("oracle", "brute-force census");
  add_group(oracle, c);
  add_density(oracle, c);
  oracle->add_option("--budget", c.budget, "maximum number of vectors to enumerate")->capture_default_str();
  oracle->add_flag("--verify", c.verify, "compare against the counting pipeline; exit 1 on mismatch");
  auto* sweep = app.add_subcommand("sweep", "cyclic sweep with a persistent CSV cache");
  sweep->add_option("--lmin", c.lmin, "smallest order")->required();
  sweep->add_option("--lmax", c.lmax, "largest order")->required();
  sweep->add_option("--density-rule", c.density_rule, "density as a function of l, e.g. (l+1)/2")->required();
  sweep->add_option("--cache", c.cache_path, "cache file (default $DECIMATION_CACHE or ./decimation_cache.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  c.command = app.get_subcommands().front()->get_name();
  try {
    c.format = decimation::cli::parse_format(format);
    if (!generators.empty()) {
      for (const auto& s : CLI::detail::split(generators, ',')) c.generators.push_back(std::stoll(s));
    }
  } catch (const decimation::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception&) {
    std::cerr << "error: bad --generators list '" << generators << "'\n";
    return 2;
  }
  return decimation::cli::run(c, std::cout, std::cerr);
}
