#include <deque>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "affqha/io.hpp"
#include "cli.hpp"

namespace cli = affqha::cli;

namespace {

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

constexpr Flag flags[] = {
    {"--t-min", "t_min", "log-grid lower bound"},
    {"--t-max", "t_max", "log-grid upper bound"},
    {"--n", "n", "log-grid node count"},
    {"--x-extent", "x_extent", "x-axis half width"},
    {"--n-x", "n_x", "x-axis node count"},
    {"--s-min", "s_min", "lower bound of s = log a"},
    {"--s-max", "s_max", "upper bound of s = log a"},
    {"--n-s", "n_s", "s-axis node count"},
    {"--grid-n", "grid_n", "log-grid node count with a re-aligned s-axis"},
    {"--signal", "signal", "laguerre:n,alpha | log-gaussian:mu,sigma | file:path"},
    {"--signal2", "signal2", "second signal, same forms as --signal"},
    {"--operator", "operator", "rank-one:SIG[;SIG] | laguerre-mix:w,...@alpha=A | file:path"},
    {"--operator2", "operator2", "second operator"},
    {"--symbol", "symbol", "gaussian:x0,sx,s0,ss[,freq] | box:x0,x1,s0,s1 | file:path"},
    {"--symbol2", "symbol2", "second symbol"},
    {"--out", "out", "output directory"},
    {"--workers", "workers", "worker threads"},
    {"--points", "points", "points per Bochner set"},
    {"--sets", "sets", "number of random Bochner sets"},
    {"--seed", "seed", "seed for random point sets"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum harmonic analysis on the affine group"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");
  std::deque<std::string> values(std::size(flags));
  std::vector<CLI::Option*> opts;
  for (std::size_t k = 0; k < std::size(flags); ++k)
    opts.push_back(app.add_option(flags[k].name, values[k], flags[k].help));
  std::vector<std::string> suites;
  app.add_option("--suite", suites, "verification suites (comma separated, or all)")->delimiter(',');

  for (const std::string& name : cli::command_names()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::config_error;
  }

  cli::RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) throw cli::ConfigError("cannot open config file " + config_path);
      cli::apply_config_text(is, cfg);
    }
    for (std::size_t k = 0; k < std::size(flags); ++k)
      if (opts[k]->count() > 0) cli::apply_config_value(flags[k].key, values[k], cfg);
    if (!suites.empty()) cfg.suites = suites;
    return cli::run_command(app.get_subcommands().front()->get_name(), cfg, std::cout);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::config_error;
  } catch (const affqha::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return cli::parse_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::config_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::numerical_failure;
  }
}
