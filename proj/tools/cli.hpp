#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affqha/grid.hpp"
#include "affqha/hilbert.hpp"

namespace affqha::cli {

enum ExitCode { ok = 0, numerical_failure = 1, config_error = 2, parse_error = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  GridSpec grid;
  std::string signal = "laguerre:0,1";
  std::string signal2;
  std::string op;
  std::string op2;
  std::string symbol;
  std::string symbol2;
  std::string out = ".";
  std::vector<std::string> suites;
  std::optional<int> grid_n;
  int workers = 0;  // 0: keep the environment default
  int points = 8;
  int sets = 1;
  unsigned long long seed = 1;
};

// key = value lines, '#' starts a comment. Unknown keys throw ConfigError.
void apply_config_text(std::istream& is, RunConfig& cfg);
void apply_config_value(const std::string& key, const std::string& value, RunConfig& cfg);

// laguerre:n,alpha | log-gaussian:mu,sigma | file:path
Signal make_signal(const std::string& spec, const LogGrid& grid);
// rank-one:SIG[;SIG] | laguerre-mix:w0,w1,...@alpha=A | file:path
OperatorRep make_operator(const std::string& spec, const LogGrid& grid);
// gaussian:x0,sx,s0,ss[,freq] | box:x0,x1,s0,s1 | file:path
AffFunction make_symbol(const std::string& spec, const AffGrid& grid);

const std::vector<std::string>& command_names();

// Runs one command, writing files under cfg.out and a short summary to log.
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& log);

}  // namespace affqha::cli
