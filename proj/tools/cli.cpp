#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "affqha/convolve.hpp"
#include "affqha/fixtures.hpp"
#include "affqha/fourier.hpp"
#include "affqha/io.hpp"
#include "affqha/parallel.hpp"
#include "affqha/verify.hpp"
#include "affqha/weyl.hpp"
#include "affqha/wigner.hpp"

namespace affqha::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

long long to_int(const std::string& s) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError("not an integer: '" + s + "'");
  return v;
}

std::vector<double> numbers(const std::string& s, std::size_t lo, std::size_t hi,
                            const std::string& what) {
  std::vector<double> v;
  for (const std::string& part : split(s, ',')) v.push_back(to_double(part));
  if (v.size() < lo || v.size() > hi) throw ConfigError("wrong number of parameters for " + what);
  return v;
}

std::pair<std::string, std::string> kind_and_args(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("spec needs 'kind:args': '" + spec + "'");
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open " + path);
  return is;
}

std::filesystem::path output_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out);
  return std::filesystem::path(cfg.out) / name;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  std::ofstream os(output_path(cfg, name));
  if (!os) throw ConfigError("cannot write " + name + " in " + cfg.out);
  return os;
}

bool finite(const CMatrix& m) { return m.allFinite(); }

int write_function(const RunConfig& cfg, const std::string& name, const AffFunction& f,
                   std::ostream& log) {
  if (!finite(f.values())) {
    log << "non-finite values in " << name << "\n";
    return numerical_failure;
  }
  std::ofstream os = open_output(cfg, name);
  write_aff_csv(os, f);
  log << "wrote " << (std::filesystem::path(cfg.out) / name).string() << "\n";
  return ok;
}

int write_op(const RunConfig& cfg, const std::string& name, const OperatorRep& A,
             std::ostream& log) {
  if (!finite(A.kernel())) {
    log << "non-finite values in " << name << "\n";
    return numerical_failure;
  }
  std::ofstream os = open_output(cfg, name);
  write_operator_csv(os, A);
  log << "wrote " << (std::filesystem::path(cfg.out) / name).string() << "\n";
  return ok;
}

int write_text(const RunConfig& cfg, const std::string& name, const std::string& text,
               std::ostream& log) {
  std::ofstream os = open_output(cfg, name);
  os << text;
  log << text;
  return ok;
}

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw ConfigError(std::string("missing ") + flag);
  return v;
}

struct Context {
  LogGrid lg;
  AffGrid ag;
};

Context context(const RunConfig& cfg) {
  const GridSpec spec = cfg.grid_n ? with_log_nodes(cfg.grid, *cfg.grid_n) : cfg.grid;
  try {
    auto [lg, ag] = make_grids(spec);
    return {std::move(lg), std::move(ag)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int cmd_wigner(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const Signal psi = make_signal(cfg.signal, c.lg);
  const Signal phi = cfg.signal2.empty() ? psi : make_signal(cfg.signal2, c.lg);
  return write_function(cfg, "wigner.csv", affine_wigner(psi, phi, c.ag).value, log);
}

int cmd_scalogram(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const Signal window = make_signal(cfg.signal, c.lg);
  const Signal sig = make_signal(need(cfg.signal2, "--signal2"), c.lg);
  return write_function(cfg, "scalogram.csv", scalogram(window, sig, c.ag), log);
}

int cmd_quantize(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const AffFunction f = make_symbol(need(cfg.symbol, "--symbol"), c.ag);
  return write_op(cfg, "operator.csv", quantize(f, c.lg), log);
}

int cmd_dequantize(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const OperatorRep A = make_operator(need(cfg.op, "--operator"), c.lg);
  return write_function(cfg, "symbol.csv", dequantize(A, c.ag), log);
}

int cmd_convolve(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  if (!cfg.symbol.empty() && !cfg.symbol2.empty())
    return write_function(cfg, "convolution.csv",
                          fun_conv(make_symbol(cfg.symbol, c.ag), make_symbol(cfg.symbol2, c.ag)),
                          log);
  if (!cfg.symbol.empty() && !cfg.op.empty())
    return write_op(cfg, "convolution_operator.csv",
                    fun_op_conv(make_symbol(cfg.symbol, c.ag), make_operator(cfg.op, c.lg)), log);
  if (!cfg.op.empty() && !cfg.op2.empty())
    return write_function(
        cfg, "convolution.csv",
        op_op_conv(make_operator(cfg.op, c.lg), make_operator(cfg.op2, c.lg), c.ag), log);
  throw ConfigError("convolve needs --symbol with --symbol2 or --operator, or --operator with --operator2");
}

int cmd_cohen(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const Signal psi = make_signal(cfg.signal, c.lg);
  const Signal phi = cfg.signal2.empty() ? psi : make_signal(cfg.signal2, c.lg);
  const OperatorRep S = make_operator(need(cfg.op, "--operator"), c.lg);
  return write_function(cfg, "cohen.csv", cohen_distribution(psi, phi, S, c.ag).value, log);
}

int cmd_fourier_wigner(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  if (!cfg.symbol.empty()) {
    const FourierWignerInverse inv = fw_inverse(make_symbol(cfg.symbol, c.ag), c.lg);
    const int rc = write_op(cfg, "fourier_wigner_inverse.csv", inv.op, log);
    if (rc != ok) return rc;
    return write_text(cfg, "fourier_wigner_inverse.txt",
                      "discarded_mass=" + format_double(inv.discarded_mass) + "\n", log);
  }
  const OperatorRep A = make_operator(need(cfg.op, "--operator or --symbol"), c.lg);
  return write_function(cfg, "fourier_wigner.csv", fw_forward(A, c.ag), log);
}

int cmd_kirillov(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  return write_function(cfg, "kirillov.csv", fko(make_symbol(need(cfg.symbol, "--symbol"), c.ag)),
                        log);
}

int cmd_admissibility(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const AdmissibilityReport rep = admissibility_check(make_operator(need(cfg.op, "--operator"), c.lg));
  if (!std::isfinite(rep.dsd_trace_norm) || !std::isfinite(std::abs(rep.dsd_trace))) {
    log << "non-finite admissibility diagnostics\n";
    return numerical_failure;
  }
  return write_text(cfg, "admissibility.txt", to_key_value(rep), log);
}

int cmd_localize(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const AffFunction f = make_symbol(cfg.symbol.empty() ? "box:-1,1,-1,1" : cfg.symbol, c.ag);
  const Signal window = make_signal(cfg.signal, c.lg);
  const LocalizationOperator L = localization_operator(f, window);
  const Eigen::VectorXd& ev = L.spectrum.eigenvalues;
  if (!ev.allFinite()) {
    log << "non-finite eigenvalues\n";
    return numerical_failure;
  }
  {
    std::ofstream os = open_output(cfg, "localization_eigenvalues.csv");
    os << "index,eigenvalue\n";
    for (Eigen::Index k = ev.size() - 1; k >= 0; --k)
      os << (ev.size() - 1 - k) << ',' << format_double(ev(k)) << '\n';
  }
  {
    std::ofstream os = open_output(cfg, "localization_top.csv");
    write_signal_csv(os, Signal(c.lg, L.spectrum.eigenvectors.col(ev.size() - 1)));
  }
  std::string kv = "top_eigenvalue=" + format_double(ev(ev.size() - 1)) + "\n";
  kv += "trace=" + format_double(trace(L.op).real()) + "\n";
  kv += "asymmetry=" + format_double(L.spectrum.asymmetry) + "\n";
  return write_text(cfg, "localization.txt", kv, log);
}

int cmd_bochner(const RunConfig& cfg, std::ostream& log) {
  const Context c = context(cfg);
  const OperatorRep A = make_operator(need(cfg.op, "--operator"), c.lg);
  if (cfg.points < 1 || cfg.sets < 1) throw ConfigError("--points and --sets must be positive");
  double lowest = std::numeric_limits<double>::infinity();
  PositiveTypeReport worst;
  for (int k = 0; k < cfg.sets; ++k) {
    const auto pts = random_aligned_points(c.lg, cfg.points, cfg.seed + static_cast<unsigned>(k), 2.0, 40);
    PositiveTypeReport rep = positive_type_test(A, pts);
    if (rep.min_eigenvalue < lowest) {
      lowest = rep.min_eigenvalue;
      worst = std::move(rep);
    }
  }
  if (!std::isfinite(lowest)) {
    log << "non-finite Gram spectrum\n";
    return numerical_failure;
  }
  {
    std::ofstream os = open_output(cfg, "bochner_eigenvalues.csv");
    os << "index,eigenvalue\n";
    for (Eigen::Index k = 0; k < worst.eigenvalues.size(); ++k)
      os << k << ',' << format_double(worst.eigenvalues(k)) << '\n';
  }
  std::string kv = "points=" + std::to_string(cfg.points) + "\nsets=" + std::to_string(cfg.sets) +
                   "\nmin_eigenvalue=" + format_double(lowest) + "\n";
  for (std::size_t k = 0; k < worst.points.size(); ++k)
    kv += "point" + std::to_string(k) + "=" + format_double(worst.points[k].x()) + "," +
          format_double(worst.points[k].a()) + "\n";
  return write_text(cfg, "bochner.txt", kv, log);
}

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  std::vector<std::string> names;
  for (const std::string& s : cfg.suites.empty() ? std::vector<std::string>{"all"} : cfg.suites)
    for (const std::string& part : split(s, ','))
      if (part == "all") {
        const auto all = suite_names();
        names.insert(names.end(), all.begin(), all.end());
      } else {
        names.push_back(part);
      }
  const auto known = suite_names();
  for (const std::string& n : names)
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw ConfigError("unknown suite: " + n);
  VerifyConfig vc;
  vc.grid = cfg.grid_n ? with_log_nodes(cfg.grid, *cfg.grid_n) : cfg.grid;
  std::vector<SuiteResult> results;
  for (const std::string& n : names) results.push_back(run_suite(n, vc));
  const std::string report = format_report(results);
  write_text(cfg, "verify_report.txt", report, log);
  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass(); });
  return all_pass ? ok : numerical_failure;
}

using Command = int (*)(const RunConfig&, std::ostream&);

const std::vector<std::pair<std::string, Command>>& commands() {
  static const std::vector<std::pair<std::string, Command>> c = {
      {"wigner", cmd_wigner},
      {"scalogram", cmd_scalogram},
      {"quantize", cmd_quantize},
      {"dequantize", cmd_dequantize},
      {"convolve", cmd_convolve},
      {"cohen", cmd_cohen},
      {"fourier-wigner", cmd_fourier_wigner},
      {"kirillov", cmd_kirillov},
      {"admissibility", cmd_admissibility},
      {"localize", cmd_localize},
      {"bochner", cmd_bochner},
      {"verify", cmd_verify},
  };
  return c;
}

}  // namespace

void apply_config_value(const std::string& key, const std::string& value, RunConfig& cfg) {
  GridSpec& g = cfg.grid;
  if (key == "t_min") g.t_min = to_double(value);
  else if (key == "t_max") g.t_max = to_double(value);
  else if (key == "n") g.n = static_cast<int>(to_int(value));
  else if (key == "x_extent") g.x_extent = to_double(value);
  else if (key == "n_x") g.n_x = static_cast<int>(to_int(value));
  else if (key == "s_min") g.s_min = to_double(value);
  else if (key == "s_max") g.s_max = to_double(value);
  else if (key == "n_s") g.n_s = static_cast<int>(to_int(value));
  else if (key == "grid_n") cfg.grid_n = static_cast<int>(to_int(value));
  else if (key == "signal") cfg.signal = value;
  else if (key == "signal2") cfg.signal2 = value;
  else if (key == "operator") cfg.op = value;
  else if (key == "operator2") cfg.op2 = value;
  else if (key == "symbol") cfg.symbol = value;
  else if (key == "symbol2") cfg.symbol2 = value;
  else if (key == "out") cfg.out = value;
  else if (key == "suite") cfg.suites.push_back(value);
  else if (key == "workers") cfg.workers = static_cast<int>(to_int(value));
  else if (key == "points") cfg.points = static_cast<int>(to_int(value));
  else if (key == "sets") cfg.sets = static_cast<int>(to_int(value));
  else if (key == "seed") cfg.seed = static_cast<unsigned long long>(to_int(value));
  else throw ConfigError("unknown config key: " + key);
}

void apply_config_text(std::istream& is, RunConfig& cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_config_value(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), cfg);
  }
}

Signal make_signal(const std::string& spec, const LogGrid& grid) {
  const auto [kind, args] = kind_and_args(spec);
  if (kind == "laguerre") {
    const auto v = numbers(args, 2, 2, "laguerre");
    if (v[0] < 0 || v[0] != std::floor(v[0]) || !(v[1] > -1.0))
      throw ConfigError("laguerre needs integer n >= 0 and alpha > 0");
    return laguerre_signal(grid, static_cast<int>(v[0]), v[1]);
  }
  if (kind == "log-gaussian") {
    const auto v = numbers(args, 2, 2, "log-gaussian");
    if (!(v[1] > 0.0)) throw ConfigError("log-gaussian needs sigma > 0");
    return log_gaussian_signal(grid, v[0], v[1]);
  }
  if (kind == "file") {
    std::ifstream is = open_input(args);
    return read_signal_csv(is, grid);
  }
  throw ConfigError("unknown signal kind: " + kind);
}

OperatorRep make_operator(const std::string& spec, const LogGrid& grid) {
  const auto [kind, args] = kind_and_args(spec);
  if (kind == "rank-one") {
    const auto parts = split(args, ';');
    if (parts.empty() || parts.size() > 2) throw ConfigError("rank-one needs one or two signals");
    const Signal psi = make_signal(parts[0], grid);
    return rank_one(psi, parts.size() == 2 ? make_signal(parts[1], grid) : psi);
  }
  if (kind == "laguerre-mix") {
    const auto at = args.find('@');
    double alpha = 1.0;
    std::string weights = args;
    if (at != std::string::npos) {
      const std::string opt = args.substr(at + 1);
      if (opt.rfind("alpha=", 0) != 0) throw ConfigError("laguerre-mix option must be alpha=A");
      alpha = to_double(opt.substr(6));
      weights = args.substr(0, at);
    }
    if (!(alpha > 0.0)) throw ConfigError("laguerre-mix needs alpha > 0");
    const auto w = numbers(weights, 1, 64, "laguerre-mix");
    return laguerre_mixture(grid, w, alpha);
  }
  if (kind == "file") {
    std::ifstream is = open_input(args);
    return read_operator_csv(is, grid);
  }
  throw ConfigError("unknown operator kind: " + kind);
}

AffFunction make_symbol(const std::string& spec, const AffGrid& grid) {
  const auto [kind, args] = kind_and_args(spec);
  if (kind == "gaussian") {
    const auto v = numbers(args, 4, 5, "gaussian");
    if (!(v[1] > 0.0) || !(v[3] > 0.0)) throw ConfigError("gaussian widths must be positive");
    return gaussian_symbol(grid, v[0], v[1], v[2], v[3], v.size() == 5 ? v[4] : 0.0);
  }
  if (kind == "box") {
    const auto v = numbers(args, 4, 4, "box");
    if (!(v[0] < v[1]) || !(v[2] < v[3])) throw ConfigError("box needs x0 < x1 and s0 < s1");
    return smoothed_box(grid, v[0], v[1], v[2], v[3]);
  }
  if (kind == "file") {
    std::ifstream is = open_input(args);
    return read_aff_csv(is, grid);
  }
  throw ConfigError("unknown symbol kind: " + kind);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, fn] : commands()) v.push_back(n);
    return v;
  }();
  return names;
}

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& log) {
  if (cfg.workers < 0) throw ConfigError("--workers must be non-negative");
  if (cfg.workers > 0) set_worker_count(cfg.workers);
  for (const auto& [n, fn] : commands())
    if (n == command) return fn(cfg, log);
  throw ConfigError("unknown command: " + command);
}

}  // namespace affqha::cli
