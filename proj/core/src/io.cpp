#include "affqha/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace affqha {

namespace {

template <std::size_t N>
std::array<double, N> parse_row(const std::string& line, std::size_t lineno) {
  std::array<double, N> out{};
  std::string_view rest(line);
  for (std::size_t c = 0; c < N; ++c) {
    const std::size_t comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    while (!field.empty() && (field.front() == ' ')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
    const auto res = std::from_chars(field.data(), field.data() + field.size(), out[c]);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size())
      throw ParseError("line " + std::to_string(lineno) + ": bad number '" + std::string(field) + "'");
    if (c + 1 < N) {
      if (comma == std::string_view::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(N) + " columns");
      rest.remove_prefix(comma + 1);
    } else if (comma != std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": too many columns");
    }
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<double, N>> read_table(std::istream& is, const std::string& header) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw ParseError("expected header '" + header + "'");
  std::vector<std::array<double, N>> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    rows.push_back(parse_row<N>(line, lineno));
  }
  return rows;
}

void check_node(double got, double want, const char* what) {
  if (std::abs(got - want) > 1e-12 * std::max(1.0, std::abs(want)))
    throw ParseError(std::string(what) + " node " + format_double(got) + " does not match grid");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_signal_csv(std::ostream& os, const Signal& psi) {
  os << "r,re,im\n";
  for (int k = 0; k < psi.size(); ++k)
    os << format_double(psi.grid().r(k)) << ',' << format_double(psi[k].real()) << ','
       << format_double(psi[k].imag()) << '\n';
}

Signal read_signal_csv(std::istream& is, const LogGrid& grid) {
  const auto rows = read_table<3>(is, "r,re,im");
  if (static_cast<int>(rows.size()) != grid.size())
    throw ParseError("signal has " + std::to_string(rows.size()) + " rows, grid has " +
                     std::to_string(grid.size()));
  CVector v(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const auto& row = rows[static_cast<std::size_t>(k)];
    check_node(row[0], grid.r(k), "r");
    v(k) = cplx(row[1], row[2]);
  }
  if (!v.allFinite()) throw ParseError("non-finite signal value");
  return Signal(grid, std::move(v));
}

void write_aff_csv(std::ostream& os, const AffFunction& f) {
  const AffGrid& g = f.grid();
  os << "x,a,re,im\n";
  for (int j = 0; j < g.n_x(); ++j)
    for (int i = 0; i < g.n_s(); ++i)
      os << format_double(g.x(j)) << ',' << format_double(g.a(i)) << ','
         << format_double(f(j, i).real()) << ',' << format_double(f(j, i).imag()) << '\n';
}

AffFunction read_aff_csv(std::istream& is, const AffGrid& g) {
  const auto rows = read_table<4>(is, "x,a,re,im");
  if (static_cast<long long>(rows.size()) != static_cast<long long>(g.n_x()) * g.n_s())
    throw ParseError("function row count does not match grid");
  CMatrix v(g.n_x(), g.n_s());
  std::size_t idx = 0;
  for (int j = 0; j < g.n_x(); ++j)
    for (int i = 0; i < g.n_s(); ++i) {
      const auto& row = rows[idx++];
      check_node(row[0], g.x(j), "x");
      check_node(row[1], g.a(i), "a");
      v(j, i) = cplx(row[2], row[3]);
    }
  if (!v.allFinite()) throw ParseError("non-finite function value");
  return AffFunction(g, std::move(v));
}

void write_operator_csv(std::ostream& os, const OperatorRep& S) {
  const LogGrid& g = S.grid();
  os << "r,s,re,im\n";
  for (int k = 0; k < g.size(); ++k)
    for (int l = 0; l < g.size(); ++l) {
      const cplx z = S.kernel()(k, l);
      os << format_double(g.r(k)) << ',' << format_double(g.r(l)) << ',' << format_double(z.real())
         << ',' << format_double(z.imag()) << '\n';
    }
}

OperatorRep read_operator_csv(std::istream& is, const LogGrid& g) {
  const auto rows = read_table<4>(is, "r,s,re,im");
  if (static_cast<long long>(rows.size()) != static_cast<long long>(g.size()) * g.size())
    throw ParseError("operator row count does not match grid");
  CMatrix K(g.size(), g.size());
  std::size_t idx = 0;
  for (int k = 0; k < g.size(); ++k)
    for (int l = 0; l < g.size(); ++l) {
      const auto& row = rows[idx++];
      check_node(row[0], g.r(k), "r");
      check_node(row[1], g.r(l), "s");
      K(k, l) = cplx(row[2], row[3]);
    }
  if (!K.allFinite()) throw ParseError("non-finite kernel value");
  return OperatorRep(g, std::move(K));
}

}  // namespace affqha
