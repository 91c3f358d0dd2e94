#include "affqha/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace affqha {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

LogGrid::LogGrid(double t_min, double t_max, int n) : t_min_(t_min), t_max_(t_max), n_(n) {
  require_finite(t_min, "t_min");
  require_finite(t_max, "t_max");
  if (n < 2) throw std::invalid_argument("LogGrid needs n >= 2");
  if (!(t_min < t_max)) throw std::invalid_argument("LogGrid needs t_min < t_max");
  dt_ = (t_max - t_min) / (n - 1);
  r_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) r_[static_cast<std::size_t>(k)] = std::exp(t(k));
}

bool LogGrid::aligned_shift(double log_a, int& m) const noexcept {
  const double q = log_a / dt_;
  const double rq = std::round(q);
  if (std::abs(q - rq) > 1e-9) return false;
  m = static_cast<int>(rq);
  return true;
}

AffGrid::AffGrid(double x_extent, int n_x, double s_min, double s_max, int n_s)
    : x_extent_(x_extent), n_x_(n_x), s_min_(s_min), s_max_(s_max), n_s_(n_s) {
  require_finite(x_extent, "x_extent");
  require_finite(s_min, "s_min");
  require_finite(s_max, "s_max");
  if (n_x < 2 || n_s < 2) throw std::invalid_argument("AffGrid needs n_x, n_s >= 2");
  if (!(x_extent > 0)) throw std::invalid_argument("AffGrid needs x_extent > 0");
  if (!(s_min < s_max)) throw std::invalid_argument("AffGrid needs s_min < s_max");
  dx_ = 2.0 * x_extent / (n_x - 1);
  half_dx_ = x_extent / (n_x - 1);
  ds_ = (s_max - s_min) / (n_s - 1);
  a_.resize(static_cast<std::size_t>(n_s));
  for (int i = 0; i < n_s; ++i) a_[static_cast<std::size_t>(i)] = std::exp(s(i));
}

Signal::Signal(LogGrid grid, CVector values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw std::invalid_argument("Signal length does not match grid");
  if (!values_.allFinite()) throw std::invalid_argument("Signal has non-finite entries");
}

Signal::Signal(LogGrid grid) : grid_(std::move(grid)), values_(CVector::Zero(grid_.size())) {}

Signal Signal::sample(const LogGrid& grid, const std::function<cplx(double)>& fn) {
  CVector v(grid.size());
  for (int k = 0; k < grid.size(); ++k) v(k) = fn(grid.r(k));
  return Signal(grid, std::move(v));
}

AffFunction::AffFunction(AffGrid grid, CMatrix values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.rows() != grid_.n_x() || values_.cols() != grid_.n_s())
    throw std::invalid_argument("AffFunction shape does not match grid");
  if (!values_.allFinite()) throw std::invalid_argument("AffFunction has non-finite entries");
}

AffFunction::AffFunction(AffGrid grid)
    : grid_(std::move(grid)), values_(CMatrix::Zero(grid_.n_x(), grid_.n_s())) {}

AffFunction AffFunction::sample(const AffGrid& grid,
                                const std::function<cplx(double, double)>& fn) {
  CMatrix v(grid.n_x(), grid.n_s());
  for (int i = 0; i < grid.n_s(); ++i)
    for (int j = 0; j < grid.n_x(); ++j) v(j, i) = fn(grid.x(j), grid.a(i));
  return AffFunction(grid, std::move(v));
}

std::pair<LogGrid, AffGrid> make_grids(double t_min, double t_max, int n, double x_extent, int n_x,
                                       double s_min, double s_max, int n_s) {
  return {LogGrid(t_min, t_max, n), AffGrid(x_extent, n_x, s_min, s_max, n_s)};
}

std::pair<LogGrid, AffGrid> make_grids(const GridSpec& g) {
  return make_grids(g.t_min, g.t_max, g.n, g.x_extent, g.n_x, g.s_min, g.s_max, g.n_s);
}

AffGrid aligned_aff_grid(const LogGrid& grid, double x_extent, int n_x, double s_extent,
                         int stride) {
  if (stride < 1) throw std::invalid_argument("stride must be positive");
  const double ds = stride * grid.dt();
  const int half = std::max(1, static_cast<int>(std::lround(s_extent / ds)));
  return AffGrid(x_extent, n_x, -half * ds, half * ds, 2 * half + 1);
}

void require_same(const LogGrid& a, const LogGrid& b) {
  if (!(a == b)) throw std::invalid_argument("log grid mismatch");
}

void require_same(const AffGrid& a, const AffGrid& b) {
  if (!(a == b)) throw std::invalid_argument("affine grid mismatch");
}

cplx inner_product(const Signal& psi, const Signal& phi) {
  require_same(psi.grid(), phi.grid());
  return phi.values().dot(psi.values()) * psi.grid().dt();
}

double norm(const Signal& psi) { return psi.values().norm() * std::sqrt(psi.grid().dt()); }

cplx integrate(const AffFunction& f, Measure measure) {
  const AffGrid& g = f.grid();
  cplx total = 0.0;
  for (int i = 0; i < g.n_s(); ++i) {
    const double w = measure == Measure::right ? g.right_weight() : g.left_weight(i);
    total += f.values().col(i).sum() * w;
  }
  return total;
}

cplx l2_inner(const AffFunction& f, const AffFunction& h, Measure measure) {
  require_same(f.grid(), h.grid());
  const AffGrid& g = f.grid();
  cplx total = 0.0;
  for (int i = 0; i < g.n_s(); ++i) {
    const double w = measure == Measure::right ? g.right_weight() : g.left_weight(i);
    total += h.values().col(i).dot(f.values().col(i)) * w;
  }
  return total;
}

double l2_norm(const AffFunction& f, Measure measure) {
  return std::sqrt(std::max(0.0, l2_inner(f, f, measure).real()));
}

CubicStencil cubic_stencil(double p) {
  CubicStencil st;
  const double fl = std::floor(p);
  st.base = static_cast<int>(fl);
  const double f = p - fl;
  st.w[0] = -f * (f - 1.0) * (f - 2.0) / 6.0;
  st.w[1] = (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0;
  st.w[2] = -(f + 1.0) * f * (f - 2.0) / 2.0;
  st.w[3] = (f + 1.0) * f * (f - 1.0) / 6.0;
  return st;
}

cplx cubic_eval(std::span<const cplx> v, double p) {
  const int n = static_cast<int>(v.size());
  if (!(p >= 0.0) || p > n - 1) return 0.0;
  const CubicStencil st = cubic_stencil(p);
  cplx out = 0.0;
  for (int o = 0; o < 4; ++o) {
    const int idx = st.base - 1 + o;
    if (idx >= 0 && idx < n) out += st.w[o] * v[static_cast<std::size_t>(idx)];
  }
  return out;
}

cplx interpolate_log(const Signal& psi, double t) {
  const LogGrid& g = psi.grid();
  const double p = (t - g.t_min()) / g.dt();
  return cubic_eval(std::span<const cplx>(psi.values().data(), static_cast<std::size_t>(g.size())), p);
}

cplx interpolate(const AffFunction& f, double x, double s) {
  const AffGrid& g = f.grid();
  const double px = (x - g.x(0)) / g.dx();
  const double ps = (s - g.s_min()) / g.ds();
  if (!(px >= 0.0) || px > g.n_x() - 1 || !(ps >= 0.0) || ps > g.n_s() - 1) return 0.0;
  const CubicStencil sx = cubic_stencil(px);
  const CubicStencil ss = cubic_stencil(ps);
  cplx out = 0.0;
  for (int b = 0; b < 4; ++b) {
    const int i = ss.base - 1 + b;
    if (i < 0 || i >= g.n_s() || ss.w[b] == 0.0) continue;
    cplx acc = 0.0;
    for (int a = 0; a < 4; ++a) {
      const int j = sx.base - 1 + a;
      if (j >= 0 && j < g.n_x()) acc += sx.w[a] * f(j, i);
    }
    out += ss.w[b] * acc;
  }
  return out;
}

cplx interpolate(const Signal& psi, double r) {
  if (!(r > 0)) throw std::domain_error("interpolate needs r > 0");
  return interpolate_log(psi, std::log(r));
}

}  // namespace affqha
