#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace affqha {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Uniform grid in t = log r. The Haar weight dr/r becomes the constant dt.
class LogGrid {
 public:
  LogGrid(double t_min, double t_max, int n);

  [[nodiscard]] double t_min() const noexcept { return t_min_; }
  [[nodiscard]] double t_max() const noexcept { return t_max_; }
  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] double t(int k) const noexcept { return t_min_ + k * dt_; }
  [[nodiscard]] double r(int k) const noexcept { return r_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] std::span<const double> nodes() const noexcept { return r_; }

  // Index m with log a == m * dt, if log a is (numerically) a multiple of dt.
  [[nodiscard]] bool aligned_shift(double log_a, int& m) const noexcept;

  friend bool operator==(const LogGrid& a, const LogGrid& b) noexcept {
    return a.t_min_ == b.t_min_ && a.t_max_ == b.t_max_ && a.n_ == b.n_;
  }

 private:
  double t_min_;
  double t_max_;
  int n_;
  double dt_;
  std::vector<double> r_;
};

// x-axis is uniform and symmetric about 0; a-axis is uniform in s = log a.
class AffGrid {
 public:
  AffGrid(double x_extent, int n_x, double s_min, double s_max, int n_s);

  [[nodiscard]] double x_extent() const noexcept { return x_extent_; }
  [[nodiscard]] int n_x() const noexcept { return n_x_; }
  [[nodiscard]] double s_min() const noexcept { return s_min_; }
  [[nodiscard]] double s_max() const noexcept { return s_max_; }
  [[nodiscard]] int n_s() const noexcept { return n_s_; }
  [[nodiscard]] double dx() const noexcept { return dx_; }
  [[nodiscard]] double ds() const noexcept { return ds_; }
  [[nodiscard]] double x(int j) const noexcept {
    return static_cast<double>(2 * j - (n_x_ - 1)) * half_dx_;
  }
  [[nodiscard]] double s(int i) const noexcept { return s_min_ + i * ds_; }
  [[nodiscard]] double a(int i) const noexcept { return a_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] double right_weight() const noexcept { return dx_ * ds_; }
  [[nodiscard]] double left_weight(int i) const noexcept { return dx_ * ds_ / a(i); }

  friend bool operator==(const AffGrid& p, const AffGrid& q) noexcept {
    return p.x_extent_ == q.x_extent_ && p.n_x_ == q.n_x_ && p.s_min_ == q.s_min_ &&
           p.s_max_ == q.s_max_ && p.n_s_ == q.n_s_;
  }

 private:
  double x_extent_;
  int n_x_;
  double s_min_;
  double s_max_;
  int n_s_;
  double dx_;
  double half_dx_;
  double ds_;
  std::vector<double> a_;
};

// A sampled element of L^2(R_+).
class Signal {
 public:
  Signal(LogGrid grid, CVector values);
  explicit Signal(LogGrid grid);  // zero signal

  static Signal sample(const LogGrid& grid, const std::function<cplx(double)>& fn);

  [[nodiscard]] const LogGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const CVector& values() const noexcept { return values_; }
  [[nodiscard]] CVector& values() noexcept { return values_; }
  [[nodiscard]] cplx operator[](int k) const noexcept { return values_(k); }
  [[nodiscard]] int size() const noexcept { return grid_.size(); }

 private:
  LogGrid grid_;
  CVector values_;
};

// Samples of f: Aff -> C, stored as an n_x by n_s matrix (column i is the a_i row).
class AffFunction {
 public:
  AffFunction(AffGrid grid, CMatrix values);
  explicit AffFunction(AffGrid grid);  // zero function

  static AffFunction sample(const AffGrid& grid, const std::function<cplx(double, double)>& fn);

  [[nodiscard]] const AffGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const CMatrix& values() const noexcept { return values_; }
  [[nodiscard]] CMatrix& values() noexcept { return values_; }
  [[nodiscard]] cplx operator()(int j, int i) const noexcept { return values_(j, i); }

 private:
  AffGrid grid_;
  CMatrix values_;
};

enum class Measure { right, left };

struct GridSpec {
  double t_min = -10.0;
  double t_max = 5.0;
  int n = 511;
  double x_extent = 4.0;
  int n_x = 257;
  double s_min = -96.0 / 17.0;
  double s_max = 96.0 / 17.0;
  int n_s = 193;
};

std::pair<LogGrid, AffGrid> make_grids(double t_min, double t_max, int n, double x_extent, int n_x,
                                       double s_min, double s_max, int n_s);
std::pair<LogGrid, AffGrid> make_grids(const GridSpec& spec);

// AffGrid whose s-nodes are integer multiples of stride * dt, symmetric about s = 0.
AffGrid aligned_aff_grid(const LogGrid& grid, double x_extent, int n_x, double s_extent,
                         int stride = 2);

cplx inner_product(const Signal& psi, const Signal& phi);
double norm(const Signal& psi);
cplx integrate(const AffFunction& f, Measure measure);
double l2_norm(const AffFunction& f, Measure measure = Measure::right);
cplx l2_inner(const AffFunction& f, const AffFunction& g, Measure measure = Measure::right);

// Cubic interpolation in t = log r with zero extension outside [t_min, t_max].
cplx interpolate(const Signal& psi, double r);
cplx interpolate_log(const Signal& psi, double t);

// Bicubic interpolation of f at (x, e^s) in the (x, log a) coordinates, zero outside.
cplx interpolate(const AffFunction& f, double x, double s);

// Four-point Lagrange weights on offsets -1, 0, 1, 2 for fractional position f in [0, 1).
struct CubicStencil {
  int base = 0;
  double w[4] = {0.0, 0.0, 0.0, 0.0};
};
CubicStencil cubic_stencil(double position);

// Evaluates the stencil on samples v[0..n-1], zero outside; 0 if position is outside [0, n-1].
cplx cubic_eval(std::span<const cplx> v, double position);

void require_same(const LogGrid& a, const LogGrid& b);
void require_same(const AffGrid& a, const AffGrid& b);

}  // namespace affqha
