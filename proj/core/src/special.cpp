#include "affqha/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace affqha {

namespace {

constexpr double inv_e = 1.0 / std::numbers::e;

double halley(double w, double y) {
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - y;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double d = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / d;
    w -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambda_eval(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 + u / 2.0 + u2 / 12.0 - u2 * u2 / 720.0;
  }
  return u / -std::expm1(-u);
}

double lambda_derivative(double u) {
  if (std::abs(u) < 1e-4) return 0.5 + u / 6.0 - u * u * u / 180.0;
  const double em = std::expm1(u);
  return std::exp(u) * (em - u) / (em * em);
}

double lambert_w(WBranch branch, double y) {
  if (!std::isfinite(y)) throw std::domain_error("lambert_w needs finite y");
  if (y < -inv_e) {
    // Allow the rounding of -1/e itself.
    if (y < -inv_e * (1.0 + 1e-15)) throw std::domain_error("lambert_w needs y >= -1/e");
    y = -inv_e;
  }
  const double p2 = 2.0 * (std::numbers::e * y + 1.0);
  const double p = std::sqrt(std::max(0.0, p2));
  if (branch == WBranch::principal) {
    if (y == 0.0) return 0.0;
    double w;
    if (p < 1e-4) return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    if (y < -0.25) {
      w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (y < 3.0) {
      w = std::log1p(y);
      if (std::abs(y) < 0.1) w = y - y * y + 1.5 * y * y * y;
    } else {
      const double l1 = std::log(y);
      const double l2 = std::log(l1);
      w = l1 - l2 + l2 / l1;
    }
    return halley(w, y);
  }
  if (y >= 0.0) throw std::domain_error("lower branch needs -1/e <= y < 0");
  if (p < 1e-4) return -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p;
  double w;
  if (y < -0.25) {
    w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p;
  } else {
    const double l1 = std::log(-y);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  return halley(w, y);
}

double sigma_eval(double x) {
  if (!(x < 0.0)) throw std::domain_error("sigma needs x < 0");
  if (x == -1.0) return -1.0;
  const double y = x * std::exp(x);
  return x > -1.0 ? lambert_w(WBranch::lower, y) : lambert_w(WBranch::principal, y);
}

double lambda_inverse(double r) {
  if (!(r > 0.0)) throw std::domain_error("lambda_inverse needs r > 0");
  double u = sigma_eval(-r) + r;
  u -= (lambda_eval(u) - r) / lambda_derivative(u);
  return u;
}

double laguerre_poly(int n, double alpha, double r) {
  if (n < 0) throw std::invalid_argument("Laguerre degree must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - r;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - r) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_fn(int n, double alpha, double r) {
  if (n < 0) throw std::invalid_argument("Laguerre degree must be >= 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("Laguerre alpha must be > 0");
  if (!(r > 0.0)) throw std::domain_error("Laguerre function needs r > 0");
  const double log_norm = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + alpha + 1.0));
  const double log_env = 0.5 * (alpha + 1.0) * std::log(r) - 0.5 * r;
  return std::exp(log_norm + log_env) * laguerre_poly(n, alpha, r);
}

double log_gaussian(double r, double mu, double sigma) {
  const double t = std::log(r) - mu;
  return std::exp(-t * t / (2.0 * sigma * sigma)) / std::sqrt(std::sqrt(std::numbers::pi) * sigma);
}

}  // namespace affqha
