#include "affqha/fixtures.hpp"

#include "affqha/special.hpp"

namespace affqha {

Signal laguerre_signal(const LogGrid& grid, int n, double alpha) {
  return Signal::sample(grid, [=](double r) { return cplx(laguerre_fn(n, alpha, r)); });
}

Signal log_gaussian_signal(const LogGrid& grid, double mu, double sigma) {
  return Signal::sample(grid, [=](double r) { return cplx(log_gaussian(r, mu, sigma)); });
}

AffFunction gaussian_symbol(const AffGrid& grid, double x0, double sx, double s0, double ss,
                            double freq) {
  return AffFunction::sample(grid, [=](double x, double a) {
    const double s = std::log(a);
    const double e = -(x - x0) * (x - x0) / (2 * sx * sx) - (s - s0) * (s - s0) / (2 * ss * ss);
    return std::polar(std::exp(e), two_pi * freq * x);
  });
}

OperatorRep laguerre_mixture(const LogGrid& grid, std::span<const double> weights, double alpha) {
  CMatrix K = CMatrix::Zero(grid.size(), grid.size());
  for (std::size_t n = 0; n < weights.size(); ++n) {
    const Signal v = laguerre_signal(grid, static_cast<int>(n), alpha);
    K += weights[n] * v.values() * v.values().adjoint();
  }
  return OperatorRep(grid, std::move(K));
}

}  // namespace affqha
