#include "affqha/wigner.hpp"

#include <stdexcept>
#include <vector>

#include "affqha/parallel.hpp"
#include "affqha/special.hpp"
#include "dft.hpp"

namespace affqha {

WignerResult affine_wigner(const Signal& psi, const Signal& phi, const AffGrid& grid, UGrid u) {
  require_same(psi.grid(), phi.grid());
  if (u.count < 2 || !(u.extent > 0.0)) throw std::invalid_argument("invalid u-grid");
  const int nu = u.count;
  const double half = u.extent / (nu - 1);
  const double du = 2.0 * half;
  std::vector<double> uu(static_cast<std::size_t>(nu));
  std::vector<double> log_lp(uu.size());
  std::vector<double> log_lm(uu.size());
  for (int m = 0; m < nu; ++m) {
    const auto sm = static_cast<std::size_t>(m);
    uu[sm] = static_cast<double>(2 * m - (nu - 1)) * half;
    log_lp[sm] = std::log(lambda_eval(uu[sm]));
    log_lm[sm] = std::log(lambda_eval(-uu[sm]));
  }
  CMatrix out = CMatrix::Zero(grid.n_x(), grid.n_s());
  parallel_for(grid.n_s(), [&](int i) {
    const double s = grid.s(i);
    std::vector<cplx> h(uu.size());
    for (std::size_t m = 0; m < uu.size(); ++m) {
      const cplx a = interpolate_log(psi, s + log_lp[m]);
      h[m] = a == cplx(0.0) ? cplx(0.0) : a * std::conj(interpolate_log(phi, s + log_lm[m])) * du;
    }
    CVector col = CVector::Zero(grid.n_x());
    detail::accumulate_to_x(h, uu, grid, -1.0, col);
    out.col(i) = col;
  });
  return {AffFunction(grid, std::move(out)), u};
}

namespace {

// L (1 - e^L) / (1 + L - e^L), equal to 2 at L = 0.
double royer_factor(double L) {
  if (std::abs(L) < 0.5) {
    // expm1(L)/L and (e^L - 1 - L)/L^2 by their Taylor series.
    double e1 = 1.0, g = 0.5, term = 1.0;
    for (int k = 1; k < 30; ++k) {
      term *= L / (k + 1);  // L^k / (k+1)!
      e1 += term;
      g += term / (k + 2);  // L^k / (k+2)!
    }
    return e1 / g;
  }
  const double em = std::expm1(L);
  return L * em / (em - L);
}

}  // namespace

Signal grossmann_royer_apply(const GroupElement& g, const Signal& psi) {
  const LogGrid& grid = psi.grid();
  CVector v(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    const double L = lambda_inverse(grid.r(k) / g.a());
    v(k) = std::polar(royer_factor(L), two_pi * g.x() * L) * interpolate_log(psi, grid.t(k) - L);
  }
  return Signal(grid, std::move(v));
}

Signal parity_apply(const Signal& psi) { return grossmann_royer_apply(GroupElement::identity(), psi); }

AffFunction wavelet_coeff(const Signal& psi, const Signal& phi, const AffGrid& grid) {
  require_same(psi.grid(), phi.grid());
  const LogGrid& lg = psi.grid();
  const int n = lg.size();
  CMatrix out = CMatrix::Zero(grid.n_x(), grid.n_s());
  parallel_for(grid.n_s(), [&](int i) {
    const double a = grid.a(i);
    // U(-x,a)^* phi (r) = e^{2 pi i x r / a} phi(r / a); only the dilation enters c.
    const Signal dil = apply_U_adjoint(GroupElement(0.0, a), phi);
    std::vector<cplx> c(static_cast<std::size_t>(n));
    std::vector<double> nu(c.size());
    for (int k = 0; k < n; ++k) {
      const auto sk = static_cast<std::size_t>(k);
      c[sk] = psi[k] * std::conj(dil[k]) * lg.dt();
      nu[sk] = lg.r(k) / a;
    }
    CVector col = CVector::Zero(grid.n_x());
    detail::accumulate_to_x(c, nu, grid, -1.0, col);
    out.col(i) = col;
  });
  return AffFunction(grid, std::move(out));
}

AffFunction scalogram(const Signal& psi, const Signal& phi, const AffGrid& grid) {
  const AffFunction v = wavelet_coeff(phi, psi, grid);
  CMatrix out(grid.n_x(), grid.n_s());
  for (int i = 0; i < grid.n_s(); ++i)
    for (int j = 0; j < grid.n_x(); ++j)
      out(j, i) = grid.a(i) * std::norm(v(grid.n_x() - 1 - j, i));
  return AffFunction(grid, std::move(out));
}

}  // namespace affqha
