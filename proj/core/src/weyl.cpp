#include "affqha/weyl.hpp"

#include <vector>

#include "affqha/parallel.hpp"
#include "affqha/special.hpp"
#include "dft.hpp"

namespace affqha {

OperatorRep quantize(const AffFunction& f, const LogGrid& grid) {
  const AffGrid& ag = f.grid();
  const int n = grid.size();
  const int nm = 2 * n - 1;
  const double band = 0.5 / ag.dx();
  CMatrix K = CMatrix::Zero(n, n);
  parallel_for(nm, [&](int idx) {
    const int m = idx - (n - 1);
    const double u = m * grid.dt();
    if (std::abs(u) >= band) return;
    // G(s_i) = int f(x, e^{s_i}) e^{2 pi i x u} dx for every a-row.
    std::vector<cplx> g(static_cast<std::size_t>(ag.n_s()));
    const double xi[1] = {u};
    for (int i = 0; i < ag.n_s(); ++i) {
      const CVector col = f.values().col(i);
      g[static_cast<std::size_t>(i)] = detail::transform_from_x(col, xi, ag, 1.0, ag.dx())(0);
    }
    const double shift = m == 0 ? 0.0 : std::log(std::expm1(u) / u);
    const int k_lo = std::max(0, m);
    const int k_hi = std::min(n, n + m);
    for (int k = k_lo; k < k_hi; ++k) {
      const int l = k - m;
      const double s_star = grid.t(l) + shift;
      K(k, l) = cubic_eval(g, (s_star - ag.s_min()) / ag.ds());
    }
  });
  return OperatorRep(grid, std::move(K));
}

AffFunction dequantize(const OperatorRep& A, const AffGrid& grid) {
  const LogGrid& lg = A.grid();
  const int n = lg.size();
  const int nm = 2 * n - 1;
  std::vector<double> u(static_cast<std::size_t>(nm));
  std::vector<double> log_l(u.size());
  for (int idx = 0; idx < nm; ++idx) {
    const auto si = static_cast<std::size_t>(idx);
    u[si] = (idx - (n - 1)) * lg.dt();
    log_l[si] = std::log(lambda_eval(u[si]));
  }
  CMatrix out = CMatrix::Zero(grid.n_x(), grid.n_s());
  parallel_for(grid.n_s(), [&](int i) {
    std::vector<cplx> h(u.size());
    for (int idx = 0; idx < nm; ++idx) {
      const auto si = static_cast<std::size_t>(idx);
      h[si] = diagonal_at(A, idx - (n - 1), grid.s(i) + log_l[si]) * lg.dt();
    }
    CVector col = CVector::Zero(grid.n_x());
    detail::accumulate_to_x(h, u, grid, -1.0, col);
    out.col(i) = col;
  });
  return AffFunction(grid, std::move(out));
}

CVector spectral_derivative(const Signal& psi) {
  const LogGrid& g = psi.grid();
  const int n = g.size();
  std::vector<cplx> w(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) w[static_cast<std::size_t>(q)] = std::polar(1.0, -two_pi * q / n);
  CVector c = CVector::Zero(n);
  for (int q = 0; q < n; ++q) {
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += psi[k] * w[static_cast<std::size_t>((static_cast<long long>(q) * k) % n)];
    c(q) = acc;
  }
  const double period = n * g.dt();
  for (int q = 0; q < n; ++q) {
    int qq = q <= n / 2 ? q : q - n;
    if (n % 2 == 0 && q == n / 2) qq = 0;
    c(q) *= cplx(0.0, two_pi * qq / period);
  }
  CVector d(n);
  for (int k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (int q = 0; q < n; ++q)
      acc += c(q) * std::conj(w[static_cast<std::size_t>((static_cast<long long>(q) * k) % n)]);
    d(k) = acc / static_cast<double>(n);
  }
  return d;
}

Signal coordinate_quantize(Coordinate which, const Signal& psi) {
  const LogGrid& g = psi.grid();
  if (which == Coordinate::a) {
    CVector v = psi.values();
    for (int k = 0; k < g.size(); ++k) v(k) *= g.r(k);
    return Signal(g, std::move(v));
  }
  return Signal(g, spectral_derivative(psi) / cplx(0.0, two_pi));
}

}  // namespace affqha
