#include "affqha/fourier.hpp"

#include <random>
#include <stdexcept>

#include "affqha/parallel.hpp"
#include "affqha/special.hpp"
#include "dft.hpp"

namespace affqha {

namespace {

double band_end(const AffGrid& g) { return 0.875 / g.dx(); }

// K(e^{t + log_a}, e^t).
cplx kernel_on_shift(const OperatorRep& A, bool aligned, int m, double log_a, double t) {
  return aligned ? diagonal_at(A, m, t + log_a) : kernel_at(A, t + log_a, t);
}

}  // namespace

FourierWignerInverse fw_inverse(const AffFunction& f, const LogGrid& lg) {
  const AffGrid& ag = f.grid();
  const int n = lg.size();
  const double hi = band_end(ag);
  CMatrix K = CMatrix::Zero(n, n);
  parallel_for(n, [&](int l) {
    const double xi = lg.r(l);
    if (xi >= hi) return;
    const double freq[1] = {xi};
    std::vector<cplx> col(static_cast<std::size_t>(ag.n_s()));
    for (int i = 0; i < ag.n_s(); ++i) {
      const CVector fi = f.values().col(i);
      col[static_cast<std::size_t>(i)] = detail::transform_from_x(fi, freq, ag, -1.0, ag.dx())(0);
    }
    const double sq = std::sqrt(xi);
    for (int k = 0; k < n; ++k)
      K(k, l) = sq * cubic_eval(col, (lg.t(k) - lg.t(l) - ag.s_min()) / ag.ds());
  });
  OperatorRep op(lg, std::move(K));
  const double fn = l2_norm(f);
  const double kn = hs_norm(op);
  return {std::move(op), fn * fn - kn * kn};
}

AffFunction fw_forward(const OperatorRep& A, const AffGrid& grid) {
  const LogGrid& lg = A.grid();
  const double dr = 1.0 / (8.0 * grid.x_extent());
  const int nq = static_cast<int>(std::ceil(band_end(grid) / dr)) - 1;
  std::vector<double> rr(static_cast<std::size_t>(nq));
  for (int q = 0; q < nq; ++q) rr[static_cast<std::size_t>(q)] = (q + 1) * dr;
  CMatrix out = CMatrix::Zero(grid.n_x(), grid.n_s());
  parallel_for(grid.n_s(), [&](int i) {
    const double s = grid.s(i);
    int m = 0;
    const bool aligned = lg.aligned_shift(s, m);
    std::vector<cplx> c(rr.size());
    for (std::size_t q = 0; q < rr.size(); ++q)
      c[q] = kernel_on_shift(A, aligned, m, s, std::log(rr[q])) / std::sqrt(rr[q]) * dr;
    CVector col = CVector::Zero(grid.n_x());
    detail::accumulate_to_x(c, rr, grid, 1.0, col);
    out.col(i) = col;
  });
  return AffFunction(grid, std::move(out));
}

cplx fw_trace(const OperatorRep& A, const GroupElement& g) {
  const LogGrid& lg = A.grid();
  const double la = std::log(g.a());
  int m = 0;
  const bool aligned = lg.aligned_shift(la, m);
  cplx acc = 0.0;
  for (int l = 0; l < lg.size(); ++l)
    acc += kernel_on_shift(A, aligned, m, la, lg.t(l)) *
           std::polar(std::sqrt(lg.r(l)), two_pi * g.x() * lg.r(l));
  return acc * lg.dt();
}

cplx bochner_function(const OperatorRep& A, const GroupElement& g) {
  const LogGrid& lg = A.grid();
  const double la = std::log(g.a());
  int m = 0;
  const bool aligned = lg.aligned_shift(la, m);
  cplx acc = 0.0;
  for (int l = 0; l < lg.size(); ++l)
    acc += kernel_on_shift(A, aligned, m, la, lg.t(l)) * std::polar(1.0, two_pi * g.x() * lg.r(l));
  return acc * lg.dt();
}

AffFunction fko(const AffFunction& f) {
  const AffGrid& g = f.grid();
  const int ns = g.n_s();
  const double hi = band_end(g);
  std::vector<double> u(static_cast<std::size_t>(ns));
  std::vector<double> lm(u.size());
  for (int i = 0; i < ns; ++i) {
    u[static_cast<std::size_t>(i)] = g.s(i);
    lm[static_cast<std::size_t>(i)] = lambda_eval(-g.s(i));
  }
  CMatrix out = CMatrix::Zero(g.n_x(), ns);
  parallel_for(ns, [&](int i) {
    const double a = g.a(i);
    std::vector<cplx> c(u.size());
    for (int ip = 0; ip < ns; ++ip) {
      const auto sp = static_cast<std::size_t>(ip);
      const double xi = a * lm[sp];
      if (xi >= hi) continue;
      const double freq[1] = {xi};
      const CVector col = f.values().col(ip);
      const cplx v = detail::transform_from_x(col, freq, g, -1.0, g.dx())(0);
      c[sp] = std::sqrt(a * lm[sp]) * v * g.ds();
    }
    CVector col = CVector::Zero(g.n_x());
    detail::accumulate_to_x(c, u, g, -1.0, col);
    out.col(i) = col;
  });
  return AffFunction(g, std::move(out));
}

PositiveTypeReport positive_type_test(const OperatorRep& A, std::span<const GroupElement> points) {
  if (points.empty()) throw std::invalid_argument("positive_type_test needs at least one point");
  const auto np = static_cast<Eigen::Index>(points.size());
  PositiveTypeReport rep;
  rep.points.assign(points.begin(), points.end());
  rep.gram.resize(np, np);
  for (Eigen::Index i = 0; i < np; ++i)
    for (Eigen::Index j = 0; j < np; ++j)
      rep.gram(i, j) = bochner_function(
          A, group_mul(group_inv(points[static_cast<std::size_t>(i)]), points[static_cast<std::size_t>(j)]));
  const CMatrix H = 0.5 * (rep.gram + rep.gram.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  rep.eigenvalues = es.eigenvalues();
  rep.min_eigenvalue = rep.eigenvalues.minCoeff();
  return rep;
}

std::vector<GroupElement> random_aligned_points(const LogGrid& grid, int count, std::uint64_t seed,
                                                double x_range, int m_range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-x_range, x_range);
  std::uniform_int_distribution<int> um(-m_range, m_range);
  std::vector<GroupElement> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    const double x = ux(rng);
    const int m = um(rng);
    pts.emplace_back(x, std::exp(m * grid.dt()));
  }
  return pts;
}

}  // namespace affqha
