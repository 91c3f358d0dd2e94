#include "affqha/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace affqha {

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  return {g.a() * h.x() + g.x(), g.a() * h.a()};
}

GroupElement group_inv(const GroupElement& g) { return {-g.x() / g.a(), 1.0 / g.a()}; }

OperatorRep::OperatorRep(LogGrid grid, CMatrix kernel)
    : grid_(std::move(grid)), kernel_(std::move(kernel)) {
  if (kernel_.rows() != grid_.size() || kernel_.cols() != grid_.size())
    throw std::invalid_argument("operator kernel shape does not match grid");
  if (!kernel_.allFinite()) throw std::invalid_argument("operator kernel has non-finite entries");
}

OperatorRep::OperatorRep(LogGrid grid)
    : grid_(std::move(grid)), kernel_(CMatrix::Zero(grid_.size(), grid_.size())) {}

namespace {

// psi(e^{t_k + shift}) for every node k.
CVector shifted_samples(const Signal& psi, double shift) {
  const LogGrid& g = psi.grid();
  const int n = g.size();
  CVector out = CVector::Zero(n);
  int m = 0;
  if (g.aligned_shift(shift, m)) {
    for (int k = 0; k < n; ++k) {
      const int src = k + m;
      if (src >= 0 && src < n) out(k) = psi[src];
    }
  } else {
    for (int k = 0; k < n; ++k) out(k) = interpolate_log(psi, g.t(k) + shift);
  }
  return out;
}

// Applies the cubic shift filter v(k) -> v(k - q) along one dimension.
CMatrix shift_rows(const CMatrix& K, double q) {
  const int n = static_cast<int>(K.rows());
  CMatrix out = CMatrix::Zero(K.rows(), K.cols());
  for (int k = 0; k < n; ++k) {
    const double p = k - q;
    if (p < 0.0 || p > n - 1) continue;
    const CubicStencil st = cubic_stencil(p);
    for (int o = 0; o < 4; ++o) {
      const int idx = st.base - 1 + o;
      if (idx >= 0 && idx < n && st.w[o] != 0.0) out.row(k) += st.w[o] * K.row(idx);
    }
  }
  return out;
}

}  // namespace

Signal apply_U(const GroupElement& g, const Signal& psi) {
  const LogGrid& grid = psi.grid();
  CVector v = shifted_samples(psi, std::log(g.a()));
  for (int k = 0; k < grid.size(); ++k) v(k) *= std::polar(1.0, two_pi * g.x() * grid.r(k));
  return Signal(grid, std::move(v));
}

Signal apply_U_adjoint(const GroupElement& g, const Signal& psi) {
  const LogGrid& grid = psi.grid();
  CVector v = shifted_samples(psi, -std::log(g.a()));
  for (int k = 0; k < grid.size(); ++k)
    v(k) *= std::polar(1.0, -two_pi * g.x() * grid.r(k) / g.a());
  return Signal(grid, std::move(v));
}

CMatrix dilate_kernel(const CMatrix& K, const LogGrid& grid, double log_a) {
  const int n = grid.size();
  int m = 0;
  if (grid.aligned_shift(log_a, m)) {
    CMatrix D = CMatrix::Zero(n, n);
    const int len = n - std::abs(m);
    if (len <= 0) return D;
    if (m >= 0)
      D.block(m, m, len, len) = K.block(0, 0, len, len);
    else
      D.block(0, 0, len, len) = K.block(-m, -m, len, len);
    return D;
  }
  const double q = log_a / grid.dt();
  CMatrix rows = shift_rows(K, q);
  return shift_rows(rows.transpose(), q).transpose();
}

OperatorRep conjugate_by_U(const OperatorRep& S, const GroupElement& g) {
  const LogGrid& grid = S.grid();
  CMatrix D = dilate_kernel(S.kernel(), grid, std::log(g.a()));
  CVector e(grid.size());
  for (int k = 0; k < grid.size(); ++k) e(k) = std::polar(1.0, two_pi * g.x() * grid.r(k) / g.a());
  D = e.asDiagonal() * D * e.conjugate().asDiagonal();
  return OperatorRep(grid, std::move(D));
}

Signal duflo_apply(const Signal& psi, DufloPower power) {
  const LogGrid& g = psi.grid();
  const double p = 0.5 * static_cast<int>(power);
  CVector v = psi.values();
  for (int k = 0; k < g.size(); ++k) v(k) *= std::exp(p * g.t(k));
  return Signal(g, std::move(v));
}

OperatorRep duflo_sandwich(const OperatorRep& S, DufloPower power) {
  const LogGrid& g = S.grid();
  const double p = 0.5 * static_cast<int>(power);
  Eigen::VectorXd w(g.size());
  for (int k = 0; k < g.size(); ++k) w(k) = std::exp(p * g.t(k));
  CMatrix K = w.asDiagonal() * S.kernel() * w.asDiagonal();
  return OperatorRep(g, std::move(K));
}

OperatorRep rank_one(const Signal& psi, const Signal& phi) {
  require_same(psi.grid(), phi.grid());
  return OperatorRep(psi.grid(), psi.values() * phi.values().adjoint());
}

Signal apply(const OperatorRep& S, const Signal& psi) {
  require_same(S.grid(), psi.grid());
  return Signal(psi.grid(), S.kernel() * psi.values() * S.grid().dt());
}

OperatorRep compose(const OperatorRep& S, const OperatorRep& T) {
  require_same(S.grid(), T.grid());
  return OperatorRep(S.grid(), S.kernel() * T.kernel() * S.grid().dt());
}

OperatorRep adjoint(const OperatorRep& S) { return OperatorRep(S.grid(), S.kernel().adjoint()); }

cplx trace(const OperatorRep& S) { return S.kernel().diagonal().sum() * S.grid().dt(); }

cplx hs_inner(const OperatorRep& S, const OperatorRep& T) {
  require_same(S.grid(), T.grid());
  const double dt = S.grid().dt();
  return T.kernel().cwiseProduct(S.kernel().conjugate()).sum() * dt * dt;
}

double hs_norm(const OperatorRep& S) { return S.kernel().norm() * S.grid().dt(); }

Eigen::VectorXd singular_values(const OperatorRep& S) {
  const CMatrix M = S.matrix();
  const double scale = M.norm();
  if (scale == 0.0) return Eigen::VectorXd::Zero(M.rows());
  if ((M - M.adjoint()).norm() <= 1e-14 * scale) {
    const CMatrix H = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
    Eigen::VectorXd sv = es.eigenvalues().cwiseAbs();
    std::sort(sv.data(), sv.data() + sv.size(), std::greater<>());
    return sv;
  }
  Eigen::BDCSVD<CMatrix> svd(M);
  return svd.singularValues();
}

double trace_norm(const OperatorRep& S) { return singular_values(S).sum(); }

double op_norm(const OperatorRep& S) {
  const Eigen::VectorXd sv = singular_values(S);
  return sv.size() > 0 ? sv.maxCoeff() : 0.0;
}

HermitianSpectrum hermitian_spectrum(const OperatorRep& S) {
  const CMatrix M = S.matrix();
  HermitianSpectrum out;
  const double scale = M.norm();
  out.asymmetry = scale > 0.0 ? (M - M.adjoint()).norm() / scale : 0.0;
  const CMatrix H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors() / std::sqrt(S.grid().dt());
  return out;
}

cplx kernel_at(const OperatorRep& S, double t1, double t2) {
  const LogGrid& g = S.grid();
  const int n = g.size();
  const double p1 = (t1 - g.t_min()) / g.dt();
  const double p2 = (t2 - g.t_min()) / g.dt();
  if (!(p1 >= 0.0) || p1 > n - 1 || !(p2 >= 0.0) || p2 > n - 1) return 0.0;
  const CubicStencil s1 = cubic_stencil(p1);
  const CubicStencil s2 = cubic_stencil(p2);
  cplx out = 0.0;
  for (int a = 0; a < 4; ++a) {
    const int k = s1.base - 1 + a;
    if (k < 0 || k >= n || s1.w[a] == 0.0) continue;
    cplx row = 0.0;
    for (int b = 0; b < 4; ++b) {
      const int l = s2.base - 1 + b;
      if (l >= 0 && l < n) row += s2.w[b] * S.kernel()(k, l);
    }
    out += s1.w[a] * row;
  }
  return out;
}

cplx diagonal_at(const OperatorRep& S, int m, double t) {
  const LogGrid& g = S.grid();
  const int n = g.size();
  const int k_lo = std::max(0, m);
  const int k_hi = std::min(n, n + m);  // exclusive
  if (k_hi <= k_lo) return 0.0;
  const double p = (t - g.t_min()) / g.dt();
  if (!(p >= k_lo) || p > k_hi - 1) return 0.0;
  const CubicStencil st = cubic_stencil(p);
  cplx out = 0.0;
  for (int o = 0; o < 4; ++o) {
    const int k = st.base - 1 + o;
    if (k >= k_lo && k < k_hi && st.w[o] != 0.0) out += st.w[o] * S.kernel()(k, k - m);
  }
  return out;
}

}  // namespace affqha
