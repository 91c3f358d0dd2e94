#include "affqha/convolve.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "affqha/parallel.hpp"
#include "affqha/wigner.hpp"

namespace affqha {

namespace {

constexpr double negligible = 1e-14;
constexpr int block_cols = 64;

struct Window {
  int lo = 0;
  int hi = 0;  // exclusive
  [[nodiscard]] int size() const { return std::max(0, hi - lo); }
};

// Smallest index range holding every row and column of K with a non-negligible entry.
Window support(const CMatrix& K) {
  const Eigen::VectorXd rows = K.cwiseAbs().rowwise().maxCoeff();
  const Eigen::VectorXd cols = K.cwiseAbs().colwise().maxCoeff().transpose();
  const double top = std::max(rows.maxCoeff(), 0.0);
  Window w;
  if (top == 0.0) return w;
  const double thr = 1e-16 * top;
  const int n = static_cast<int>(K.rows());
  int lo = n, hi = -1;
  for (int k = 0; k < n; ++k) {
    if (rows(k) > thr || cols(k) > thr) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  }
  if (hi < lo) return w;
  return {lo, hi + 1};
}

Window intersect(Window a, Window b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

// E(k, c) = exp(2 pi i x_{cols[c]} r_{lo+k} / a).
CMatrix phase_matrix(const LogGrid& lg, Window w, double a, const AffGrid& grid,
                     const std::vector<int>& cols) {
  CMatrix E(w.size(), static_cast<Eigen::Index>(cols.size()));
  for (int k = 0; k < w.size(); ++k) {
    const double nu = lg.r(w.lo + k) / a;
    for (std::size_t c = 0; c < cols.size(); ++c)
      E(k, static_cast<Eigen::Index>(c)) = std::polar(1.0, two_pi * grid.x(cols[c]) * nu);
  }
  return E;
}

// Same for every x-node, by phase recurrence.
CMatrix phase_matrix_all(const LogGrid& lg, Window w, double a, const AffGrid& grid) {
  CMatrix E(w.size(), grid.n_x());
  for (int k = 0; k < w.size(); ++k) {
    const double nu = lg.r(w.lo + k) / a;
    cplx z = std::polar(1.0, two_pi * grid.x(0) * nu);
    const cplx step = std::polar(1.0, two_pi * grid.dx() * nu);
    for (int j = 0; j < grid.n_x(); ++j) {
      E(k, j) = z;
      z *= step;
    }
  }
  return E;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

AffFunction fun_conv(const AffFunction& f, const AffFunction& g) {
  require_same(f.grid(), g.grid());
  const AffGrid& ag = f.grid();
  const int nx = ag.n_x();
  const int ns = ag.n_s();
  struct Node {
    int j;
    int i;
    cplx w;
  };
  std::vector<Node> nodes;
  const double top = max_abs(f.values());
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nx; ++j)
      if (std::abs(f(j, i)) > negligible * top) nodes.push_back({j, i, f(j, i) * ag.right_weight()});

  CMatrix out = CMatrix::Zero(nx, ns);
  parallel_for(ns, [&](int i) {
    CVector col = CVector::Zero(nx);
    for (const Node& nd : nodes) {
      // g at (x_j - a_i y / b, s_i - s_b).
      const double ps = (ag.s(i) - ag.s(nd.i) - ag.s_min()) / ag.ds();
      if (ps < -1e-9 || ps > ns - 1 + 1e-9) continue;
      const CubicStencil ss = cubic_stencil(std::clamp(ps, 0.0, ns - 1.0));
      const double q = ag.a(i) * ag.x(nd.j) / ag.a(nd.i) / ag.dx();
      const CubicStencil sx = cubic_stencil(-q);
      const int j_lo = std::max(0, static_cast<int>(std::ceil(q - 1e-12)));
      const int j_hi = std::min(nx - 1, static_cast<int>(std::floor(q + nx - 1 + 1e-12)));
      for (int b = 0; b < 4; ++b) {
        const int ii = ss.base - 1 + b;
        if (ii < 0 || ii >= ns || ss.w[b] == 0.0) continue;
        const cplx ws = nd.w * ss.w[b];
        for (int o = 0; o < 4; ++o) {
          if (sx.w[o] == 0.0) continue;
          const cplx wt = ws * sx.w[o];
          for (int j = j_lo; j <= j_hi; ++j) {
            const int src = sx.base + j - 1 + o;
            if (src >= 0 && src < nx) col(j) += wt * g(src, ii);
          }
        }
      }
    }
    out.col(i) = col;
  });
  return AffFunction(ag, std::move(out));
}

OperatorRep fun_op_conv(const AffFunction& f, const OperatorRep& S, int stride) {
  if (stride < 1) throw std::invalid_argument("stride must be positive");
  const AffGrid& ag = f.grid();
  const LogGrid& lg = S.grid();
  const int n = lg.size();
  CMatrix out = CMatrix::Zero(n, n);
  const double top = max_abs(f.values());
  if (top == 0.0) return OperatorRep(lg, std::move(out));
  const double weight = ag.right_weight() * stride * stride;
  for (int i = 0; i < ag.n_s(); i += stride) {
    std::vector<int> cols;
    for (int j = 0; j < ag.n_x(); j += stride)
      if (std::abs(f(j, i)) > negligible * top) cols.push_back(j);
    if (cols.empty()) continue;
    const CMatrix D = dilate_kernel(S.kernel(), lg, ag.s(i));
    const Window w = support(D);
    if (w.size() == 0) continue;
    const CMatrix E = phase_matrix(lg, w, ag.a(i), ag, cols);
    CVector fw(static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
      fw(static_cast<Eigen::Index>(c)) = f(cols[c], i) * weight;
    const CMatrix EW = E * fw.asDiagonal();
    const int nblocks = (w.size() + block_cols - 1) / block_cols;
    parallel_for(nblocks, [&](int b) {
      const int c0 = b * block_cols;
      const int bl = std::min(block_cols, w.size() - c0);
      const CMatrix M = EW * E.middleRows(c0, bl).adjoint();
      out.block(w.lo, w.lo + c0, w.size(), bl) +=
          D.block(w.lo, w.lo + c0, w.size(), bl).cwiseProduct(M);
    });
  }
  return OperatorRep(lg, std::move(out));
}

AffFunction op_op_conv(const OperatorRep& S, const OperatorRep& T, const AffGrid& grid) {
  require_same(S.grid(), T.grid());
  const LogGrid& lg = S.grid();
  const double dt2 = lg.dt() * lg.dt();
  const Window ws = support(S.kernel());
  CMatrix out = CMatrix::Zero(grid.n_x(), grid.n_s());
  parallel_for(grid.n_s(), [&](int i) {
    const CMatrix D = dilate_kernel(T.kernel(), lg, grid.s(i));
    const Window w = intersect(ws, support(D));
    if (w.size() == 0) return;
    const CMatrix P = S.kernel()
                          .block(w.lo, w.lo, w.size(), w.size())
                          .cwiseProduct(D.block(w.lo, w.lo, w.size(), w.size()).transpose());
    const CMatrix E = phase_matrix_all(lg, w, grid.a(i), grid);
    const CMatrix Q = P * E;
    out.col(i) = E.conjugate().cwiseProduct(Q).colwise().sum().transpose() * dt2;
  });
  return AffFunction(grid, std::move(out));
}

cplx op_op_conv_at(const OperatorRep& S, const OperatorRep& T, const GroupElement& g) {
  require_same(S.grid(), T.grid());
  const OperatorRep C = conjugate_by_U(T, g);
  const double dt = S.grid().dt();
  return S.kernel().cwiseProduct(C.kernel().transpose()).sum() * dt * dt;
}

AdmissibilityReport admissibility_check(const OperatorRep& S) {
  const LogGrid& lg = S.grid();
  const int n = lg.size();
  const OperatorRep dsd = duflo_sandwich(S, DufloPower::minus);
  AdmissibilityReport rep;
  rep.dsd_trace = trace(dsd);
  rep.dsd_trace_norm = trace_norm(dsd);
  const int cut = n / 20;
  const int inner = n - 2 * cut;
  if (cut > 0 && inner >= 2) {
    const LogGrid sub(lg.t(cut), lg.t(n - cut - 1), inner);
    const OperatorRep part(sub, dsd.kernel().block(cut, cut, inner, inner));
    rep.inner_trace_norm = trace_norm(part);
  } else {
    rep.inner_trace_norm = rep.dsd_trace_norm;
  }
  const Eigen::VectorXd diag = dsd.kernel().diagonal().cwiseAbs();
  const double total = diag.sum();
  double outer = 0.0;
  for (int k = 0; k < n; ++k)
    if (k < cut || k >= n - cut) outer += diag(k);
  rep.tail_ratio = total > 0.0 ? outer / total : 0.0;
  const double scale = S.kernel().norm();
  rep.asymmetry = scale > 0.0 ? (S.kernel() - S.kernel().adjoint()).norm() / scale : 0.0;
  const bool stable = std::isfinite(rep.dsd_trace_norm) &&
                      std::abs(rep.dsd_trace_norm - rep.inner_trace_norm) <=
                          1e-2 * std::max(rep.dsd_trace_norm, 1e-300);
  rep.is_admissible = stable && rep.tail_ratio < 0.05;
  return rep;
}

std::string to_key_value(const AdmissibilityReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "is_admissible=%s\ndsd_trace_re=%.17g\ndsd_trace_im=%.17g\n"
                "dsd_trace_norm=%.17g\ninner_trace_norm=%.17g\ntail_ratio=%.17g\n"
                "asymmetry=%.17g\n",
                r.is_admissible ? "true" : "false", r.dsd_trace.real(), r.dsd_trace.imag(),
                r.dsd_trace_norm, r.inner_trace_norm, r.tail_ratio, r.asymmetry);
  return buf;
}

std::pair<cplx, cplx> integral_identity_check(const OperatorRep& T, const OperatorRep& S,
                                              const AffGrid& grid) {
  const AffFunction c = op_op_conv(T, S, grid);
  return {integrate(c, Measure::right), trace(T) * trace(duflo_sandwich(S, DufloPower::minus))};
}

std::pair<cplx, cplx> left_integral_identity_check(const OperatorRep& T, const OperatorRep& S,
                                                   const AffGrid& grid) {
  const AffFunction c = op_op_conv(T, S, grid);
  return {integrate(c, Measure::left), trace(S) * trace(duflo_sandwich(T, DufloPower::minus))};
}

LocalizationOperator localization_operator(const AffFunction& f, const Signal& phi) {
  OperatorRep op = fun_op_conv(f, rank_one(phi, phi));
  HermitianSpectrum spec = hermitian_spectrum(op);
  return {std::move(op), std::move(spec)};
}

double localization_functional(const AffFunction& f, const Signal& phi, const Signal& psi) {
  const AffGrid& g = f.grid();
  const AffFunction v = wavelet_coeff(psi, phi, g);
  double total = 0.0;
  for (int i = 0; i < g.n_s(); ++i)
    for (int j = 0; j < g.n_x(); ++j) total += f(j, i).real() * std::norm(v(j, i));
  return total * g.right_weight();
}

AffFunction smoothed_box(const AffGrid& grid, double x0, double x1, double s0, double s1) {
  const auto ramp = [](double v, double lo, double hi, double h) {
    return std::clamp(0.5 + std::min(v - lo, hi - v) / h, 0.0, 1.0);
  };
  CMatrix v(grid.n_x(), grid.n_s());
  for (int i = 0; i < grid.n_s(); ++i)
    for (int j = 0; j < grid.n_x(); ++j)
      v(j, i) = ramp(grid.x(j), x0, x1, grid.dx()) * ramp(grid.s(i), s0, s1, grid.ds());
  return AffFunction(grid, std::move(v));
}

OperatorRep covariant_quantize(const AffFunction& f, const OperatorRep& T) {
  return fun_op_conv(f, duflo_sandwich(T, DufloPower::plus));
}

CohenDistribution cohen_distribution(const Signal& psi, const Signal& phi, const OperatorRep& S,
                                     const AffGrid& grid) {
  return {op_op_conv(rank_one(psi, phi), S, grid), S};
}

AffineClassKernel affine_class_kernel(const OperatorRep& S) {
  const LogGrid& g = S.grid();
  const int n = g.size();
  CMatrix table(n, n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      table(k, l) = S.kernel()(l, k) / std::sqrt(g.r(k) * g.r(l));
  return {g, std::move(table)};
}

cplx affine_class_value(const AffineClassKernel& phi, const Signal& psi, double x, double a) {
  require_same(phi.grid, psi.grid());
  const LogGrid& g = psi.grid();
  const CMatrix D = dilate_kernel(phi.table, g, std::log(a));
  CVector v(g.size());
  for (int k = 0; k < g.size(); ++k)
    v(k) = std::polar(g.r(k), two_pi * x * g.r(k)) * psi[k];
  const cplx q = v.transpose() * D * v.conjugate();
  return q * g.dt() * g.dt() / a;
}

AffFunction right_translate(const AffFunction& f, const GroupElement& h) {
  const AffGrid& g = f.grid();
  const double ls = std::log(h.a());
  CMatrix v(g.n_x(), g.n_s());
  for (int i = 0; i < g.n_s(); ++i)
    for (int j = 0; j < g.n_x(); ++j) v(j, i) = interpolate(f, g.a(i) * h.x() + g.x(j), g.s(i) + ls);
  return AffFunction(g, std::move(v));
}

AffFunction reflect(const AffFunction& f) {
  const AffGrid& g = f.grid();
  CMatrix v(g.n_x(), g.n_s());
  for (int i = 0; i < g.n_s(); ++i)
    for (int j = 0; j < g.n_x(); ++j) v(j, i) = interpolate(f, -g.x(j) / g.a(i), -g.s(i));
  return AffFunction(g, std::move(v));
}

double l1_norm(const AffFunction& f, Measure measure) {
  const AffGrid& g = f.grid();
  double total = 0.0;
  for (int i = 0; i < g.n_s(); ++i) {
    const double w = measure == Measure::right ? g.right_weight() : g.left_weight(i);
    total += f.values().col(i).cwiseAbs().sum() * w;
  }
  return total;
}

}  // namespace affqha
