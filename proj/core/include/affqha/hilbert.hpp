#pragma once

#include <cmath>
#include <stdexcept>

#include "affqha/grid.hpp"

namespace affqha {

// (x, a) in the affine group, a > 0.
class GroupElement {
 public:
  GroupElement(double x, double a) : x_(x), a_(a) {
    if (!(a > 0.0) || !std::isfinite(x) || !std::isfinite(a))
      throw std::invalid_argument("group element needs finite x and a > 0");
  }
  static GroupElement identity() { return {0.0, 1.0}; }

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double a() const noexcept { return a_; }

 private:
  double x_;
  double a_;
};

GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);

// Operator on L^2(R_+) given by its kernel against ds/s:
// (A psi)(r_j) = sum_k K(j, k) psi(r_k) dt.
class OperatorRep {
 public:
  OperatorRep(LogGrid grid, CMatrix kernel);
  explicit OperatorRep(LogGrid grid);  // zero operator

  [[nodiscard]] const LogGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const CMatrix& kernel() const noexcept { return kernel_; }
  [[nodiscard]] CMatrix& kernel() noexcept { return kernel_; }

  // Matrix of the operator in the orthonormal node basis (kernel times dt).
  [[nodiscard]] CMatrix matrix() const { return kernel_ * grid_.dt(); }

 private:
  LogGrid grid_;
  CMatrix kernel_;
};

enum class DufloPower { plus = 1, minus = -1 };

Signal apply_U(const GroupElement& g, const Signal& psi);
// U(g)^* psi (r) = e^{-2 pi i x r / a} psi(r / a).
Signal apply_U_adjoint(const GroupElement& g, const Signal& psi);

// Kernel of U(-x,a)^* S U(-x,a): e^{2 pi i x (r-s)/a} K(r/a, s/a).
OperatorRep conjugate_by_U(const OperatorRep& S, const GroupElement& g);

// K(r/a, s/a) with a = e^{log_a}: exact index shift when log_a is a multiple of dt,
// separable cubic interpolation otherwise. Zero outside the grid.
CMatrix dilate_kernel(const CMatrix& K, const LogGrid& grid, double log_a);

Signal duflo_apply(const Signal& psi, DufloPower power);
// D^p S D^p as a kernel scaling by (r s)^{p/2}.
OperatorRep duflo_sandwich(const OperatorRep& S, DufloPower power);

OperatorRep rank_one(const Signal& psi, const Signal& phi);
Signal apply(const OperatorRep& S, const Signal& psi);
OperatorRep compose(const OperatorRep& S, const OperatorRep& T);
OperatorRep adjoint(const OperatorRep& S);

cplx trace(const OperatorRep& S);
cplx hs_inner(const OperatorRep& S, const OperatorRep& T);
double hs_norm(const OperatorRep& S);

// Singular values from the eigenvalues of the Hermitian square of the operator matrix.
Eigen::VectorXd singular_values(const OperatorRep& S);
double trace_norm(const OperatorRep& S);
double op_norm(const OperatorRep& S);

struct HermitianSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // columns, normalized in L^2(R_+) on the grid
  double asymmetry = 0.0;       // ||K - K^*|| / ||K||
};
// Spectrum of the Hermitian part of S.
HermitianSpectrum hermitian_spectrum(const OperatorRep& S);

// K at (r1, r2) = (e^{t1}, e^{t2}) by separable cubic interpolation, zero outside.
cplx kernel_at(const OperatorRep& S, double t1, double t2);

// K(e^t, e^{t - m dt}): cubic interpolation along the diagonal k - l = m.
cplx diagonal_at(const OperatorRep& S, int m, double t);

}  // namespace affqha
