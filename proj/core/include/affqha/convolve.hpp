#pragma once

#include <string>
#include <utility>

#include "affqha/hilbert.hpp"

namespace affqha {

// f * g (x,a) = int f(y,b) g((x,a)(y,b)^{-1}) dmu_r(y,b).
AffFunction fun_conv(const AffFunction& f, const AffFunction& g);

// f star S = int f(x,a) U(-x,a)^* S U(-x,a) dmu_r. stride > 1 sums every stride-th node
// in both directions with correspondingly larger weights.
OperatorRep fun_op_conv(const AffFunction& f, const OperatorRep& S, int stride = 1);

// S star T (x,a) = tr(S U(-x,a)^* T U(-x,a)).
AffFunction op_op_conv(const OperatorRep& S, const OperatorRep& T, const AffGrid& grid);
cplx op_op_conv_at(const OperatorRep& S, const OperatorRep& T, const GroupElement& g);

struct AdmissibilityReport {
  bool is_admissible = false;
  cplx dsd_trace = 0.0;             // tr(D^-1 S D^-1)
  double dsd_trace_norm = 0.0;      // sum of singular values of D^-1 S D^-1
  double inner_trace_norm = 0.0;    // same on the inner 90% of the grid
  double tail_ratio = 0.0;          // diagonal mass of D^-1 S D^-1 on the outer 10%
  double asymmetry = 0.0;
};

AdmissibilityReport admissibility_check(const OperatorRep& S);
std::string to_key_value(const AdmissibilityReport& report);

// (integral of T star S against mu_r, tr(T) tr(D^-1 S D^-1)).
std::pair<cplx, cplx> integral_identity_check(const OperatorRep& T, const OperatorRep& S,
                                              const AffGrid& grid);
// (integral of T star S against mu_l, tr(S) tr(D^-1 T D^-1)).
std::pair<cplx, cplx> left_integral_identity_check(const OperatorRep& T, const OperatorRep& S,
                                                   const AffGrid& grid);

struct LocalizationOperator {
  OperatorRep op;
  HermitianSpectrum spectrum;
};

LocalizationOperator localization_operator(const AffFunction& f, const Signal& phi);

// int f(x,a) |<psi, U(-x,a)^* phi>|^2 dmu_r.
double localization_functional(const AffFunction& f, const Signal& phi, const Signal& psi);

// Indicator of [x0,x1] x [e^{s0}, e^{s1}] with a one-cell linear ramp at the boundary.
AffFunction smoothed_box(const AffGrid& grid, double x0, double x1, double s0, double s1);

// Gamma(f) = f star (D T D).
OperatorRep covariant_quantize(const AffFunction& f, const OperatorRep& T);

struct CohenDistribution {
  AffFunction value;
  OperatorRep operator_ref;
};

// Q_S(psi, phi)(x,a) = <S U(-x,a) psi, U(-x,a) phi>.
CohenDistribution cohen_distribution(const Signal& psi, const Signal& phi, const OperatorRep& S,
                                     const AffGrid& grid);

// Phi_S(s,t) = K_S(t,s) / sqrt(s t); table(k, l) = Phi_S(r_k, r_l).
struct AffineClassKernel {
  LogGrid grid;
  CMatrix table;
};

AffineClassKernel affine_class_kernel(const OperatorRep& S);

// (1/a) int int Phi(t/a, s/a) e^{2 pi i x (t-s)} psi(t) conj(psi(s)) dt ds.
cplx affine_class_value(const AffineClassKernel& phi, const Signal& psi, double x, double a);

// R_{(x,a)} f (y,b) = f((y,b)(x,a)).
AffFunction right_translate(const AffFunction& f, const GroupElement& g);

// f^check(x,a) = f((x,a)^{-1}).
AffFunction reflect(const AffFunction& f);

double l1_norm(const AffFunction& f, Measure measure = Measure::right);

}  // namespace affqha
