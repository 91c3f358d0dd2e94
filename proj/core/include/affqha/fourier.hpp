#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "affqha/hilbert.hpp"

namespace affqha {

struct FourierWignerInverse {
  OperatorRep op;
  double discarded_mass = 0.0;  // ||f||^2 - ||op||_HS^2
};

// K(s, r) = sqrt(r) (F_1 f)(r, s/r). Frequencies r beyond the band (7/8)/dx are dropped.
FourierWignerInverse fw_inverse(const AffFunction& f, const LogGrid& grid);

// F(x,a) = int K(a r, r) r^{-1/2} e^{2 pi i x r} dr, sampled on a linear r-grid.
AffFunction fw_forward(const OperatorRep& A, const AffGrid& grid);

// tr(A D U(g)) as a sum over the log grid.
cplx fw_trace(const OperatorRep& A, const GroupElement& g);

// tr(A U(g)).
cplx bochner_function(const OperatorRep& A, const GroupElement& g);

// sqrt(a) int sqrt(lambda(-u)) (F_1 f)(a lambda(-u), e^u) e^{-2 pi i x u} du.
AffFunction fko(const AffFunction& f);

struct PositiveTypeReport {
  std::vector<GroupElement> points;
  CMatrix gram;
  Eigen::VectorXd eigenvalues;
  double min_eigenvalue = 0.0;
};

// gram(i,j) = tr(A U(g_i^{-1} g_j)).
PositiveTypeReport positive_type_test(const OperatorRep& A, std::span<const GroupElement> points);

// Points with x uniform in [-x_range, x_range] and a = e^{m dt}, |m| <= m_range.
std::vector<GroupElement> random_aligned_points(const LogGrid& grid, int count, std::uint64_t seed,
                                                double x_range, int m_range);

}  // namespace affqha
