#pragma once

#include <span>

#include "affqha/grid.hpp"

namespace affqha::detail {

// out(j) += sum_k c_k exp(sign 2 pi i x_j nu_k) for x_j on the affine x-axis,
// using a phase recurrence along j.
void accumulate_to_x(std::span<const cplx> c, std::span<const double> nu, const AffGrid& grid,
                     double sign, CVector& out);

// out_l = weight * sum_j f_j exp(sign 2 pi i x_j xi_l).
CVector transform_from_x(const CVector& f, std::span<const double> xi, const AffGrid& grid,
                         double sign, double weight);

}  // namespace affqha::detail
