#include "dft.hpp"

namespace affqha::detail {

void accumulate_to_x(std::span<const cplx> c, std::span<const double> nu, const AffGrid& grid,
                     double sign, CVector& out) {
  const int nx = grid.n_x();
  const double x0 = grid.x(0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == cplx(0.0)) continue;
    cplx z = c[k] * std::polar(1.0, sign * two_pi * x0 * nu[k]);
    const cplx step = std::polar(1.0, sign * two_pi * grid.dx() * nu[k]);
    for (int j = 0; j < nx; ++j) {
      out(j) += z;
      z *= step;
    }
  }
}

CVector transform_from_x(const CVector& f, std::span<const double> xi, const AffGrid& grid,
                         double sign, double weight) {
  const int nx = grid.n_x();
  const double x0 = grid.x(0);
  CVector out = CVector::Zero(static_cast<Eigen::Index>(xi.size()));
  for (std::size_t l = 0; l < xi.size(); ++l) {
    cplx z = std::polar(1.0, sign * two_pi * x0 * xi[l]);
    const cplx step = std::polar(1.0, sign * two_pi * grid.dx() * xi[l]);
    cplx acc = 0.0;
    for (int j = 0; j < nx; ++j) {
      acc += f(j) * z;
      z *= step;
    }
    out(static_cast<Eigen::Index>(l)) = acc * weight;
  }
  return out;
}

}  // namespace affqha::detail
