#pragma once

#include <doctest.h>

#include "affqha/fixtures.hpp"
#include "affqha/grid.hpp"
#include "affqha/hilbert.hpp"

namespace testing {

using namespace affqha;

inline const LogGrid& log_grid() {
  static const LogGrid g = make_grids(GridSpec{}).first;
  return g;
}

inline const AffGrid& aff_grid() {
  static const AffGrid g = make_grids(GridSpec{}).second;
  return g;
}

inline double max_abs_diff(const CVector& a, const CVector& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double rel_hs(const OperatorRep& got, const OperatorRep& want) {
  return hs_norm(OperatorRep(want.grid(), got.kernel() - want.kernel())) / hs_norm(want);
}

inline double rel_l2(const AffFunction& got, const AffFunction& want) {
  return l2_norm(AffFunction(want.grid(), got.values() - want.values())) / l2_norm(want);
}

// Node index of s = log a on the default affine grid.
inline int s_node(double s) {
  const AffGrid& g = aff_grid();
  return static_cast<int>(std::lround((s - g.s_min()) / g.ds()));
}

inline int x_node(double x) {
  const AffGrid& g = aff_grid();
  return static_cast<int>(std::lround((x + g.x_extent()) / g.dx()));
}

}  // namespace testing
