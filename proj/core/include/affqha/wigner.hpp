#pragma once

#include "affqha/hilbert.hpp"

namespace affqha {

// Uniform u-grid on [-extent, extent] used for the lambda(u) profile.
struct UGrid {
  double extent = 12.0;
  int count = 1024;
};

struct WignerResult {
  AffFunction value;
  UGrid u;
};

// W(x,a) = int psi(a lambda(u)) conj(phi(a lambda(-u))) e^{-2 pi i x u} du.
WignerResult affine_wigner(const Signal& psi, const Signal& phi, const AffGrid& grid,
                           UGrid u = {});

// Grossmann-Royer operator R(x,a) applied to psi; R(0,1) is the parity operator.
Signal grossmann_royer_apply(const GroupElement& g, const Signal& psi);
Signal parity_apply(const Signal& psi);

// V(x,a) = <psi, U(-x,a)^* phi>.
AffFunction wavelet_coeff(const Signal& psi, const Signal& phi, const AffGrid& grid);

// SCAL(x,a) = a |V_{phi,psi}(-x,a)|^2 with window psi and signal phi.
AffFunction scalogram(const Signal& psi, const Signal& phi, const AffGrid& grid);

}  // namespace affqha
