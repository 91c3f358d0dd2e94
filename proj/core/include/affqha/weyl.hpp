#pragma once

#include "affqha/hilbert.hpp"

namespace affqha {

struct SymbolOperatorPair {
  AffFunction symbol;
  OperatorRep op;
};

// Kernel K(r,s) = int f(x, (r-s)/log(r/s)) e^{2 pi i x log(r/s)} dx on the given log grid.
OperatorRep quantize(const AffFunction& f, const LogGrid& grid);

// f_A(x,a) = int K(a lambda(u), a lambda(-u)) e^{-2 pi i x u} du with u on multiples of dt.
AffFunction dequantize(const OperatorRep& A, const AffGrid& grid);

enum class Coordinate { x, a };

// A_{f_a} psi = r psi;  A_{f_x} psi = (1/2 pi i) r psi'(r) by spectral differentiation in t.
Signal coordinate_quantize(Coordinate which, const Signal& psi);

// d/dt of psi(e^t) by trigonometric interpolation on the log grid.
CVector spectral_derivative(const Signal& psi);

}  // namespace affqha
