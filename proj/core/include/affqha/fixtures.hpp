#pragma once

#include "affqha/hilbert.hpp"

namespace affqha {

Signal laguerre_signal(const LogGrid& grid, int n, double alpha);
Signal log_gaussian_signal(const LogGrid& grid, double mu, double sigma);

// exp(-(x-x0)^2/(2 sx^2) - (s-s0)^2/(2 ss^2)) e^{2 pi i freq x} with s = log a.
AffFunction gaussian_symbol(const AffGrid& grid, double x0, double sx, double s0, double ss,
                            double freq = 0.0);

// sum_n w_n L_n^alpha (x) L_n^alpha.
OperatorRep laguerre_mixture(const LogGrid& grid, std::span<const double> weights, double alpha);

}  // namespace affqha
