#include <cmath>

#include "affqha/convolve.hpp"
#include "affqha/weyl.hpp"
#include "affqha/wigner.hpp"
#include "common.hpp"

using namespace testing;

TEST_SUITE("wigner") {
  TEST_CASE("zero signal gives zero distribution") {
    const Signal zero(log_grid());
    CHECK(affine_wigner(zero, zero, aff_grid()).value.values().cwiseAbs().maxCoeff() == 0.0);
    CHECK(scalogram(zero, laguerre_signal(log_grid(), 0, 1.0), aff_grid()).values().cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("marginal at a = 1 and real-valued auto distribution") {
    const Signal psi = laguerre_signal(log_grid(), 0, 1.0);
    const WignerResult w = affine_wigner(psi, psi, aff_grid());
    CHECK(w.u.extent == 12.0);
    CHECK(w.u.count == 1024);
    const int i = s_node(0.0);
    const cplx sum = w.value.values().col(i).sum() * aff_grid().dx();
    CHECK(std::abs(sum - std::exp(-1.0)) < 2e-2 * std::exp(-1.0));
    CHECK(w.value.values().imag().cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("Grossmann-Royer operator") {
    const LogGrid& lg = log_grid();
    const Signal psi = laguerre_signal(lg, 0, 1.0);
    const Signal phi = laguerre_signal(lg, 1, 1.0);
    const int k1 = static_cast<int>(std::lround(-lg.t_min() / lg.dt()));
    CHECK(std::abs(parity_apply(psi)[k1] - 2.0 * psi[k1]) < 1e-6);
    const AffFunction w = affine_wigner(psi, phi, aff_grid()).value;
    for (auto [x, s] : {std::pair{0.25, 0.0}, {0.0, 4.0 / 17.0}, {0.125, -6.0 / 17.0}}) {
      const int j = x_node(x), i = s_node(s);
      const GroupElement g(aff_grid().x(j), aff_grid().a(i));
      const cplx got = inner_product(grossmann_royer_apply(g, psi), phi);
      CHECK(std::abs(got - w(j, i)) < 2e-2 * std::abs(w(j, i)));
    }
    // U(-x,a)^* P U(-x,a) = R(x,a)
    const Signal lg0 = log_gaussian_signal(lg, 0.0, 0.5);
    const GroupElement g(0.3, std::exp(10 * lg.dt()));
    const GroupElement m(-g.x(), g.a());
    const Signal lhs = apply_U_adjoint(m, parity_apply(apply_U(m, lg0)));
    CHECK(max_abs_diff(lhs.values(), grossmann_royer_apply(g, lg0).values()) < 1e-4);
  }

  TEST_CASE("covariance under an aligned dilation") {
    const LogGrid& lg = log_grid();
    const Signal psi = laguerre_signal(lg, 0, 1.0);
    const Signal phi = laguerre_signal(lg, 1, 1.0);
    const GroupElement h(0.0, std::exp(8 * lg.dt()));
    const AffFunction moved = affine_wigner(apply_U(h, psi), apply_U(h, phi), aff_grid()).value;
    const AffFunction shifted = right_translate(affine_wigner(psi, phi, aff_grid()).value, h);
    const double scale = shifted.values().cwiseAbs().maxCoeff();
    CHECK((moved.values() - shifted.values()).cwiseAbs().maxCoeff() < 1e-3 * scale);
  }

  TEST_CASE("covariance with a translation") {
    // (y,b)(x,a) moves off the x-grid, so the comparison goes through bicubic resampling.
    const LogGrid& lg = log_grid();
    const Signal psi = laguerre_signal(lg, 0, 1.0);
    const Signal phi = laguerre_signal(lg, 1, 1.0);
    const GroupElement h(0.25, std::exp(8 * lg.dt()));
    const GroupElement m(-h.x(), h.a());
    const AffFunction moved = affine_wigner(apply_U(m, psi), apply_U(m, phi), aff_grid()).value;
    const AffFunction shifted = right_translate(affine_wigner(psi, phi, aff_grid()).value, h);
    const double scale = shifted.values().cwiseAbs().maxCoeff();
    CHECK((moved.values() - shifted.values()).cwiseAbs().maxCoeff() < 1e-2 * scale);
  }

  TEST_CASE("wavelet coefficients") {
    const LogGrid& lg = log_grid();
    const Signal psi = log_gaussian_signal(lg, 0.0, 0.5);
    const Signal phi = laguerre_signal(lg, 0, 2.0);
    const AffFunction v = wavelet_coeff(psi, phi, aff_grid());
    CHECK(std::abs(v(x_node(0.0), s_node(0.0)) - inner_product(psi, phi)) < 1e-12);
    double energy = 0.0;
    for (int i = 0; i < aff_grid().n_s(); ++i) energy += v.values().col(i).squaredNorm();
    energy *= aff_grid().right_weight();
    const double d = norm(duflo_apply(phi, DufloPower::minus));
    CHECK(std::abs(energy - d * d) < 2e-2 * d * d);
  }

  TEST_CASE("energy of an inadmissible window grows with the scale range") {
    // |phi|^2 / r ~ r^{-1/2} near 0, so the dilation integral diverges as s_max grows.
    const LogGrid& lg = log_grid();
    const Signal psi = log_gaussian_signal(lg, 0.0, 0.5);
    const Signal phi = Signal::sample(lg, [](double r) { return cplx(std::pow(r, 0.25) * std::exp(-r)); });
    double prev = 0.0;
    for (double s_ext : {2.0, 4.0, 6.0}) {
      const AffGrid g = aligned_aff_grid(lg, 4.0, 257, s_ext);
      const AffFunction v = wavelet_coeff(psi, phi, g);
      double energy = 0.0;
      for (int i = 0; i < g.n_s(); ++i) energy += v.values().col(i).squaredNorm();
      energy *= g.right_weight();
      CHECK(energy > 1.2 * prev);
      prev = energy;
    }
  }

  TEST_CASE("scalogram against the operator convolution") {
    const LogGrid& lg = log_grid();
    const AffGrid g = aligned_aff_grid(lg, 4.0, 129, 3.0, 4);
    const Signal window = laguerre_signal(lg, 0, 1.0);
    const Signal sig = log_gaussian_signal(lg, 0.0, 0.5);
    const AffFunction scal = scalogram(window, sig, g);
    const AffFunction conv = op_op_conv(rank_one(sig, sig), rank_one(window, window), g);
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < g.n_s(); ++i)
      for (int j = 0; j < g.n_x(); ++j) {
        const cplx want = scal(j, i) / g.a(i);
        diff = std::max(diff, std::abs(conv(g.n_x() - 1 - j, i) - want));
        scale = std::max(scale, std::abs(want));
      }
    CHECK(diff < 1e-6 * scale);
  }
}
