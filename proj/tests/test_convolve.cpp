#include <cmath>

#include "affqha/convolve.hpp"
#include "affqha/wigner.hpp"
#include "common.hpp"

using namespace testing;

namespace {

// Coarser aligned grid keeps the O(n^3)-per-row convolutions quick.
const AffGrid& small_grid() {
  static const AffGrid g = aligned_aff_grid(log_grid(), 4.0, 129, 4.0, 4);
  return g;
}

}  // namespace

TEST_SUITE("convolve") {
  TEST_CASE("function convolution integrates to the product of integrals") {
    const AffFunction f = gaussian_symbol(aff_grid(), 0.2, 0.3, 0.1, 0.3);
    const AffFunction g = gaussian_symbol(aff_grid(), -0.1, 0.3, -0.2, 0.3);
    const cplx got = integrate(fun_conv(f, g), Measure::right);
    const cplx want = integrate(f, Measure::right) * integrate(g, Measure::right);
    CHECK(std::abs(got - want) < 1e-3 * std::abs(want));
  }

  TEST_CASE("trace of a function-operator convolution") {
    const AffFunction f = gaussian_symbol(aff_grid(), 0.2, 0.3, 0.1, 0.3);
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const OperatorRep c = fun_op_conv(f, rank_one(psi, psi));
    const cplx want = integrate(f, Measure::right);
    CHECK(std::abs(trace(c) - want) < 1e-3 * std::abs(want));
    const OperatorRep strided = fun_op_conv(f, rank_one(psi, psi), 2);
    CHECK(std::abs(trace(strided) - want) < 1e-2 * std::abs(want));
    CHECK_THROWS_AS(fun_op_conv(f, rank_one(psi, psi), 0), std::invalid_argument);
  }

  TEST_CASE("operator convolution at grid nodes matches pointwise evaluation") {
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const Signal phi = laguerre_signal(log_grid(), 0, 2.0);
    const OperatorRep S = rank_one(psi, psi);
    const OperatorRep T = rank_one(phi, phi);
    const AffFunction c = op_op_conv(S, T, small_grid());
    const int j0 = small_grid().n_x() / 2, i0 = small_grid().n_s() / 2;
    CHECK(std::abs(c(j0, i0) - std::norm(inner_product(psi, phi))) < 1e-12);
    for (auto [j, i] : {std::pair{70, 40}, {50, 30}, {64, 45}}) {
      const GroupElement g(small_grid().x(j), small_grid().a(i));
      CHECK(std::abs(c(j, i) - op_op_conv_at(S, T, g)) < 1e-12);
    }
  }

  TEST_CASE("admissibility report") {
    const double w[3] = {0.5, 0.3, 0.2};
    const AdmissibilityReport rep = admissibility_check(laguerre_mixture(log_grid(), w, 2.0));
    CHECK(rep.is_admissible);
    CHECK(std::abs(rep.dsd_trace - 0.5) < 1e-3);
    CHECK(rep.asymmetry < 1e-14);
    const std::string kv = to_key_value(rep);
    CHECK(kv.find("is_admissible=true\n") == 0);
    CHECK(kv.find("dsd_trace_re=0.4999") != std::string::npos);
    CHECK(kv.find("tail_ratio=") != std::string::npos);
    const Signal slow = Signal::sample(log_grid(), [](double r) { return cplx(std::pow(r, 0.25) * std::exp(-r)); });
    CHECK_FALSE(admissibility_check(rank_one(slow, slow)).is_admissible);
  }

  TEST_CASE("integral identity on a coarse grid") {
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const Signal phi = log_gaussian_signal(log_grid(), 0.3, 0.4);
    const auto [got, want] = integral_identity_check(rank_one(psi, psi), rank_one(phi, phi), small_grid());
    CHECK(std::abs(got - want) < 2e-2 * std::abs(want));
  }

  TEST_CASE("localization operator") {
    const AffFunction box = smoothed_box(small_grid(), -1.0, 1.0, -1.0, 1.0);
    const Signal phi = laguerre_signal(log_grid(), 0, 1.0);
    const LocalizationOperator L = localization_operator(box, phi);
    const Eigen::Index top = L.spectrum.eigenvalues.size() - 1;
    const double lam0 = L.spectrum.eigenvalues(top);
    CHECK(lam0 > 0.0);
    CHECK(lam0 <= 1.0 + 1e-2);  // sup f * ||D^-1 phi||^2
    CHECK(L.spectrum.eigenvalues(0) > -1e-10 * lam0);
    const Signal v(log_grid(), L.spectrum.eigenvectors.col(top));
    CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(localization_functional(box, phi, v) == doctest::Approx(lam0).epsilon(1e-8));
  }

  TEST_CASE("smoothed box") {
    const AffFunction b = smoothed_box(aff_grid(), -1.0, 1.0, -1.0, 1.0);
    CHECK(b(x_node(0.0), s_node(0.0)) == 1.0);
    CHECK(b(x_node(2.0), s_node(0.0)) == 0.0);
    CHECK(b(x_node(0.0), s_node(2.0)) == 0.0);
    CHECK(b(x_node(1.0), s_node(0.0)).real() == doctest::Approx(0.5));
  }

  TEST_CASE("resolution of the identity") {
    const AffFunction one = AffFunction::sample(aff_grid(), [](double, double) { return cplx(1.0); });
    const Signal w = log_gaussian_signal(log_grid(), 0.3, 0.4);
    const OperatorRep T = rank_one(w, w);
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const Signal out = apply(covariant_quantize(one, T), psi);
    CHECK((out.values() - trace(T) * psi.values()).norm() < 1e-3 * psi.values().norm());
  }

  TEST_CASE("Cohen distribution of a rank-one window is a cross scalogram") {
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const Signal w = laguerre_signal(log_grid(), 0, 1.0);
    const CohenDistribution q = cohen_distribution(psi, psi, rank_one(w, w), small_grid());
    const AffFunction v = wavelet_coeff(psi, w, small_grid());
    CHECK((q.value.values() - v.values().cwiseAbs2().cast<cplx>()).cwiseAbs().maxCoeff() <
          1e-10 * v.values().cwiseAbs2().maxCoeff());
  }

  TEST_CASE("affine class kernel") {
    const Signal w = log_gaussian_signal(log_grid(), 0.3, 0.4);
    const OperatorRep S = rank_one(w, w);
    const AffineClassKernel k = affine_class_kernel(S);
    const int a = 300, b = 320;
    CHECK(std::abs(k.table(a, b) - S.kernel()(b, a) / std::sqrt(log_grid().r(a) * log_grid().r(b))) < 1e-15);
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const Signal dpsi = duflo_apply(psi, DufloPower::plus);
    const GroupElement g(0.4, std::exp(8 * log_grid().dt()));
    const cplx lhs = op_op_conv_at(rank_one(dpsi, dpsi), S, g);
    CHECK(std::abs(lhs - affine_class_value(k, psi, -g.x() / g.a(), g.a())) < 1e-10 * std::abs(lhs));
  }

  TEST_CASE("reflection and norms") {
    const AffFunction f = gaussian_symbol(aff_grid(), 0.2, 0.3, 0.1, 0.3);
    const AffFunction r = reflect(f);
    CHECK(std::abs(r(x_node(0.0), s_node(0.0)) - f(x_node(0.0), s_node(0.0))) < 1e-14);
    const AffFunction one = AffFunction::sample(aff_grid(), [](double, double) { return cplx(1.0); });
    CHECK(l1_norm(one) == doctest::Approx(integrate(one, Measure::right).real()));
    CHECK(l1_norm(one, Measure::left) == doctest::Approx(integrate(one, Measure::left).real()));
  }
}
