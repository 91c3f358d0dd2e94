#include <cmath>

#include "affqha/convolve.hpp"
#include "affqha/fourier.hpp"
#include "affqha/weyl.hpp"
#include "common.hpp"

using namespace testing;

TEST_SUITE("fourier") {
  TEST_CASE("forward transform against the trace formula") {
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const OperatorRep A = rank_one(psi, psi);
    const AffFunction F = fw_forward(A, aff_grid());
    for (auto [j, i] : {std::pair{136, 100}, {128, 96}, {120, 80}}) {
      const cplx t = fw_trace(A, GroupElement(aff_grid().x(j), aff_grid().a(i)));
      CHECK(std::abs(t - F(j, i)) < 1e-5);
    }
    const FourierWignerInverse inv = fw_inverse(F, log_grid());
    CHECK(rel_hs(inv.op, A) < 1e-2);
    CHECK(std::abs(inv.discarded_mass) < 1e-3);
  }

  TEST_CASE("inverse transform reports mass outside the positive band") {
    // Concentrated near negative frequencies in x: most of the mass is discarded.
    const AffFunction f = gaussian_symbol(aff_grid(), 0.0, 0.5, 0.0, 0.5, -2.0);
    const FourierWignerInverse inv = fw_inverse(f, log_grid());
    const double total = l2_norm(f) * l2_norm(f);
    CHECK(inv.discarded_mass > 0.5 * total);
  }

  TEST_CASE("Fourier-Kirillov image is the Weyl symbol") {
    const Signal psi = laguerre_signal(log_grid(), 0, 1.0);
    const OperatorRep A = rank_one(psi, psi);
    const AffFunction via = fko(fw_forward(A, aff_grid()));
    CHECK(rel_l2(via, dequantize(A, aff_grid())) < 5e-2);
  }

  TEST_CASE("convolution does not decouple under the transforms") {
    const AffFunction f = gaussian_symbol(aff_grid(), 0.2, 0.3, 0.1, 0.3);
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    const OperatorRep S = rank_one(psi, psi);
    const AffFunction lhs = fw_forward(fun_op_conv(f, S), aff_grid());
    const CMatrix prod = fko(f).values().cwiseProduct(fw_forward(S, aff_grid()).values());
    const double gap = (lhs.values() - prod).cwiseAbs().maxCoeff() / lhs.values().cwiseAbs().maxCoeff();
    CHECK(gap > 10 * 2e-2);
  }

  TEST_CASE("positive type") {
    const Signal psi = laguerre_signal(log_grid(), 0, 1.0);
    const OperatorRep A = rank_one(psi, psi);
    const GroupElement id = GroupElement::identity();
    const PositiveTypeReport one = positive_type_test(A, std::span(&id, 1));
    CHECK(std::abs(one.gram(0, 0) - trace(A)) < 1e-14);
    CHECK(one.min_eigenvalue == doctest::Approx(trace(A).real()));
    const auto pts = random_aligned_points(log_grid(), 8, 3, 2.0, 40);
    CHECK(positive_type_test(A, pts).min_eigenvalue >= -1e-6);
    CHECK_THROWS_AS(positive_type_test(A, {}), std::invalid_argument);
  }

  TEST_CASE("random aligned points are reproducible") {
    const auto a = random_aligned_points(log_grid(), 8, 42, 2.0, 40);
    const auto b = random_aligned_points(log_grid(), 8, 42, 2.0, 40);
    REQUIRE(a.size() == 8);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].x() == b[k].x());
      CHECK(a[k].a() == b[k].a());
      CHECK(std::abs(a[k].x()) <= 2.0);
      int m = 0;
      CHECK(log_grid().aligned_shift(std::log(a[k].a()), m));
      CHECK(std::abs(m) <= 40);
    }
  }
}
