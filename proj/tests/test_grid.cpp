#include <cmath>

#include "common.hpp"

using namespace testing;

TEST_SUITE("grid") {
  TEST_CASE("log grid nodes and weights") {
    const LogGrid g(-2.0, 1.0, 31);
    CHECK(g.dt() == doctest::Approx(0.1));
    for (int k = 0; k + 1 < g.size(); ++k) {
      CHECK(g.r(k) > 0.0);
      CHECK(g.r(k + 1) > g.r(k));
      CHECK(g.r(k) == doctest::Approx(std::exp(g.t(k))).epsilon(1e-15));
    }
    int m = 0;
    CHECK(g.aligned_shift(0.3, m));
    CHECK(m == 3);
    CHECK_FALSE(g.aligned_shift(0.35, m));
  }

  TEST_CASE("affine grid is symmetric and carries both Haar weights") {
    const AffGrid& g = aff_grid();
    for (int j = 0; j < g.n_x(); ++j) CHECK(g.x(j) == -g.x(g.n_x() - 1 - j));
    CHECK(g.x(g.n_x() / 2) == 0.0);
    CHECK(g.s(g.n_s() / 2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(g.right_weight() == doctest::Approx(g.dx() * g.ds()));
    const int i = 17;
    CHECK(g.left_weight(i) == doctest::Approx(g.dx() * g.ds() * std::exp(-g.s(i))));
    // s-nodes sit on multiples of the log step, so dilations by a_i are index shifts.
    for (int k = 0; k < g.n_s(); ++k) {
      int m = 0;
      CHECK(log_grid().aligned_shift(g.s(k), m));
    }
  }

  TEST_CASE("constructors validate") {
    CHECK_THROWS_AS(LogGrid(1.0, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(LogGrid(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(AffGrid(-1.0, 10, -1.0, 1.0, 10), std::invalid_argument);
    const LogGrid g(0.0, 1.0, 5);
    CHECK_THROWS_AS(Signal(g, CVector::Zero(4)), std::invalid_argument);
    CVector bad = CVector::Zero(5);
    bad(2) = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(Signal(g, bad), std::invalid_argument);
  }

  TEST_CASE("integrals against both measures") {
    const AffGrid g(1.0, 21, -1.0, 1.0, 41);
    const AffFunction one = AffFunction::sample(g, [](double, double) { return cplx(1.0); });
    CHECK(integrate(one, Measure::right).real() ==
          doctest::Approx(21 * g.dx() * 41 * g.ds()).epsilon(1e-14));
    double left = 0.0;
    for (int i = 0; i < g.n_s(); ++i) left += 21 * g.left_weight(i);
    CHECK(integrate(one, Measure::left).real() == doctest::Approx(left).epsilon(1e-14));
    CHECK(l2_norm(one) == doctest::Approx(std::sqrt(21 * 41 * g.right_weight())));
  }

  TEST_CASE("inner product and norm of a normalized log-Gaussian") {
    const Signal psi = log_gaussian_signal(log_grid(), 0.0, 0.5);
    CHECK(norm(psi) == doctest::Approx(1.0).epsilon(1e-12));
    const Signal phi = log_gaussian_signal(log_grid(), 0.3, 0.4);
    // closed form for two normalized log-Gaussians
    const double s1 = 0.5, s2 = 0.4, d = 0.3;
    const double want = std::sqrt(2.0 * s1 * s2 / (s1 * s1 + s2 * s2)) *
                        std::exp(-d * d / (2.0 * (s1 * s1 + s2 * s2)));
    CHECK(inner_product(psi, phi).real() == doctest::Approx(want).epsilon(1e-10));
  }

  TEST_CASE("cubic interpolation reproduces cubics in t") {
    const LogGrid g(-3.0, 3.0, 61);
    const auto cubic = [](double t) { return t * t * t - 2.0 * t + 0.5; };
    const Signal psi = Signal::sample(g, [&](double r) { return cplx(cubic(std::log(r))); });
    for (double t : {-2.83, -0.51, 0.0, 1.234, 2.9})
      CHECK(interpolate(psi, std::exp(t)).real() == doctest::Approx(cubic(t)).epsilon(1e-12));
    CHECK(interpolate(psi, std::exp(3.5)) == cplx(0.0));
    CHECK_THROWS_AS(interpolate(psi, 0.0), std::domain_error);
  }

  TEST_CASE("bicubic interpolation reproduces separable cubics") {
    const AffGrid g(2.0, 41, -1.0, 1.0, 21);
    const auto fn = [](double x, double s) { return (x * x - x) * (s * s * s + 1.0); };
    const AffFunction f =
        AffFunction::sample(g, [&](double x, double a) { return cplx(fn(x, std::log(a))); });
    CHECK(interpolate(f, 0.3127, -0.42).real() == doctest::Approx(fn(0.3127, -0.42)).epsilon(1e-12));
    CHECK(interpolate(f, 5.0, 0.0) == cplx(0.0));
  }

  TEST_CASE("grid mismatch is rejected") {
    const Signal a = log_gaussian_signal(LogGrid(0.0, 1.0, 5), 0.0, 1.0);
    const Signal b = log_gaussian_signal(LogGrid(0.0, 1.0, 6), 0.0, 1.0);
    CHECK_THROWS_AS(inner_product(a, b), std::invalid_argument);
  }
}
