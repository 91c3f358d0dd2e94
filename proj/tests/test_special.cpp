#include <cmath>

#include "affqha/special.hpp"
#include "common.hpp"

using namespace testing;

// Reference values computed to 20 digits with an arbitrary-precision library.
TEST_SUITE("special") {
  TEST_CASE("lambda") {
    CHECK(lambda_eval(0.0) == 1.0);
    CHECK(lambda_eval(1.0) == doctest::Approx(1.5819767068693264244).epsilon(1e-15));
    CHECK(lambda_eval(-2.0) == doctest::Approx(0.31303528549933130364).epsilon(1e-15));
    CHECK(lambda_eval(0.5) == doctest::Approx(1.2707470412683991421).epsilon(1e-15));
    CHECK(lambda_eval(1e-6) == doctest::Approx(1.0000005000000833333).epsilon(1e-15));
    CHECK(lambda_eval(30.0) == doctest::Approx(30.000000000002807287).epsilon(1e-15));
    CHECK(lambda_derivative(0.7) == doctest::Approx(0.61479392196296853585).epsilon(1e-13));
    CHECK(lambda_derivative(0.0) == doctest::Approx(0.5).epsilon(1e-13));
  }

  TEST_CASE("lambda inverse") {
    CHECK(lambda_inverse(2.0) == doctest::Approx(1.5936242600400400923).epsilon(1e-14));
    CHECK(lambda_inverse(0.25) == doctest::Approx(-2.3366629822630538812).epsilon(1e-14));
    CHECK(lambda_inverse(10.0) == doctest::Approx(9.9995457944465351731).epsilon(1e-14));
    CHECK(lambda_inverse(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(lambda_inverse(0.0), std::domain_error);
  }

  TEST_CASE("Lambert W on both branches") {
    CHECK(lambert_w(WBranch::principal, 1.0) == doctest::Approx(0.567143290409783873).epsilon(1e-15));
    CHECK(lambert_w(WBranch::lower, -0.1) == doctest::Approx(-3.5771520639572972184).epsilon(1e-15));
    CHECK(lambert_w(WBranch::principal, -0.3) == doctest::Approx(-0.48940222718021496904).epsilon(1e-15));
    CHECK(lambert_w(WBranch::principal, -std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK(lambert_w(WBranch::principal, 0.0) == 0.0);
    CHECK_THROWS(lambert_w(WBranch::principal, -0.5));
    CHECK_THROWS(lambert_w(WBranch::lower, 0.5));
  }

  TEST_CASE("sigma") {
    CHECK(sigma_eval(-0.5) == doctest::Approx(-1.756431208626169677).epsilon(1e-14));
    CHECK(sigma_eval(-2.0) == doctest::Approx(-0.40637573995995990768).epsilon(1e-14));
    CHECK(sigma_eval(-5.0) == doctest::Approx(-0.034885768255723696301).epsilon(1e-14));
    CHECK(sigma_eval(-1.0) == -1.0);
    CHECK_THROWS_AS(sigma_eval(0.5), std::domain_error);
  }

  TEST_CASE("Laguerre polynomials and functions") {
    CHECK(laguerre_poly(0, 1.5, 2.0) == 1.0);
    CHECK(laguerre_poly(1, 1.5, 2.0) == doctest::Approx(0.5));
    CHECK(laguerre_poly(3, 1.5, 2.0) == doctest::Approx(-1.5208333333333333333).epsilon(1e-14));
    CHECK(laguerre_fn(0, 1.0, 1.0) == doctest::Approx(0.6065306597126334236).epsilon(1e-14));
    CHECK(laguerre_fn(2, 1.0, 1.3) == doctest::Approx(-0.021550333786573012385).epsilon(1e-12));
    CHECK(laguerre_fn(4, 0.5, 3.7) == doctest::Approx(0.54062333800900962157).epsilon(1e-13));
    CHECK_THROWS(laguerre_fn(-1, 1.0, 1.0));
    CHECK_THROWS(laguerre_fn(0, 1.0, 0.0));
  }

  TEST_CASE("log-Gaussian") {
    CHECK(log_gaussian(1.5, 0.2, 0.6) == doctest::Approx(0.91447708505327029649).epsilon(1e-14));
  }
}
