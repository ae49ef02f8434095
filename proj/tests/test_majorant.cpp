#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "krzyz/majorant.hpp"
#include "test_support.hpp"

using namespace krzyz;

namespace {

const std::vector<mpq_class> kGrid = {
    make_rational(1, 10), make_rational(1, 3), make_rational(1, 2),
    make_rational(1),     make_rational(3, 2), make_rational(2),
    make_rational(3)};

}  // namespace

TEST_CASE("half-plane coefficients") {
  CHECK(halfplane_coeffs(0) == TruncatedSeries::constant(Scalar::integer(1), 0));
  const auto h3 = halfplane_coeffs(3);
  CHECK(h3[0] == Scalar::integer(1));
  for (int k = 1; k <= 3; ++k) CHECK(h3[k] == Scalar::integer(2));

  // definition check: (1+z)/(1-z) by long division at order 5
  std::vector<Scalar> num(6, Scalar::integer(0)), den(6, Scalar::integer(0));
  num[0] = Scalar::integer(1);
  num[1] = Scalar::integer(1);
  den[0] = Scalar::integer(1);
  den[1] = Scalar::integer(-1);
  CHECK(TruncatedSeries(num) / TruncatedSeries(den) == halfplane_coeffs(5));
}

TEST_CASE("majorant rational part starts 1, -2t, 2t^2-2t") {
  for (const mpq_class& t : kGrid) {
    const MajorantCoefficients f = fstar_coeffs(t, 8);
    CHECK(f.rational_part[0] == Scalar::integer(1));
    CHECK(f.rational_part[1] == Scalar(GaussianRational(-2 * t)));
    CHECK(f.rational_part[2] == Scalar(GaussianRational(2 * t * t - 2 * t)));
  }
  CHECK_THROWS_AS(fstar_coeffs(mpq_class(0), 3), NonpositiveParameter);
  CHECK_THROWS_AS(fstar_coeffs(mpq_class(-1), 3), NonpositiveParameter);
}

TEST_CASE("normalized coefficients") {
  for (const mpq_class& t : kGrid) {
    const TruncatedSeries f = normalized_coeffs(t, 6);
    CHECK(f[1] == Scalar::integer(1));
    CHECK(f[2] == Scalar(GaussianRational(1 - t)));
    CHECK(f[0] == Scalar(GaussianRational(mpq_class(-1) / (2 * t))));
    // -2t * F = U exactly
    const Scalar m2t{GaussianRational(-2 * t)};
    CHECK(m2t * f == fstar_coeffs(t, 6).rational_part);
  }
  // the worked values at t = 1/2
  const TruncatedSeries f = normalized_coeffs(make_rational(1, 2), 5);
  CHECK(f[2] == Scalar::rational(1, 2));
  CHECK(f[3] == Scalar::rational(1, 6));
  CHECK(f[4] == Scalar::rational(-1, 24));
  CHECK(f[5] == Scalar::rational(-19, 120));
}

TEST_CASE("horizon and bound") {
  const BoundHorizon h = bound_horizon(make_rational(1, 2));
  CHECK(h.horizon == 5);
  CHECK(h.boundary);
  CHECK(h.bound == doctest::Approx(1.0 * std::exp(-0.5)).epsilon(1e-15));

  CHECK(bound_horizon(mpq_class(1)).horizon == 3);
  CHECK(bound_horizon(mpq_class(1)).boundary);
  CHECK(bound_horizon(mpq_class(2)).horizon == 2);
  CHECK(bound_horizon(mpq_class(2)).boundary);
  CHECK(bound_horizon(mpq_class(3)).horizon == 1);
  CHECK(!bound_horizon(mpq_class(3)).boundary);
  CHECK(bound_horizon(mpq_class(3)).bound ==
        doctest::Approx(6.0 * std::exp(-3.0)).epsilon(1e-15));

  CHECK_THROWS_AS(bound_horizon(mpq_class(0)), NonpositiveParameter);
}

TEST_CASE("horizon is nonincreasing and hits the boundary family") {
  int prev = 1 << 30;
  for (const mpq_class& t : kGrid) {
    const int n = bound_horizon(t).horizon;
    CHECK(n <= prev);
    prev = n;
  }
  for (int m = 2; m <= 10; ++m) {
    const BoundHorizon h = bound_horizon(mpq_class(2) / (m - 1));
    CHECK(h.horizon == m);
    CHECK(h.boundary);
  }
}

TEST_CASE("identity subordination returns the majorant itself") {
  for (const mpq_class& t : kGrid) {
    const TruncatedSeries u = fstar_coeffs(t, 20).rational_part;
    const TruncatedSeries z =
        TruncatedSeries::monomial(Scalar::integer(1), 1, 20);
    CHECK(compose(u, z) == u);
  }
}

TEST_CASE("extremal rotation coefficients") {
  const mpq_class t = make_rational(1, 2);

  // phi = 0, n = 1 reproduces the plain majorant
  const auto id = extremal_coeffs(t, 1, Rotation::quarter(0), 6);
  CHECK(id.rational_part == fstar_coeffs(t, 6).rational_part);

  // phi = 0, n = 2: support on even indices only, -2t at z^2
  const auto sq = extremal_coeffs(t, 2, Rotation::quarter(0), 4);
  CHECK(sq.rational_part[0] == Scalar::integer(1));
  CHECK(sq.rational_part[1] == Scalar::integer(0));
  CHECK(sq.rational_part[2] == Scalar(GaussianRational(-2 * t)));
  CHECK(sq.rational_part[3] == Scalar::integer(0));

  // support is contained in multiples of n
  for (int n = 1; n <= 4; ++n) {
    const auto e = extremal_coeffs(t, n, Rotation::quarter(1), 12);
    for (int k = 0; k <= 12; ++k)
      if (k % n != 0) CHECK(e.rational_part[k] == Scalar::integer(0));
  }

  // |coefficient at z^n| = 2t/e^t for every quarter turn: normalized by
  // -2t the squared modulus is exactly 1
  for (int q = 0; q < 4; ++q) {
    const auto e = extremal_coeffs(t, 3, Rotation::quarter(q), 6);
    const Scalar c = e.rational_part[3];
    CHECK(c.norm_sq() == Scalar(GaussianRational(4 * t * t)));
  }
}

TEST_CASE("non-quarter rotations are float-only") {
  CHECK_THROWS_AS(
      extremal_coeffs(mpq_class(1), 1, Rotation::angle(0.7), 3, Mode::exact),
      NonrationalRotationInExactMode);
  const auto e =
      extremal_coeffs(mpq_class(1), 1, Rotation::angle(0.7), 3, Mode::floating);
  const std::complex<double> lambda = e.rational_part[1].to_complex();
  CHECK(std::abs(std::abs(lambda / std::complex<double>(-2.0)) - 1.0) < 1e-12);
}
