#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krzyz/schur.hpp"
#include "krzyz/majorant.hpp"
#include "test_support.hpp"

using namespace krzyz;
using test::Rng;

namespace {

TruncatedSeries from_rats(std::initializer_list<std::pair<long, long>> cs) {
  std::vector<Scalar> v;
  for (auto [p, q] : cs) v.push_back(Scalar::rational(p, q));
  return TruncatedSeries(std::move(v));
}

// rational points exactly on the unit circle: (1-s^2 + 2si)/(1+s^2)
GaussianRational circle_point(const mpq_class& s) {
  const mpq_class d = 1 + s * s;
  return GaussianRational((1 - s * s) / d, 2 * s / d);
}

const TruncatedSeries kWorkedOmega =
    from_rats({{0, 1}, {-1, 2}, {1, 4}, {3, 8}, {9, 16}});

}  // namespace

TEST_CASE("Cayley fixes the constants") {
  const auto one = TruncatedSeries::constant(Scalar::integer(1), 4);
  const auto w = cayley(one, CayleyDirection::c_to_omega);
  for (int k = 0; k <= 4; ++k) CHECK(w[k] == Scalar::integer(0));
}

TEST_CASE("Cayley sends the half-plane function to -z") {
  const auto h = halfplane_coeffs(5);
  const auto w = cayley(h, CayleyDirection::c_to_omega);
  CHECK(w == TruncatedSeries::monomial(Scalar::integer(-1), 1, 5));
}

TEST_CASE("Cayley on the degenerate segment gives the worked omega") {
  const auto h = from_rats({{1, 1}, {1, 1}, {0, 1}, {-1, 1}, {-2, 1}});
  CHECK(cayley(h, CayleyDirection::c_to_omega) == kWorkedOmega);
}

TEST_CASE("Cayley checks its normalization") {
  const auto bad = TruncatedSeries::constant(Scalar::integer(2), 3);
  CHECK_THROWS_AS(cayley(bad, CayleyDirection::c_to_omega), BadConstantTerm);
  CHECK_THROWS_AS(cayley(bad, CayleyDirection::omega_to_c), BadConstantTerm);
}

TEST_CASE("Cayley is an involution") {
  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const TruncatedSeries x =
        test::random_exact_series(rng, 8, false, /*unit_constant=*/true);
    CHECK(cayley(cayley(x, CayleyDirection::c_to_omega),
                 CayleyDirection::omega_to_c) == x);
    const TruncatedSeries w = test::random_exact_series(rng, 8, true);
    CHECK(cayley(cayley(w, CayleyDirection::omega_to_c),
                 CayleyDirection::c_to_omega) == w);
  }
}

TEST_CASE("Schur parameters of -z degenerate immediately") {
  const auto p =
      schur_parameters(TruncatedSeries::monomial(Scalar::integer(-1), 1, 4));
  REQUIRE(p.gammas.size() == 1);
  CHECK(p.gammas[0] == Scalar::integer(-1));
  REQUIRE(p.degeneracy.has_value());
  CHECK(*p.degeneracy == 0);
}

TEST_CASE("Schur parameters of a one-zero product") {
  // z(z-a)/(1-az) with a = 1/2: gamma_0 = -1/2, degenerate at index 1
  BlaschkeProduct b;
  b.zero_order = 1;
  b.zeros = {GaussianRational(make_rational(1, 2))};
  b.unimodular = GaussianRational(-1);
  const auto p = schur_parameters(blaschke_series(b, 5));
  CHECK(p.gammas[0] == Scalar::rational(-1, 2));
  REQUIRE(p.degeneracy.has_value());
  CHECK(*p.degeneracy == 1);
}

TEST_CASE("Schur parameters of the worked omega") {
  const auto p = schur_parameters(kWorkedOmega);
  REQUIRE(p.gammas.size() == 4);
  CHECK(p.gammas[0] == Scalar::rational(-1, 2));
  CHECK(p.gammas[1] == Scalar::rational(1, 3));
  CHECK(p.gammas[2] == Scalar::rational(1, 2));
  CHECK(p.gammas[3] == Scalar::integer(1));
  REQUIRE(p.degeneracy.has_value());
  CHECK(*p.degeneracy == 3);
}

TEST_CASE("float mode flags numerical degeneracy instead of deciding") {
  const auto w =
      TruncatedSeries::monomial(Scalar::integer(-1), 1, 4).to_float();
  const SchurParameters p = schur_parameters(w);
  CHECK(p.numerically_degenerate);
  REQUIRE(p.degeneracy.has_value());
  CHECK(*p.degeneracy == 0);

  BlaschkeProduct b;
  b.zeros = {GaussianRational(make_rational(1, 3), make_rational(1, 4))};
  b.unimodular = GaussianRational::i();
  const SchurParameters pf =
      schur_parameters(blaschke_series(b, 6).to_float());
  REQUIRE(pf.degeneracy.has_value());
  CHECK(*pf.degeneracy == 1);
  CHECK(pf.numerically_degenerate);
}

TEST_CASE("the recursion needs at least the z coefficient") {
  CHECK_THROWS_AS(
      schur_parameters(TruncatedSeries::zero(0, Mode::exact)),
      InsufficientOrder);
}

TEST_CASE("a series outside the class is rejected") {
  CHECK_THROWS_AS(
      schur_parameters(TruncatedSeries::monomial(Scalar::integer(2), 1, 3)),
      NotInOmega);
  // phi = 1 + z: unimodular gamma_0 with a nonconstant remainder
  std::vector<Scalar> v{Scalar::integer(0), Scalar::integer(1),
                        Scalar::integer(1)};
  CHECK_THROWS_AS(schur_parameters(TruncatedSeries(std::move(v))), NotInOmega);
}

TEST_CASE("synthesis of elementary parameter lists") {
  SchurParameters zeros;
  zeros.gammas = {Scalar::integer(0), Scalar::integer(0), Scalar::integer(0)};
  const auto w0 = schur_synthesis(zeros, 5);
  for (int k = 0; k <= 5; ++k) CHECK(w0[k] == Scalar::integer(0));

  SchurParameters minus;
  minus.gammas = {Scalar::integer(-1)};
  minus.degeneracy = 0;
  CHECK(schur_synthesis(minus, 4) ==
        TruncatedSeries::monomial(Scalar::integer(-1), 1, 4));
}

TEST_CASE("synthesis round-trips the worked omega") {
  const auto p = schur_parameters(kWorkedOmega);
  CHECK(schur_synthesis(p, 4) == kWorkedOmega);
}

TEST_CASE("synthesis validates parameter moduli") {
  SchurParameters bad;
  bad.gammas = {Scalar::integer(2)};
  CHECK_THROWS_AS(schur_synthesis(bad, 3), InvalidParameters);
  bad.gammas = {Scalar::integer(1), Scalar::rational(1, 2)};
  CHECK_THROWS_AS(schur_synthesis(bad, 3), InvalidParameters);
  bad.gammas = {Scalar::rational(1, 2)};
  bad.degeneracy = 0;
  CHECK_THROWS_AS(schur_synthesis(bad, 3), InvalidParameters);
}

TEST_CASE("parameters/synthesis round-trip on sampled products") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const BlaschkeProduct b = sample_omega(seed, seed % 5);
    const TruncatedSeries w = blaschke_series(b, 10);
    const SchurParameters p = schur_parameters(w);
    CHECK(schur_synthesis(p, 10) == w);
  }
}

TEST_CASE("degeneracy lands at the inner degree with contractive leading "
          "parameters") {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const BlaschkeProduct b = sample_omega(seed, seed % 7);
    const TruncatedSeries w = blaschke_series(b, b.inner_degree() + 3);
    const SchurParameters p = schur_parameters(w);
    REQUIRE(p.degeneracy.has_value());
    CHECK(*p.degeneracy == b.inner_degree());
    for (int k = 0; k < *p.degeneracy; ++k)
      CHECK(p.gammas[k].norm_sq().exact().real() < 1);
  }
}

TEST_CASE("degeneracy needs one order beyond the inner degree") {
  BlaschkeProduct b;
  b.zeros = {GaussianRational(make_rational(1, 2)),
             GaussianRational(make_rational(-1, 3), make_rational(1, 3))};
  const int d = b.inner_degree();  // 2

  const SchurParameters seen = schur_parameters(blaschke_series(b, d + 1));
  REQUIRE(seen.degeneracy.has_value());
  CHECK(*seen.degeneracy == d);

  // one coefficient short: the recursion runs out of data with no verdict
  const SchurParameters cut = schur_parameters(blaschke_series(b, d));
  CHECK(!cut.degeneracy.has_value());
  CHECK(cut.gammas.size() == static_cast<size_t>(d));
}

TEST_CASE("reconstruction of plain rotations") {
  {
    const RationalInner r = reconstruct_inner(
        TruncatedSeries::monomial(Scalar::integer(-1), 1, 4), 1);
    CHECK(poly_equal(r.numerator, {GaussianRational(0), GaussianRational(-1)}));
    CHECK(poly_equal(r.denominator, {GaussianRational(1)}));
    CHECK(r.unimodular == GaussianRational(-1));
    CHECK(r.str() == "-z");
  }
  {
    const RationalInner r = reconstruct_inner(
        TruncatedSeries::monomial(Scalar::integer(1), 2, 4), 2);
    CHECK(poly_equal(r.numerator, {GaussianRational(0), GaussianRational(0),
                                   GaussianRational(1)}));
    CHECK(poly_equal(r.denominator, {GaussianRational(1)}));
    CHECK(r.str() == "z^2");
  }
}

TEST_CASE("reconstruction of the worked omega matches the printed form") {
  const RationalInner r = reconstruct_inner(kWorkedOmega, 4);
  CHECK(poly_equal(r.numerator,
                   {GaussianRational(0), GaussianRational(1),
                    GaussianRational(0), GaussianRational(-1),
                    GaussianRational(-2)}));
  CHECK(poly_equal(r.denominator,
                   {GaussianRational(-2), GaussianRational(-1),
                    GaussianRational(0), GaussianRational(1)}));
  CHECK(r.unimodular == GaussianRational(1));
  CHECK(r.str() == "z(1-z^2-2z^3)/(-2-z+z^3)");
  CHECK(rational_series(r, 4) == kWorkedOmega);
}

TEST_CASE("reconstruction failure modes") {
  // z^2 cannot come from a degree-1 inner function
  CHECK_THROWS_AS(reconstruct_inner(
                      TruncatedSeries::monomial(Scalar::integer(1), 2, 4), 1),
                  SingularSystem);
  // z/2 is not inner at all
  CHECK_THROWS_AS(reconstruct_inner(
                      TruncatedSeries::monomial(Scalar::rational(1, 2), 1, 4), 1),
                  SingularSystem);
  // -z viewed with two free parameters leaves a scaling family
  CHECK_THROWS_AS(reconstruct_inner(
                      TruncatedSeries::monomial(Scalar::integer(-1), 1, 4), 2),
                  RankDeficient);
  CHECK_THROWS_AS(reconstruct_inner(kWorkedOmega.to_float(), 4),
                  FloatModeRefused);
}

TEST_CASE("reconstruction round-trips sampled products") {
  int done = 0;
  for (std::uint64_t seed = 2000; done < 60; ++seed) {
    const BlaschkeProduct b = sample_omega(seed, 1 + seed % 3);
    const int deg = b.inner_degree() + 1;  // free parameters
    const int order = 2 * deg + 2;
    const TruncatedSeries w = blaschke_series(b, order);
    RationalInner r;
    try {
      r = reconstruct_inner(w, deg);
    } catch (const RankDeficient&) {
      continue;  // coincidental zero collisions can lower the true degree
    }
    CHECK(rational_series(r, order) == w);
    CHECK(r.unimodular.norm_sq() == 1);
    ++done;
  }
}

TEST_CASE("reconstructed functions are inner: unimodular on the circle, "
          "contractive inside") {
  const RationalInner r = reconstruct_inner(kWorkedOmega, 4);
  for (long k : {0L, 1L, 2L, 5L, -3L}) {
    const GaussianRational z = circle_point(make_rational(k, 7));
    CHECK(evaluate(r, z).norm_sq() == 1);
  }
  for (auto [p, q] : {std::pair<long, long>{1, 2}, {-2, 5}, {3, 7}, {0, 1}}) {
    const GaussianRational z(make_rational(p, q), make_rational(p, 3 * q + 1));
    if (z.norm_sq() >= 1) continue;
    CHECK(evaluate(r, z).norm_sq() < 1);
  }
}

TEST_CASE("Blaschke expansions of simple products") {
  BlaschkeProduct plain;  // z
  CHECK(blaschke_series(plain, 3) ==
        TruncatedSeries::monomial(Scalar::integer(1), 1, 3));

  BlaschkeProduct zero_at_origin;
  zero_at_origin.zeros = {GaussianRational(0)};
  CHECK(blaschke_series(zero_at_origin, 3) ==
        TruncatedSeries::monomial(Scalar::integer(-1), 2, 3));

  BlaschkeProduct half;
  half.zeros = {GaussianRational(make_rational(1, 2))};
  const auto w = blaschke_series(half, 3);
  CHECK(w == from_rats({{0, 1}, {1, 2}, {-3, 4}, {-3, 8}}));
}

TEST_CASE("Blaschke zeros must live inside the disk") {
  BlaschkeProduct b;
  b.zeros = {GaussianRational(1)};
  CHECK_THROWS_AS(blaschke_series(b, 3), ZeroOutsideDisk);
  b.zeros = {GaussianRational(make_rational(3, 5), make_rational(4, 5))};
  CHECK_THROWS_AS(blaschke_series(b, 3), ZeroOutsideDisk);
}

TEST_CASE("Blaschke products are unimodular at rational circle points") {
  for (std::uint64_t seed = 3000; seed < 3030; ++seed) {
    const BlaschkeProduct b = sample_omega(seed, 2 + seed % 3);
    for (long k : {1L, 3L, -2L}) {
      const GaussianRational z = circle_point(make_rational(k, 5));
      GaussianRational val = b.unimodular;
      for (int i = 0; i < b.zero_order; ++i) val *= z;
      for (const auto& a : b.zeros)
        val *= (a - z) / (GaussianRational(1) - a.conj() * z);
      CHECK(val.norm_sq() == 1);
    }
  }
}

TEST_CASE("sampling is deterministic and respects its invariants") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BlaschkeProduct a = sample_omega(seed, 4);
    const BlaschkeProduct b = sample_omega(seed, 4);
    CHECK(a.zero_order == b.zero_order);
    CHECK(a.unimodular == b.unimodular);
    REQUIRE(a.zeros.size() == b.zeros.size());
    for (size_t i = 0; i < a.zeros.size(); ++i) CHECK(a.zeros[i] == b.zeros[i]);

    CHECK((a.zero_order == 1 || a.zero_order == 2));
    CHECK(a.unimodular.norm_sq() == 1);
    CHECK(a.zeros.size() == 4);
    for (const auto& zero : a.zeros) CHECK(zero.norm_sq() < 1);
  }
}

TEST_CASE("a thousand samples stay inside the Schur class") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const BlaschkeProduct b = sample_omega(seed, 4);
    CHECK_NOTHROW(schur_parameters(blaschke_series(b, 8)));
  }
}
