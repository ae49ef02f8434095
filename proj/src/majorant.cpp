#include "krzyz/majorant.hpp"

#include <cmath>

namespace krzyz {

namespace {

void require_positive(const mpq_class& t) {
  if (t <= 0) throw NonpositiveParameter("t must be positive");
}

}  // namespace

TruncatedSeries halfplane_coeffs(int order) {
  if (order < 0) throw Error("negative order");
  std::vector<Scalar> v(order + 1, Scalar::integer(2));
  v[0] = Scalar::integer(1);
  return TruncatedSeries(std::move(v));
}

MajorantCoefficients fstar_coeffs(const mpq_class& t, int order) {
  require_positive(t);
  // -2t z/(1-z) = -2t (z + z^2 + ...)
  std::vector<Scalar> arg(order + 1, Scalar(GaussianRational(-2 * t)));
  arg[0] = Scalar::integer(0);
  return MajorantCoefficients{t, exp_series(TruncatedSeries(std::move(arg)))};
}

TruncatedSeries normalized_coeffs(const mpq_class& t, int order) {
  require_positive(t);
  const MajorantCoefficients f = fstar_coeffs(t, order);
  mpq_class inv = -1 / (2 * t);
  return Scalar(GaussianRational(inv)) * f.rational_part;
}

BoundHorizon bound_horizon(const mpq_class& t) {
  require_positive(t);
  BoundHorizon h;
  h.t = t;
  h.bound = 2.0 * t.get_d() * std::exp(-t.get_d());
  const mpq_class edge = 2 / t + 1;
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), edge.get_num().get_mpz_t(),
             edge.get_den().get_mpz_t());
  h.horizon = static_cast<int>(n.get_si());
  h.boundary = edge.get_den() == 1;
  return h;
}

Rotation Rotation::quarter(int k) {
  Rotation r;
  r.quarter_ = ((k % 4) + 4) % 4;
  r.phi_ = r.quarter_ * std::acos(0.0);  // k * pi/2
  if (r.quarter_ == 3) r.phi_ = -std::acos(0.0);
  return r;
}

Rotation Rotation::angle(double phi) {
  Rotation r;
  r.phi_ = phi;
  return r;
}

Scalar Rotation::unimodular(Mode mode) const {
  if (mode == Mode::exact) {
    if (!is_quarter())
      throw NonrationalRotationInExactMode(
          "exact mode supports only quarter-turn rotations");
    switch (quarter_) {
      case 0:
        return Scalar::integer(1);
      case 1:
        return Scalar(GaussianRational::i());
      case 2:
        return Scalar::integer(-1);
      default:
        return Scalar(-GaussianRational::i());
    }
  }
  return Scalar(std::complex<double>(std::cos(phi()), std::sin(phi())));
}

double Rotation::phi() const { return phi_; }

std::string Rotation::str() const {
  switch (quarter_) {
    case 0:
      return "0";
    case 1:
      return "pi/2";
    case 2:
      return "pi";
    case 3:
      return "-pi/2";
    default: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", phi_);
      return buf;
    }
  }
}

MajorantCoefficients extremal_coeffs(const mpq_class& t, int n,
                                     const Rotation& rot, int order,
                                     Mode mode) {
  require_positive(t);
  if (n < 1) throw Error("rotation power n must be >= 1");
  if (order < n) throw InsufficientOrder("order must reach z^n");
  const Scalar lambda = rot.unimodular(mode);
  TruncatedSeries u = fstar_coeffs(t, order / n).rational_part;
  if (mode == Mode::floating) u = u.to_float();
  std::vector<Scalar> out(order + 1, Scalar::zero(mode));
  Scalar lk = Scalar::one(mode);
  for (int k = 0; k * n <= order; ++k) {
    out[k * n] = u[k] * lk;
    lk = lk * lambda;
  }
  return MajorantCoefficients{t, TruncatedSeries(std::move(out))};
}

}  // namespace krzyz
