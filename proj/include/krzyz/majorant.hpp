#pragma once

#include <string>

#include "krzyz/series.hpp"

namespace krzyz {

// Coefficients of the extremal family F*(z,t) = e^{-t} U(z), stored as the
// symbolic prefactor e^{-t} times the exact rational series
// U(z) = exp(-2t z/(1-z)). The prefactor is never evaluated in exact mode;
// {F*}_n = e^{-t} {U}_n.
struct MajorantCoefficients {
  mpq_class t;
  TruncatedSeries rational_part;  // {U}_0 = 1, {U}_1 = -2t (exact mode;
                                  // float-mode rotations produce a float
                                  // series, see extremal_coeffs)
  static constexpr const char* prefactor = "e^-t";
};

// Where the sharp bound applies: the largest n with n <= 2/t + 1, the bound
// value 2t/e^t, and whether t sits exactly on the uniqueness boundary
// t = 2/(N-1).
struct BoundHorizon {
  mpq_class t;
  double bound = 0.0;
  int horizon = 0;
  bool boundary = false;
};

/// 1 + 2z + 2z^2 + ... + 2z^order, the half-plane map (1+z)/(1-z).
TruncatedSeries halfplane_coeffs(int order);

/// U(z) = exp(-2t z/(1-z)) truncated; throws NonpositiveParameter for t <= 0.
MajorantCoefficients fstar_coeffs(const mpq_class& t, int order);

/// The normalization -U(z)/(2t): all-rational, coefficient 1 at z^1 and
/// -1/(2t) at z^0 (callers working with the subordination formula ignore
/// the constant coefficient).
TruncatedSeries normalized_coeffs(const mpq_class& t, int order);

BoundHorizon bound_horizon(const mpq_class& t);

// Unimodular rotation e^{i phi}. Quarter turns are Gaussian-rational and
// stay exact; any other angle exists only in float mode.
class Rotation {
 public:
  /// e^{i k pi/2}; k taken mod 4.
  static Rotation quarter(int k);
  static Rotation angle(double phi);

  bool is_quarter() const { return quarter_ >= 0; }
  /// lambda as a scalar of the given mode; throws
  /// NonrationalRotationInExactMode for a non-quarter-turn in exact mode.
  Scalar unimodular(Mode mode) const;
  double phi() const;
  std::string str() const;

 private:
  Rotation() = default;
  int quarter_ = -1;
  double phi_ = 0.0;
};

/// Coefficients of F*(e^{i phi} z^n, t): support on multiples of n, value
/// {U}_k lambda^k at z^{kn}. Requires n >= 1 and order >= n.
MajorantCoefficients extremal_coeffs(const mpq_class& t, int n,
                                     const Rotation& rot, int order,
                                     Mode mode = Mode::exact);

}  // namespace krzyz
