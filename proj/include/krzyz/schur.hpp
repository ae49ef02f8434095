#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krzyz/poly.hpp"
#include "krzyz/series.hpp"

namespace krzyz {

// Finite inner function z^m lambda prod_i (a_i - z)/(1 - conj(a_i) z):
// unimodular on the circle, vanishing at 0 to order m.
struct BlaschkeProduct {
  int zero_order = 1;                    // m >= 1
  std::vector<GaussianRational> zeros;   // all |a_i| < 1
  GaussianRational unimodular{1};        // lambda, |lambda| = 1

  /// Degree of phi = omega/z, which is where the Schur recursion
  /// degenerates: (m - 1) + number of zeros.
  int inner_degree() const {
    return zero_order - 1 + static_cast<int>(zeros.size());
  }
  std::string descriptor() const;
};

// Schur parameters gamma_0, gamma_1, ... of phi = omega/z. |gamma_k| < 1
// until an optional terminal index d with |gamma_d| = 1; a set degeneracy
// means the represented function is a finite Blaschke product of degree d.
struct SchurParameters {
  std::vector<Scalar> gammas;
  std::optional<int> degeneracy;
  bool numerically_degenerate = false;  // float mode: |1-|gamma|^2| < 1e-9
};

// Rational inner function num/den with numerator(0) = 0 and
// denominator(0) != 0. num = lambda z den*(z) where den* reverses and
// conjugates the denominator; lambda is reported separately.
struct RationalInner {
  GaussPoly numerator;
  GaussPoly denominator;
  GaussianRational unimodular{1};

  std::string str() const;
};

enum class CayleyDirection { c_to_omega, omega_to_c };

/// The involution x -> (1-x)/(1+x) linking the Caratheodory normalization
/// (x(0) = 1) and the Schur-class normalization (x(0) = 0). Output order
/// equals input order.
TruncatedSeries cayley(const TruncatedSeries& x, CayleyDirection dir);

/// Run the Schur recursion on phi = omega/z:
///   gamma_k = phi_k(0),  phi_{k+1} = (1/z)(phi_k - gamma_k)/(1 - conj(gamma_k) phi_k).
/// Stops at degeneracy (|gamma| = 1, exactly in exact mode, within 1e-9 of
/// 1 in squared modulus in float mode) or when the truncation order is
/// exhausted. Throws NotInOmega when |gamma_k| > 1.
SchurParameters schur_parameters(const TruncatedSeries& omega);

/// Inverse recursion: rebuilds omega = z phi from the parameters, with an
/// implicit zero tail after the last parameter when no degeneracy is set.
TruncatedSeries schur_synthesis(const SchurParameters& params, int order);

/// Recover the rational inner function behind a degenerate omega series by
/// solving the coefficient-matching system
///   den(z) omega(z) = lambda z den*(z)  (mod z^{order+1})
/// for den of degree < `degree` over Gaussian rationals. The solution is
/// canonicalized to primitive Gaussian-integer coefficients with the
/// denominator's leading coefficient rotated into the sector
/// arg in (-pi/4, pi/4]. Exact mode only.
RationalInner reconstruct_inner(const TruncatedSeries& omega, int degree);

/// Exact Taylor expansion of a Blaschke product.
TruncatedSeries blaschke_series(const BlaschkeProduct& b, int order);

/// Exact Taylor expansion of a rational inner function.
TruncatedSeries rational_series(const RationalInner& r, int order,
                                Mode mode = Mode::exact);

GaussianRational evaluate(const RationalInner& r, const GaussianRational& z);

/// Deterministic pseudo-random Blaschke product: zero_order uniform in
/// {1,2}, lambda uniform in {1,-1,i,-i}, `degree` zeros p/q + (r/q)i with
/// q <= denominator_bound rejected to modulus < 1. Same seed, same product.
BlaschkeProduct sample_omega(std::uint64_t seed, int degree,
                             int denominator_bound = 8);

}  // namespace krzyz
