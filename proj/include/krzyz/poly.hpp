#pragma once

#include <string>
#include <vector>

#include "krzyz/rational.hpp"

namespace krzyz {

// Dense Gaussian-rational polynomial, coefficients by ascending degree.
// Unlike TruncatedSeries there is no truncation: these are exact finite
// polynomials (rational inner functions, Toeplitz cofactors, ...).
using GaussPoly = std::vector<GaussianRational>;

GaussPoly poly_add(const GaussPoly& a, const GaussPoly& b);
GaussPoly poly_sub(const GaussPoly& a, const GaussPoly& b);
GaussPoly poly_mul(const GaussPoly& a, const GaussPoly& b);
GaussPoly poly_scale(const GaussianRational& c, const GaussPoly& a);

/// Drop trailing zero coefficients (keeps at least the constant term).
GaussPoly poly_trim(const GaussPoly& a);

bool poly_equal(const GaussPoly& a, const GaussPoly& b);

GaussianRational poly_eval(const GaussPoly& a, const GaussianRational& z);

int poly_degree(const GaussPoly& a);  // -1 for the zero polynomial

/// Euclidean gcd in the Gaussian integers (inputs must have integer parts).
GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b);

/// Put a fraction of polynomials into canonical primitive form: clear
/// rational denominators, divide out the common Gaussian-integer content,
/// rotate by a quarter turn so the denominator's leading coefficient has
/// argument in (-pi/4, pi/4]. The represented function is unchanged.
void canonical_fraction(GaussPoly& num, GaussPoly& den);

/// "1-z^2-2z^3" style rendering, "0" for the zero polynomial.
std::string poly_str(const GaussPoly& a);

}  // namespace krzyz
