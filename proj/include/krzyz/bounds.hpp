#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krzyz/caratheodory.hpp"
#include "krzyz/majorant.hpp"
#include "krzyz/schur.hpp"

namespace krzyz {

// One coefficient of F(omega(z), t) compared against the normalized bound
// |{f}_n / {F*}_1(t)|^2 <= 1. `pass` is empty for conjectural probe rows,
// which carry no verdict.
struct BoundCheckRow {
  int index = 0;
  Scalar coefficient;  // normalized {f}_n
  Scalar sq_modulus;   // |{f}_n|^2, real-valued, same mode
  Scalar margin;       // 1 - sq_modulus
  std::optional<bool> pass;
  std::optional<bool> below_conjectural;  // probe rows only, informational
};

// Sharpness structure of an extremal rotation F*(lambda z^n, t): the bound
// is attained exactly at index n, coefficients off the n-grid vanish, and
// indices on the n-grid stay within the bound.
struct ExtremalVerdict {
  int n = 0;
  bool equality_at_n = false;
  bool zero_off_support = false;
  bool bounded_on_support = false;
  bool ok() const { return equality_at_n && zero_off_support && bounded_on_support; }
};

struct BoundCheckResult {
  mpq_class t;
  Mode mode = Mode::exact;
  BoundHorizon horizon;
  std::string omega_descriptor;
  std::vector<BoundCheckRow> rows;
  bool all_pass = true;        // rows with a verdict
  double bound_value = 0.0;    // 2t/e^t, informational (transcendental)
  std::optional<double> conjectural_sq;  // probe: ((2/e)/(2t e^{-t}))^2
  std::optional<ExtremalVerdict> extremal;
  bool ok() const { return all_pass && (!extremal || extremal->ok()); }
};

/// {f}_n = sum_{j=1..n} {G}_j {omega^j}_n for n = 1..n_max, assembled from
/// power_coefficients. Agrees exactly with compose(G, omega) coefficients.
std::vector<Scalar> subordination_coeffs(const TruncatedSeries& G,
                                         const TruncatedSeries& omega,
                                         int n_max);

/// Check |{f}_n|^2 <= 1 for f = F(omega(z), t) and n = 1..N(t). Exact mode
/// compares squared moduli as rationals; float mode passes when the margin
/// stays above -1e-12.
BoundCheckResult verify_bound(const mpq_class& t, const TruncatedSeries& omega,
                              Mode mode,
                              std::string omega_descriptor = "explicit-series");

/// Sharpness check for the rotation omega = lambda z^n, 1 <= n <= N(t).
BoundCheckResult extremal_equality(const mpq_class& t, int n,
                                   const Rotation& rot,
                                   Mode mode = Mode::exact);

/// Normalized squared moduli for indices beyond the proven horizon,
/// n_lo > N(t). No verdict: rows only report position against the
/// conjectural line ((2/e)/(2t e^{-t}))^2, clearly labeled as such.
BoundCheckResult probe_beyond(const mpq_class& t, const TruncatedSeries& omega,
                              int n_lo, int n_hi,
                              std::string omega_descriptor = "explicit-series");

/// k when the series agrees with lambda z^k (|lambda| = 1) through
/// `up_to`; empty otherwise. Used to exempt genuine rotations from
/// strict-inequality checks.
std::optional<int> rotation_power(const TruncatedSeries& omega, int up_to);

// Deterministic seed-ordered sweep of sampled Blaschke products through
// verify_bound. Sample i uses seed_base + i and degree i mod (degree_cap+1).
struct SweepResult {
  mpq_class t;
  Mode mode = Mode::exact;
  BoundHorizon horizon;
  int samples = 0;
  int degree_cap = 0;
  std::uint64_t seed_base = 0;
  std::vector<BoundCheckResult> results;
  bool all_pass = true;
  int failed_rows = 0;
  Scalar min_margin;  // smallest margin seen across all rows
};

SweepResult bound_check_sweep(const mpq_class& t, int samples, int degree_cap,
                              std::uint64_t seed_base, Mode mode);

struct WorkedExampleStage {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Every intermediate of the end-to-end degenerate-extension example at
// t = 1/2, plus the float-mode cross-check of the closed-form integrand
// against exp(int (h-1)/v dv).
struct WorkedExampleReport {
  mpq_class t;
  TruncatedSeries normalized;      // z + z^2/2 + z^3/6 - z^4/24 - 19z^5/120
  CaratheodorySegment h_segment;   // (1, 0, -1, -2)
  ToeplitzMinorReport minors;      // (2, 3, 4, 4, 0)
  ExtensionDecision decision;      // extendable and unique
  TruncatedSeries omega_series;    // -z/2 + z^2/4 + 3z^3/8 + 9z^4/16
  SchurParameters schur_params;    // (-1/2, 1/3, 1/2, 1), degenerate at 3
  RationalInner inner;             // z(1-z^2-2z^3)/(-2-z+z^3)
  GaussPoly h_numerator;           // 1+z-z^3-z^4
  GaussPoly h_denominator;         // 1+z^4
  std::vector<double> fprime_coeffs;     // first 10 coefficients
  std::vector<double> integrand_coeffs;  // closed-form side
  std::vector<double> residuals;
  double max_residual = 0.0;
  std::vector<WorkedExampleStage> stages;
  bool all_ok = false;
};

WorkedExampleReport reproduce_worked_example();

/// P(v)^beta for a float series with P(0) = 1, via exp(beta log P).
TruncatedSeries pow_series(const TruncatedSeries& p, double beta);

}  // namespace krzyz
