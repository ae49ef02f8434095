#pragma once

#include <optional>
#include <vector>

#include "krzyz/series.hpp"

namespace krzyz {

// The segment {h}_1..{h}_n of a Caratheodory-class candidate; {h}_0 = 1 is
// implicit. Positivity of the function is what the Toeplitz minors test.
struct CaratheodorySegment {
  std::vector<Scalar> coeffs;
  int size() const { return static_cast<int>(coeffs.size()); }
};

enum class ExtensionKind { all_positive, positive_then_zero, indefinite };

// Trichotomy of the Caratheodory-Toeplitz criterion. For
// positive_then_zero, `index` is the first zero minor (all later ones are
// zero too, and the extension is unique). For indefinite, `index` is the
// first minor that breaks the pattern: the first negative one, or the
// first nonzero one after a zero.
struct Classification {
  ExtensionKind kind = ExtensionKind::all_positive;
  int index = -1;
};

const char* extension_kind_name(ExtensionKind k);

struct ToeplitzMinorReport {
  std::optional<mpq_class> t;     // set when the segment came from the
                                  // closed-form coefficients
  std::vector<mpq_class> minors;  // M_0..M_n, always real for Hermitian data
  Classification classification;
};

/// {h}_1..{h}_{order-1} of h = 1 + z f''/f', by truncated-series division.
/// Requires the normalization f_0 = 0, f_1 = 1 and order(f) >= 2. The map
/// ignores {f}_0, so a majorant whose constant coefficient was replaced by
/// zero is a valid input.
CaratheodorySegment convex_to_caratheodory(const TruncatedSeries& f);

/// Inverse map: f' = exp(int_0^z (h(v)-1)/v dv), then f = int_0^z f'.
/// Output order is n+1 for a segment of length n; exact mode stays exact.
TruncatedSeries caratheodory_to_convex(const CaratheodorySegment& h);

/// The closed form {h}_j = 2(1-jt) for j = 1..n.
CaratheodorySegment h_closed_form(const mpq_class& t, int n);

/// Exact principal minors M_0..M_n of the Hermitian Toeplitz matrices with
/// diagonal 2 and upper entries {h}_{j-i}, by fraction-free (Bareiss)
/// elimination over Gaussian rationals, classified per the
/// Caratheodory-Toeplitz trichotomy. Exact mode only.
ToeplitzMinorReport toeplitz_minors(const CaratheodorySegment& h);

/// 2^{2n} t^n (2-nt), the closed-form value of M_n for the segment from
/// h_closed_form.
mpq_class closed_form_minor(const mpq_class& t, int n);

struct ExtensionDecision {
  bool extendable = false;  // n <= 2/t + 1, exact comparison
  bool unique = false;      // n >= 2 and t = 2/(n-1) exactly
};

/// Whether the degree-n segment of the normalized majorant extends to a
/// convex univalent function, and whether that extension is unique.
ExtensionDecision extendability_check(const mpq_class& t, int n);

/// Minors M_0..M_{n-1} deciding extendability of the degree-n segment:
/// toeplitz_minors(h_closed_form(t, n-1)) with the t field set.
ToeplitzMinorReport minors_for_horizon(const mpq_class& t, int n);

}  // namespace krzyz
