#pragma once

#include "hlf/fibration.hpp"

namespace hlf {

/// Exact numerical invariants of a fibration census. With D = 2g+1:
///
///   x      = sum_h h(g-h) s_h
///   s      = sum_h s_h
///   sigma  = (-(g+1)n + 4x)/D - s
///   euler  = n + s - 4(g-1)
///   chi_h  = (ng + 4x)/(4D) - (g-1)
///   c1sq   = 2*euler + 3*sigma
///   k_f_sq = c1sq + 8(g-1)
///   chi_f  = chi_h + g - 1     (= (ng+4x)/(4D), always > 0)
///   slope  = k_f_sq / chi_f
///   ratio  = s / n
///
/// sigma and chi_h are rationals here by design: integrality is an
/// admissibility filter applied downstream, not an assumption, so the core
/// must be able to represent the non-integral tuples the filter rejects.
struct InvariantSet {
    Int x;
    Int s;
    Rational sigma;
    Int euler;
    Rational chi_h;
    Rational c1sq;
    Rational k_f_sq;
    Rational chi_f;
    Rational slope;
    Rational ratio;
};

Int weighted_separating_sum(const FibrationNumerics& f);

Rational signature(const FibrationNumerics& f);

InvariantSet compute_invariants(const FibrationNumerics& f);

/// lambda = 4(n(g-1) - s(2g+1) + 12x)/(ng + 4x), the direct formula.
Rational slope(const FibrationNumerics& f);

/// The three equivalent slope expressions
///   12 - (n+s)/chi_f,  12 - 4(n+s)/(sigma+n+s),  8 + 4*sigma/(sigma+n+s),
/// each computed along its own route. All equal slope(f); the equality is a
/// theorem, exercised by tests and by the sweep identity tallies.
struct SlopeForms {
    Rational via_chi_f;
    Rational via_sigma_deficit;
    Rational via_sigma_excess;
};

SlopeForms slope_alternate_forms(const FibrationNumerics& f);

/// sigma = -(lambda-8)/(lambda-12) * (n+s). Throws std::domain_error at
/// lambda == 12, which no valid fibration attains (lambda = 12 - (n+s)/chi_f
/// with n+s > 0, chi_f > 0).
Rational signature_from_slope(const Rational& lambda, const Int& n_plus_s);

}  // namespace hlf
