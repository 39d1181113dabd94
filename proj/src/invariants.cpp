#include "hlf/invariants.hpp"

namespace hlf {

Int weighted_separating_sum(const FibrationNumerics& f) {
    return f.weighted_sum();
}

Rational signature(const FibrationNumerics& f) {
    const Int D = 2 * Int(f.g) + 1;
    const Int x = f.weighted_sum();
    const Int s = f.separating_total();
    return Rational(-(Int(f.g) + 1) * f.n + 4 * x, D) - Rational(s);
}

InvariantSet compute_invariants(const FibrationNumerics& f) {
    InvariantSet inv;
    const Int g(f.g);
    const Int D = 2 * g + 1;
    inv.x = f.weighted_sum();
    inv.s = f.separating_total();
    inv.sigma = signature(f);
    inv.euler = f.n + inv.s - 4 * (g - 1);
    inv.chi_h = Rational(f.n * g + 4 * inv.x, 4 * D) - Rational(g - 1);
    inv.c1sq = Rational(2 * inv.euler) + Rational(3) * inv.sigma;
    inv.k_f_sq = inv.c1sq + Rational(8 * (g - 1));
    inv.chi_f = inv.chi_h + Rational(g - 1);
    inv.slope = slope(f);
    inv.ratio = Rational(inv.s, f.n);
    return inv;
}

Rational slope(const FibrationNumerics& f) {
    const Int g(f.g);
    const Int x = f.weighted_sum();
    const Int s = f.separating_total();
    return Rational(4 * (f.n * (g - 1) - s * (2 * g + 1) + 12 * x), f.n * g + 4 * x);
}

SlopeForms slope_alternate_forms(const FibrationNumerics& f) {
    const Int g(f.g);
    const Int s = f.separating_total();
    const Int x = f.weighted_sum();
    const Rational sigma = signature(f);
    const Rational chi_f(f.n * g + 4 * x, 4 * (2 * g + 1));
    const Rational total(f.n + s);
    const Rational denom = sigma + total;  // equals 4*chi_f, nonzero

    SlopeForms out;
    out.via_chi_f = Rational(12) - total / chi_f;
    out.via_sigma_deficit = Rational(12) - Rational(4) * total / denom;
    out.via_sigma_excess = Rational(8) + Rational(4) * sigma / denom;
    return out;
}

Rational signature_from_slope(const Rational& lambda, const Int& n_plus_s) {
    if (lambda == Rational(12))
        throw std::domain_error("signature_from_slope: lambda = 12 does not arise from any fibration");
    return -(lambda - Rational(8)) / (lambda - Rational(12)) * Rational(n_plus_s);
}

}  // namespace hlf
