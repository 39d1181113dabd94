#include "hlf/kernels.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace hlf::kernels {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

/// Fraction with positive denominator; comparisons cross-multiply in 128
/// bits, so operands only need to fit in int64.
struct Q {
    i64 num;
    i64 den;
};

int qcmp(Q a, Q b) {
    const i128 l = static_cast<i128>(a.num) * b.den;
    const i128 r = static_cast<i128>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

bool qle(Q a, Q b) { return qcmp(a, b) <= 0; }
bool qeq(Q a, Q b) { return qcmp(a, b) == 0; }

struct Scaled {
    i64 g, n, s, x;
    i64 D, F, T, signum, lam, chi, chih4D;

    explicit Scaled(const TupleScaled& t)
        : g(t.g), n(t.n), s(t.s), x(t.x) {
        D = 2 * g + 1;
        F = n * g + 4 * x;
        T = n + s;
        signum = 4 * x - (g + 1) * n - D * s;
        lam = 4 * (n * (g - 1) - D * s + 12 * x);
        chi = T - 4 * (g - 1);
        chih4D = F - 4 * D * (g - 1);
    }

    bool integral_chi_h() const { return F % (4 * D) == 0; }
};

FastVerdict as_fast(bool ok) { return ok ? FastVerdict::holds : FastVerdict::fails; }

FastVerdict fast_c01(const Scaled& v) {
    return as_fast(static_cast<i128>(v.s) * v.g <= static_cast<i128>(2) * v.x &&
                   static_cast<i128>(v.s) * (v.g - 1) <= v.x);
}

FastVerdict fast_c02(const Scaled& v) {
    const i128 diff = static_cast<i128>(v.lam) * v.g - static_cast<i128>(4 * v.g - 4) * v.F;
    const bool bic = (diff > 0) == (v.s != 0);
    const bool ident = diff == static_cast<i128>(4 * v.D) * (4 * v.x - v.s * v.g);
    return as_fast(bic && ident);
}

FastVerdict fast_c03(const Scaled& v) {
    return as_fast(static_cast<i128>(v.s) <= static_cast<i128>(5) * v.n);
}

FastVerdict fast_c04(const Scaled& v) {
    const i128 lhs = static_cast<i128>(4) * v.s * (v.g - 1);
    const bool main_ok = lhs <= static_cast<i128>(v.n) * (3 * v.g + 2);
    const bool sharp_ok = lhs <= static_cast<i128>(v.n) * (3 * v.g + 2) - 4 * v.D;
    return as_fast(main_ok && sharp_ok);
}

FastVerdict fast_c05(const Scaled& v) {
    return as_fast(static_cast<i128>(v.signum) <= static_cast<i128>(v.n - v.s - 4) * v.D);
}

FastVerdict fast_c06(const Scaled& v) {
    if (v.g != 2) return FastVerdict::not_applicable;
    const i64 c1n = 2 * v.chi * v.D + 3 * v.signum;  // c1^2 = c1n/D
    const bool bound = static_cast<i128>(4) * c1n <= static_cast<i128>(6) * v.chih4D - 12 * v.D;
    const bool ident = static_cast<i128>(4) * c1n ==
                       static_cast<i128>(2) * v.chih4D + static_cast<i128>(4 * v.D) * (v.s - 6);
    return as_fast(bound && ident);
}

FastVerdict fast_c07(const Scaled& v) {
    if (v.g == 2) return as_fast(v.chih4D >= 0);
    if (v.g == 3) return as_fast(v.chih4D >= -4 * v.D);
    return FastVerdict::not_applicable;
}

FastVerdict fast_c08(const Scaled& v) {
    if (v.g == 2) return as_fast(static_cast<i128>(v.lam) <= static_cast<i128>(6) * v.F - 4 * v.D);
    if (v.g == 3)
        return as_fast(static_cast<i128>(4) * v.lam <= static_cast<i128>(29) * v.F - 20 * v.D);
    return FastVerdict::not_applicable;
}

FastVerdict fast_c09(const Scaled& v) {
    if (v.g == 2) {
        const i64 k10 = 2 * v.s + v.n;
        const bool k_pos_int = k10 % 10 == 0 && k10 >= 10;
        const bool k_match = static_cast<i128>(k10) * 4 * v.D ==
                             static_cast<i128>(10) * (v.chih4D + 4 * v.D);
        return as_fast(k_pos_int && k_match && 2 * v.n - v.s >= 5);
    }
    if (v.g == 3) {
        const i64 k28 = 3 * v.n + 8 * v.s;
        const bool k_pos_int = k28 % 28 == 0 && k28 >= 28;
        const bool k_match = static_cast<i128>(k28) * 4 * v.D ==
                             static_cast<i128>(28) * (v.chih4D + 8 * v.D);
        return as_fast(k_pos_int && k_match && 11 * v.n - 8 * v.s >= 28);
    }
    return FastVerdict::not_applicable;
}

FastVerdict fast_c10(const Scaled& v) {
    if (v.g != 2) return FastVerdict::not_applicable;
    const bool left = 2 * v.n - v.s == 5;
    const bool right = static_cast<i128>(v.lam) == static_cast<i128>(6) * v.F - 4 * v.D;
    return as_fast(left == right);
}

FastVerdict fast_c11(const Scaled& v) {
    if (v.g != 2 && v.g != 3) return FastVerdict::not_applicable;
    Q t[6];
    bool equality_expected;
    if (v.g == 2) {
        if (v.n < 4) return FastVerdict::not_applicable;
        t[0] = {2 * (v.n + 7 * v.s), v.n + 2 * v.s};
        t[1] = {2 * (1 + 3 * v.s), 1 + v.s};
        t[2] = {2 * (6 * v.s + 3 * v.n - 5), 2 * v.s + v.n};
        t[3] = {2 * (3 * v.n - 7), v.n - 2};
        t[4] = {10 * (v.s + v.n - 2), 2 * v.s + v.n};
        t[5] = {2 * (5 * v.n - v.s - 12), v.n - 2};
        equality_expected = 2 * v.n - v.s == 5;
    } else {
        if (v.n < 8) return FastVerdict::not_applicable;
        t[0] = {4 * (2 * v.n + 17 * v.s), 3 * v.n + 8 * v.s};
        t[1] = {29 * v.s + 8, 4 * v.s + 3};
        t[2] = {87 * v.n + 232 * v.s - 140, 4 * (3 * v.n + 8 * v.s)};
        t[3] = {29 * v.n - 68, 4 * (v.n - 2)};
        t[4] = {2 * (15 * v.n + 26 * v.s - 28), 3 * v.n + 8 * v.s};
        t[5] = {2 * (5 * v.n - v.s - 12), v.n - 2};
        equality_expected = 11 * v.n - 8 * v.s == 28;
    }
    bool chain = qeq({v.lam, v.F}, t[0]);
    bool all_equal = true;
    for (int i = 0; i + 1 < 6; ++i) {
        chain = chain && qle(t[i], t[i + 1]);
        all_equal = all_equal && qeq(t[i], t[i + 1]);
    }
    return as_fast(chain && (!equality_expected || all_equal));
}

FastVerdict fast_c12(const Scaled& v) {
    const bool main_ok =
        static_cast<i128>(v.lam) <= static_cast<i128>(10) * v.F - static_cast<i128>(4 * v.D) * (2 + v.s);
    const bool cap_ok = static_cast<i128>(v.lam) <= static_cast<i128>(10) * v.F;
    return as_fast(main_ok && cap_ok);
}

FastVerdict fast_c13(const Scaled& v) {
    return as_fast(static_cast<i128>(v.chih4D) <= static_cast<i128>(2 * v.D) * (v.n - 2 * v.g));
}

FastVerdict fast_c14(const Scaled& v) {
    const i64 E = v.n * v.g + 4 * v.s * (v.g - 1);
    const i64 lhsN = 4 * (v.g - 1) * E + 4 * v.s * v.D * (3 * v.g - 4);
    const bool lower_ok = qle({lhsN, v.g * E}, {v.lam, v.F});
    bool upper_ok = true;
    if (v.n > 2)
        upper_ok = static_cast<i128>(v.lam) * (v.n - 2) <=
                   static_cast<i128>(v.F) * (10 * (v.n - 2) - 2 * (2 + v.s));
    return as_fast(lower_ok && upper_ok);
}

FastVerdict fast_c15(const Scaled& v) {
    if (!v.integral_chi_h()) return FastVerdict::not_applicable;
    const bool driver = (v.g % 4) * (v.n % 4) % 4 == 0;
    bool genus_specific = true;
    if (v.g % 2 == 1)
        genus_specific = v.n % 4 == 0;
    else if (v.g % 4 == 2)
        genus_specific = v.n % 2 == 0;
    return as_fast(driver && genus_specific);
}

FastVerdict fast_c16(const Scaled& v) {
    if (!v.integral_chi_h()) return FastVerdict::not_applicable;
    const i64 A = v.signum + v.D * v.T;  // sigma+n+s = A/D
    const bool ident = qeq({A, v.D}, {v.chih4D + 4 * v.D * (v.g - 1), v.D});
    const bool divisible = A % v.D == 0 && (A / v.D) % 4 == 0;
    bool t_clause = true;
    if (v.g % 4 != 0) {
        const i64 tq = (3 * v.g + 2) * v.n - 4 * v.x;  // t = tq/(4D)
        t_clause = tq % (4 * v.D) == 0 && tq >= 4 * v.D &&
                   static_cast<i128>(tq) == static_cast<i128>(v.D) * (v.n - v.s) - v.signum;
        if (v.g == 2)
            t_clause = t_clause && static_cast<i128>(2 * v.n - v.s) * v.D ==
                                       static_cast<i128>(5) * (v.D * v.n + v.signum);
        if (v.g == 3)
            t_clause = t_clause &&
                       static_cast<i128>(11 * v.n - 8 * v.s) * v.D == static_cast<i128>(7) * tq;
    }
    return as_fast(ident && divisible && t_clause);
}

FastVerdict fast_c17(const Scaled& v) {
    if (v.g == 2) {
        const bool first = static_cast<i128>(4) * v.signum <=
                           static_cast<i128>(-2) * v.chih4D - 12 * v.D;
        const bool second =
            static_cast<i128>(3) * v.signum <= static_cast<i128>(v.D) * (-v.chi - 6);
        return as_fast(first && second);
    }
    if (v.g == 3) {
        const bool first = static_cast<i128>(16) * v.signum <=
                           static_cast<i128>(-3) * v.chih4D - 44 * v.D;
        const bool second = static_cast<i128>(19) * v.signum <=
                            static_cast<i128>(v.D) * (-3 * v.chi - 44);
        return as_fast(first && second);
    }
    return FastVerdict::not_applicable;
}

FastVerdict fast_c18(const Scaled& v) {
    if (v.g == 2)
        return as_fast(static_cast<i128>(v.s) * (2 * v.chih4D + 16 * v.D) <=
                       static_cast<i128>(v.n) * (4 * v.chih4D + 12 * v.D));
    if (v.g == 3)
        return as_fast(static_cast<i128>(v.s) * (8 * v.chih4D + 96 * v.D) <=
                       static_cast<i128>(v.n) * (11 * v.chih4D + 76 * v.D));
    return FastVerdict::not_applicable;
}

FastVerdict fast_c19(const Scaled& v) {
    if (v.g != 2) return FastVerdict::not_applicable;
    return as_fast(v.signum < 0);
}

FastVerdict fast_c20(const Scaled& v) {
    const i128 lhs = v.signum;
    const i128 rhs = static_cast<i128>(-(v.g + 1)) * v.T;
    return as_fast(v.s > 0 ? lhs > rhs : lhs >= rhs);
}

FastVerdict fast_c21(const Scaled& v) {
    return as_fast(static_cast<i128>(v.s) * v.g < static_cast<i128>(v.n) * (3 * v.g + 2));
}

FastVerdict fast_c22(const Scaled& v) {
    if (v.g < 6) return FastVerdict::not_applicable;
    return as_fast(v.s <= v.n);
}

using FastFn = FastVerdict (*)(const Scaled&);

constexpr FastFn kFastTable[22] = {
    fast_c01, fast_c02, fast_c03, fast_c04, fast_c05, fast_c06, fast_c07, fast_c08,
    fast_c09, fast_c10, fast_c11, fast_c12, fast_c13, fast_c14, fast_c15, fast_c16,
    fast_c17, fast_c18, fast_c19, fast_c20, fast_c21, fast_c22,
};

}  // namespace

FastVerdict eval_check_fast(int check_index, const TupleScaled& t) {
    if (check_index < 0 || check_index >= 22)
        throw std::invalid_argument("eval_check_fast: check index out of range");
    Scaled v(t);
    return kFastTable[check_index](v);
}

void run_scalar(const Batch& b, MaskSet& out) {
    const i64 g = b.g, s = b.s, x = b.x;
    const i64 D = 2 * g + 1;
    for (int i = 0; i < b.count; ++i) {
        const i64 n = b.n_begin + i;
        const i64 F = n * g + 4 * x;
        const i64 T = n + s;
        const i64 signum = 4 * x - (g + 1) * n - D * s;
        const i64 lam = 4 * (n * (g - 1) - D * s + 12 * x);
        const i64 chi = T - 4 * (g - 1);
        const std::uint64_t bit = 1ull << i;

        const i64 diff = lam * g - (4 * g - 4) * F;
        const bool bic = (diff > 0) == (s != 0);
        const bool ident = diff == 4 * D * (4 * x - s * g);
        if (!(bic && ident)) out.c02 |= bit;

        const i64 E = n * g + 4 * s * (g - 1);
        const i64 lhsN = 4 * (g - 1) * E + 4 * s * D * (3 * g - 4);
        if (!(lhsN * F <= lam * (g * E))) out.c14_lower |= bit;

        const i64 avg_rhs = -(g + 1) * T;
        if (!(s > 0 ? signum > avg_rhs : signum >= avg_rhs)) out.c20 |= bit;

        const i64 A3 = signum + D * T;
        const i64 chih4D = F - 4 * D * (g - 1);
        const i64 Fp = chih4D + 4 * D * (g - 1);
        const i64 c1n = 2 * chi * D + 3 * signum;
        const i64 k2n = c1n + 8 * (g - 1) * D;
        const bool r_direct = (12 * Fp - 4 * D * T) * F == lam * Fp;
        const bool r_deficit = (12 * A3 - 4 * D * T) * F == lam * A3;
        const bool r_excess = (8 * A3 + 4 * signum) * F == lam * A3;
        const bool r_ksq = 4 * k2n * F == lam * Fp;
        if (!(r_direct && r_deficit && r_excess && r_ksq)) out.slope_forms |= bit;

        if (!(signum * (lam - 12 * F) == -(D * T) * (lam - 8 * F))) out.sig_roundtrip |= bit;
    }
}

bool bounds_fit_int64(std::int64_t g_min, std::int64_t g_max, std::int64_t n_max,
                      std::int64_t s_max) {
    if (g_min < 2 || g_max < g_min || n_max < 1 || s_max < 0) return false;
    using boost::multiprecision::cpp_int;
    // Every bound below is nondecreasing in g, n, s (and in the induced
    // x_max), so evaluating at the box corner suffices.
    const cpp_int g = g_max, n = n_max, s = s_max;
    const cpp_int h = g / 2;
    const cpp_int x = h * (g - h) * s;
    const cpp_int D = 2 * g + 1;
    const cpp_int F = n * g + 4 * x;
    const cpp_int T = n + s;
    const cpp_int signum = 4 * x + (g + 1) * n + D * s;
    const cpp_int lam = 4 * (n * (g - 1) + D * s + 12 * x);
    const cpp_int chi = T + 4 * (g - 1);
    const cpp_int E = n * g + 4 * s * (g - 1);
    const cpp_int gE = g * E;
    const cpp_int lhsN = 4 * (g - 1) * E + 4 * s * D * (3 * g - 4);
    const cpp_int chih4D = F + 4 * D * (g - 1);
    const cpp_int c1n = 2 * chi * D + 3 * signum;
    const cpp_int k2n = c1n + 8 * (g - 1) * D;
    const cpp_int lim = cpp_int(1) << 62;

    const cpp_int candidates[] = {
        // linear forms shared by the kernels and the fast evaluator
        F, T, signum, lam, chi, E, gE, lhsN, chih4D, c1n, k2n,
        (3 * g + 2) * n + 4 * x, 2 * s + n, 3 * n + 8 * s, 11 * n + 8 * s,
        87 * n + 232 * s + 140, 2 * (15 * n + 26 * s + 28), 29 * n + 68,
        10 * (s + n + 2), 2 * (5 * n + s + 12), 4 * (2 * n + 17 * s), 29 * s + 8,
        6 * F + 4 * D, 29 * F + 20 * D, 10 * F + 4 * D * (s + 2),
        2 * chih4D + 16 * D, 4 * chih4D + 12 * D, 8 * chih4D + 96 * D, 11 * chih4D + 76 * D,
        16 * signum + 3 * chih4D + 44 * D, 3 * signum + D * (chi + 6),
        19 * signum + D * (3 * chi + 44), 28 * (chih4D + 8 * D), D * T + signum,
        5 * (D * n + signum), 4 * D * (4 * x + s * g), 2 * D * (n + 2 * g),
        12 * F + 4 * D * T, 8 * F + 4 * signum, lam + 12 * F, D * (T + 4),
        // int64 products formed by the batch kernels
        lam * g, (4 * g - 4) * F, lhsN * F, lam * gE, (g + 1) * T,
        (12 * F + 4 * D * T) * F, (8 * F + 4 * signum) * F, 4 * k2n * F,
        signum * (lam + 12 * F), D * T * (lam + 8 * F),
    };
    for (const cpp_int& v : candidates)
        if (v >= lim) return false;
    return true;
}

}  // namespace hlf::kernels
