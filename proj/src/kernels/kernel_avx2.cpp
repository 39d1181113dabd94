#include "hlf/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace hlf::kernels {

namespace {

using i64 = std::int64_t;

/// Low 64 bits of the lane-wise product; two's complement makes this valid
/// for signed operands. AVX2 has no 64-bit multiply, so it is assembled
/// from 32x32 partial products.
inline __m256i mul64(__m256i a, __m256i b) {
    const __m256i lo = _mm256_mul_epu32(a, b);
    const __m256i ahi = _mm256_srli_epi64(a, 32);
    const __m256i bhi = _mm256_srli_epi64(b, 32);
    const __m256i cross =
        _mm256_add_epi64(_mm256_mul_epu32(ahi, b), _mm256_mul_epu32(a, bhi));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i splat(i64 v) { return _mm256_set1_epi64x(v); }

inline __m256i bnot(__m256i m) { return _mm256_xor_si256(m, _mm256_set1_epi64x(-1)); }

inline std::uint64_t lane_bits(__m256i mask) {
    return static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(mask))) & 0xf;
}

}  // namespace

__attribute__((target("avx2"))) void run_avx2(const Batch& b, MaskSet& out) {
    const i64 g = b.g, s = b.s, x = b.x;
    const i64 D = 2 * g + 1;

    const __m256i vg = splat(g);
    const __m256i vD = splat(D);
    const __m256i v4x = splat(4 * x);
    const __m256i vs = splat(s);
    const __m256i c_sig = splat(4 * x - D * s);       // signum = -(g+1)n + c_sig
    const __m256i c_lam = splat(48 * x - 4 * D * s);  // lam = 4(g-1)n + c_lam
    const __m256i c_chi = splat(s - 4 * (g - 1));     // chi = n + c_chi
    const __m256i c_E = splat(4 * s * (g - 1));       // E = gn + c_E
    const __m256i vneggp1 = splat(-(g + 1));
    const __m256i v4gm4 = splat(4 * g - 4);
    const __m256i v4g1 = splat(4 * (g - 1));
    const __m256i ident_rhs = splat(4 * D * (4 * x - s * g));
    const __m256i c_lhsN = splat(4 * s * D * (3 * g - 4));
    const __m256i v4Dg1 = splat(4 * D * (g - 1));
    const __m256i v2D = splat(2 * D);
    const __m256i v3 = splat(3);
    const __m256i v4 = splat(4);
    const __m256i v8 = splat(8);
    const __m256i v12 = splat(12);
    const __m256i k2n_off = splat(8 * (g - 1) * D);
    const __m256i zero = _mm256_setzero_si256();

    const int full = b.count & ~3;
    for (int i = 0; i < full; i += 4) {
        const i64 nb = b.n_begin + i;
        const __m256i n = _mm256_set_epi64x(nb + 3, nb + 2, nb + 1, nb);

        const __m256i F = _mm256_add_epi64(mul64(n, vg), v4x);
        const __m256i T = _mm256_add_epi64(n, vs);
        const __m256i signum = _mm256_add_epi64(mul64(n, vneggp1), c_sig);
        const __m256i lam = _mm256_add_epi64(mul64(n, v4g1), c_lam);
        const __m256i chi = _mm256_add_epi64(n, c_chi);

        // C02: biconditional and factored identity.
        const __m256i diff =
            _mm256_sub_epi64(mul64(lam, vg), mul64(v4gm4, F));
        const __m256i diff_pos = _mm256_cmpgt_epi64(diff, zero);
        const __m256i bic_viol = (s != 0) ? bnot(diff_pos) : diff_pos;
        const __m256i ident_viol = bnot(_mm256_cmpeq_epi64(diff, ident_rhs));
        out.c02 |= lane_bits(_mm256_or_si256(bic_viol, ident_viol)) << i;

        // C14 lower estimate: lhsN/(gE) <= lam/F.
        const __m256i E = _mm256_add_epi64(mul64(n, vg), c_E);
        const __m256i gE = mul64(E, vg);
        const __m256i lhsN = _mm256_add_epi64(mul64(E, v4gm4), c_lhsN);
        out.c14_lower |=
            lane_bits(_mm256_cmpgt_epi64(mul64(lhsN, F), mul64(lam, gE))) << i;

        // C20: signum >= -(g+1)T, strict when s > 0.
        const __m256i avg_rhs = mul64(vneggp1, T);
        const __m256i c20_viol = (s > 0) ? bnot(_mm256_cmpgt_epi64(signum, avg_rhs))
                                         : _mm256_cmpgt_epi64(avg_rhs, signum);
        out.c20 |= lane_bits(c20_viol) << i;

        // Four slope routes against lam/F.
        const __m256i A3 = _mm256_add_epi64(signum, mul64(vD, T));
        const __m256i chih4D = _mm256_sub_epi64(F, v4Dg1);
        const __m256i Fp = _mm256_add_epi64(chih4D, v4Dg1);
        const __m256i fourDT = mul64(v4, mul64(vD, T));
        const __m256i c1n = _mm256_add_epi64(mul64(v2D, chi), mul64(v3, signum));
        const __m256i k2n = _mm256_add_epi64(c1n, k2n_off);

        const __m256i r_direct =
            _mm256_cmpeq_epi64(mul64(_mm256_sub_epi64(mul64(v12, Fp), fourDT), F),
                               mul64(lam, Fp));
        const __m256i r_deficit =
            _mm256_cmpeq_epi64(mul64(_mm256_sub_epi64(mul64(v12, A3), fourDT), F),
                               mul64(lam, A3));
        const __m256i r_excess = _mm256_cmpeq_epi64(
            mul64(_mm256_add_epi64(mul64(v8, A3), mul64(v4, signum)), F), mul64(lam, A3));
        const __m256i r_ksq =
            _mm256_cmpeq_epi64(mul64(mul64(v4, k2n), F), mul64(lam, Fp));
        const __m256i forms_ok =
            _mm256_and_si256(_mm256_and_si256(r_direct, r_deficit),
                             _mm256_and_si256(r_excess, r_ksq));
        out.slope_forms |= lane_bits(bnot(forms_ok)) << i;

        // Signature round trip: signum(lam-12F) == -(DT)(lam-8F).
        const __m256i lhs_rt = mul64(signum, _mm256_sub_epi64(lam, mul64(v12, F)));
        const __m256i rhs_rt = mul64(_mm256_sub_epi64(zero, mul64(vD, T)),
                                     _mm256_sub_epi64(lam, mul64(v8, F)));
        out.sig_roundtrip |= lane_bits(bnot(_mm256_cmpeq_epi64(lhs_rt, rhs_rt))) << i;
    }

    if (full < b.count) {
        Batch tail = b;
        tail.n_begin = b.n_begin + full;
        tail.count = b.count - full;
        MaskSet t;
        run_scalar(tail, t);
        out.c02 |= t.c02 << full;
        out.c14_lower |= t.c14_lower << full;
        out.c20 |= t.c20 << full;
        out.slope_forms |= t.slope_forms << full;
        out.sig_roundtrip |= t.sig_roundtrip << full;
    }
}

}  // namespace hlf::kernels

#endif
