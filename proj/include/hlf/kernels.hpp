#pragma once

#include <cstdint>
#include <string_view>

namespace hlf::kernels {

/// Which batch-kernel implementation drives the unconditional sweep pass.
/// automatic resolves to the best one the CPU supports at runtime.
enum class Impl { automatic, scalar, avx2 };

const char* impl_name(Impl impl);
Impl parse_impl(std::string_view name);

bool avx2_supported();

/// Resolves automatic to a concrete implementation; throws
/// std::invalid_argument if an explicitly requested one is unsupported here.
Impl resolve(Impl requested);

/// One batch fixes (g, s, x) and ranges n over count <= 64 consecutive
/// values starting at n_begin. All quantities are exact in int64; callers
/// must gate the box through bounds_fit_int64 first.
struct Batch {
    std::int64_t g;
    std::int64_t s;
    std::int64_t x;
    std::int64_t n_begin;
    int count;
};

/// Violation bitmasks, bit i corresponding to n = n_begin + i. A set bit
/// means the property FAILED in that lane; all-zero is the expected result
/// for every valid batch.
///
///   c02            biconditional (lambda > 4-4/g <=> s != 0) or its factored
///                  identity broken
///   c14_lower      lower slope estimate broken
///   c20            average-signature bound broken
///   slope_forms    the four independently computed slope routes disagree
///                  (direct, via sigma totals twice, via K^2/chi_f)
///   sig_roundtrip  signature recovered from the slope differs from the
///                  signature formula
struct MaskSet {
    std::uint64_t c02 = 0;
    std::uint64_t c14_lower = 0;
    std::uint64_t c20 = 0;
    std::uint64_t slope_forms = 0;
    std::uint64_t sig_roundtrip = 0;
};

using KernelFn = void (*)(const Batch&, MaskSet&);

KernelFn get_kernel(Impl impl);

void run_scalar(const Batch& b, MaskSet& out);
#if defined(__x86_64__) || defined(_M_X64)
void run_avx2(const Batch& b, MaskSet& out);
#endif

/// A tuple in cleared-denominator int64 space for the fast conditional-check
/// evaluator.
struct TupleScaled {
    std::int64_t g;
    std::int64_t n;
    std::int64_t s;
    std::int64_t x;
};

enum class FastVerdict : unsigned char { holds, fails, not_applicable };

/// Mirrors the exact-rational registry verdict for registry index
/// 0..21 (C01..C22). Every multiplication goes through __int128; linear
/// intermediates must fit int64, which bounds_fit_int64 certifies for a
/// whole box. Equivalence with the rational registry is test-enforced.
FastVerdict eval_check_fast(int check_index, const TupleScaled& t);

/// True iff every intermediate the kernels and eval_check_fast form stays
/// below 2^62 in absolute value anywhere in the box g in [g_min, g_max],
/// n <= n_max, s <= s_max (worst-case magnitudes evaluated in arbitrary
/// precision). When false, sweeps fall back to the exact rational path.
bool bounds_fit_int64(std::int64_t g_min, std::int64_t g_max, std::int64_t n_max,
                      std::int64_t s_max);

}  // namespace hlf::kernels
