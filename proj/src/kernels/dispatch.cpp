#include "hlf/kernels.hpp"

#include <stdexcept>
#include <string>

namespace hlf::kernels {

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::automatic: return "auto";
        case Impl::scalar: return "scalar";
        case Impl::avx2: return "avx2";
    }
    return "?";
}

Impl parse_impl(std::string_view name) {
    for (Impl i : {Impl::automatic, Impl::scalar, Impl::avx2})
        if (name == impl_name(i)) return i;
    throw std::invalid_argument("unknown kernel '" + std::string(name) +
                                "'; valid: auto, scalar, avx2");
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl resolve(Impl requested) {
    if (requested == Impl::automatic)
        return avx2_supported() ? Impl::avx2 : Impl::scalar;
    if (requested == Impl::avx2 && !avx2_supported())
        throw std::invalid_argument("kernel 'avx2' requested but this CPU does not support AVX2");
    return requested;
}

KernelFn get_kernel(Impl impl) {
    switch (resolve(impl)) {
        case Impl::scalar: return &run_scalar;
#if defined(__x86_64__) || defined(_M_X64)
        case Impl::avx2: return &run_avx2;
#endif
        default: return &run_scalar;
    }
}

}  // namespace hlf::kernels
