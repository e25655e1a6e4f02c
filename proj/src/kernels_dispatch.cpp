#include "zf/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace zf::kernels {

namespace {

std::vector<Kernel> build_available() {
    std::vector<Kernel> ks;
    ks.push_back({"scalar", &force_scan_scalar, &closure_scalar});
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        ks.push_back({"avx2", &force_scan_avx2, &closure_avx2});
#endif
    return ks;
}

const Kernel& select() {
    const auto& ks = available_kernels();
    if (const char* want = std::getenv("ZF_KERNEL")) {
        for (const auto& k : ks)
            if (std::strcmp(k.name, want) == 0) return k;
        // unknown or unavailable name: fall through to the default choice
    }
    return ks.back();
}

}  // namespace

std::span<const Kernel> available_kernels() {
    static const std::vector<Kernel> ks = build_available();
    return ks;
}

const Kernel& active_kernel() {
    static const Kernel& k = select();
    return k;
}

}  // namespace zf::kernels
