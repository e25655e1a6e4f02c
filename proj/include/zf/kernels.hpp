#pragma once

#include <cstdint>
#include <span>

namespace zf::kernels {

using Word = std::uint64_t;

/// One simultaneous forcing round over a single-word universe (n <= 64).
/// forcers: colored vertices with exactly one uncolored neighbor.
/// newly:   union of those uncolored neighbors.
struct ForceScan {
    Word forcers = 0;
    Word newly = 0;

    bool operator==(const ForceScan&) const = default;
};

using ForceScanFn = ForceScan (*)(const Word* rows, int n, Word colored) noexcept;
using ClosureFn = Word (*)(const Word* rows, int n, Word colored) noexcept;

/// Scalar reference kernels. All variants must match these bit for bit.
ForceScan force_scan_scalar(const Word* rows, int n, Word colored) noexcept;
Word closure_scalar(const Word* rows, int n, Word colored) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
ForceScan force_scan_avx2(const Word* rows, int n, Word colored) noexcept;
Word closure_avx2(const Word* rows, int n, Word colored) noexcept;
#endif

struct Kernel {
    const char* name;
    ForceScanFn force_scan;
    ClosureFn closure;
};

/// Kernels compiled in and usable on this CPU; index 0 is always scalar.
std::span<const Kernel> available_kernels();

/// The dispatch choice: the widest available variant, unless overridden by
/// the ZF_KERNEL environment variable ("scalar" or "avx2").
const Kernel& active_kernel();

}  // namespace zf::kernels
