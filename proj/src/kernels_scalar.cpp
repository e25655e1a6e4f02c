#include "zf/kernels.hpp"

#include <bit>

namespace zf::kernels {

ForceScan force_scan_scalar(const Word* rows, int n, Word colored) noexcept {
    (void)n;
    ForceScan r;
    Word m = colored;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        Word white = rows[v] & ~colored;
        // exactly one bit set
        if (white && (white & (white - 1)) == 0) {
            r.forcers |= Word{1} << v;
            r.newly |= white;
        }
    }
    return r;
}

Word closure_scalar(const Word* rows, int n, Word colored) noexcept {
    for (;;) {
        ForceScan s = force_scan_scalar(rows, n, colored);
        if (!s.newly) return colored;
        colored |= s.newly;
    }
}

}  // namespace zf::kernels
