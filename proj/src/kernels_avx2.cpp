// AVX2 variant of the forcing-round scan. Four adjacency rows are processed
// per iteration: white = row & ~colored, a vpshufb nibble LUT + psadbw gives
// the four 64-bit popcounts, and lanes with count == 1 whose vertex is
// colored contribute a force. This TU is compiled with -mavx2 and is only
// entered through the runtime dispatcher.

#if defined(__x86_64__) || defined(_M_X64)

#include "zf/kernels.hpp"

#include <immintrin.h>

namespace zf::kernels {

namespace {

inline __m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i per_byte =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(per_byte, _mm256_setzero_si256());
}

}  // namespace

ForceScan force_scan_avx2(const Word* rows, int n, Word colored) noexcept {
    ForceScan r;
    const __m256i not_colored = _mm256_set1_epi64x(static_cast<long long>(~colored));
    const __m256i one = _mm256_set1_epi64x(1);

    alignas(32) Word white_lanes[4];
    int v = 0;
    for (; v + 4 <= n; v += 4) {
        __m256i rowv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + v));
        __m256i white = _mm256_and_si256(rowv, not_colored);
        __m256i single = _mm256_cmpeq_epi64(popcount_epi64(white), one);
        unsigned lane_mask =
            static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(single)));
        lane_mask &= static_cast<unsigned>((colored >> v) & 0xF);
        if (!lane_mask) continue;
        _mm256_store_si256(reinterpret_cast<__m256i*>(white_lanes), white);
        while (lane_mask) {
            int lane = __builtin_ctz(lane_mask);
            lane_mask &= lane_mask - 1;
            r.forcers |= Word{1} << (v + lane);
            r.newly |= white_lanes[lane];
        }
    }
    for (; v < n; ++v) {
        if (!((colored >> v) & 1u)) continue;
        Word white = rows[v] & ~colored;
        if (white && (white & (white - 1)) == 0) {
            r.forcers |= Word{1} << v;
            r.newly |= white;
        }
    }
    return r;
}

Word closure_avx2(const Word* rows, int n, Word colored) noexcept {
    for (;;) {
        ForceScan s = force_scan_avx2(rows, n, colored);
        if (!s.newly) return colored;
        colored |= s.newly;
    }
}

}  // namespace zf::kernels

#endif  // x86_64
