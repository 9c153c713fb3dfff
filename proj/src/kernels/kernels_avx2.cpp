#include <panconnect/kernels.hpp>

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

// Only the functions below carry the avx2 target attribute, so inline library code
// instantiated in this file stays baseline x86-64 and the table is safe to link
// into binaries that run on older CPUs.
#define PANCONNECT_AVX2 __attribute__((target("avx2")))

namespace panconnect::kernels::detail
{
    namespace
    {
        // Per-64-bit-lane popcount: nibble lookup with pshufb, then sum bytes per lane with sad.
        PANCONNECT_AVX2 inline auto popcount_epi64(__m256i v) -> __m256i
        {
            const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2,
                3, 1, 2, 2, 3, 2, 3, 3, 4);
            const __m256i low_mask = _mm256_set1_epi8(0x0f);
            __m256i lo = _mm256_and_si256(v, low_mask);
            __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
            __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
            return _mm256_sad_epu8(counts, _mm256_setzero_si256());
        }

        PANCONNECT_AVX2 auto select_xor_popcount(std::span<const std::uint64_t> words, std::uint64_t query,
            unsigned target, std::uint32_t base, std::vector<std::uint32_t> & out) -> void
        {
            const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query));
            const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target));
            std::size_t i = 0;
            for (; i + 4 <= words.size(); i += 4) {
                __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(words.data() + i));
                __m256i eq = _mm256_cmpeq_epi64(popcount_epi64(_mm256_xor_si256(w, q)), t);
                auto mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
                while (mask != 0) {
                    out.push_back(base + static_cast<std::uint32_t>(i) + static_cast<std::uint32_t>(std::countr_zero(mask)));
                    mask &= mask - 1;
                }
            }
            for (; i < words.size(); ++i)
                if (static_cast<unsigned>(std::popcount(words[i] ^ query)) == target)
                    out.push_back(base + static_cast<std::uint32_t>(i));
        }

        PANCONNECT_AVX2 auto or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) -> void
        {
            std::size_t i = 0;
            for (; i + 4 <= dst.size(); i += 4) {
                auto * d = reinterpret_cast<__m256i *>(dst.data() + i);
                __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src.data() + i));
                _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
            }
            for (; i < dst.size(); ++i)
                dst[i] |= src[i];
        }

        PANCONNECT_AVX2 auto popcount_words(std::span<const std::uint64_t> words) -> std::size_t
        {
            __m256i acc = _mm256_setzero_si256();
            std::size_t i = 0;
            for (; i + 4 <= words.size(); i += 4)
                acc = _mm256_add_epi64(acc,
                    popcount_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i *>(words.data() + i))));
            alignas(32) std::uint64_t lanes[4];
            _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
            std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
            for (; i < words.size(); ++i)
                total += static_cast<std::size_t>(std::popcount(words[i]));
            return total;
        }
    }

    const KernelTable avx2_table{&select_xor_popcount, &or_into, &popcount_words};
}

#endif
