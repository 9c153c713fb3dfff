#include <panconnect/kernels.hpp>

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace panconnect::kernels::detail
{
    namespace
    {
        // Two 64-bit lane popcounts: byte counts widened pairwise up to u64.
        inline auto popcount_u64x2(uint64x2_t v) -> uint64x2_t
        {
            return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
        }

        auto select_xor_popcount(std::span<const std::uint64_t> words, std::uint64_t query, unsigned target,
            std::uint32_t base, std::vector<std::uint32_t> & out) -> void
        {
            const uint64x2_t q = vdupq_n_u64(query);
            const uint64x2_t t = vdupq_n_u64(target);
            std::size_t i = 0;
            for (; i + 2 <= words.size(); i += 2) {
                uint64x2_t eq = vceqq_u64(popcount_u64x2(veorq_u64(vld1q_u64(words.data() + i), q)), t);
                if (vgetq_lane_u64(eq, 0))
                    out.push_back(base + static_cast<std::uint32_t>(i));
                if (vgetq_lane_u64(eq, 1))
                    out.push_back(base + static_cast<std::uint32_t>(i + 1));
            }
            for (; i < words.size(); ++i)
                if (static_cast<unsigned>(std::popcount(words[i] ^ query)) == target)
                    out.push_back(base + static_cast<std::uint32_t>(i));
        }

        auto or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) -> void
        {
            std::size_t i = 0;
            for (; i + 2 <= dst.size(); i += 2)
                vst1q_u64(dst.data() + i, vorrq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i)));
            for (; i < dst.size(); ++i)
                dst[i] |= src[i];
        }

        auto popcount_words(std::span<const std::uint64_t> words) -> std::size_t
        {
            uint64x2_t acc = vdupq_n_u64(0);
            std::size_t i = 0;
            for (; i + 2 <= words.size(); i += 2)
                acc = vaddq_u64(acc, popcount_u64x2(vld1q_u64(words.data() + i)));
            std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
            for (; i < words.size(); ++i)
                total += static_cast<std::size_t>(std::popcount(words[i]));
            return total;
        }
    }

    const KernelTable neon_table{&select_xor_popcount, &or_into, &popcount_words};
}

#endif
