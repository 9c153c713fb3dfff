#include <panconnect/kernels.hpp>

#include <bit>

namespace panconnect::kernels::detail
{
    namespace
    {
        auto select_xor_popcount(std::span<const std::uint64_t> words, std::uint64_t query, unsigned target,
            std::uint32_t base, std::vector<std::uint32_t> & out) -> void
        {
            for (std::size_t i = 0; i < words.size(); ++i)
                if (static_cast<unsigned>(std::popcount(words[i] ^ query)) == target)
                    out.push_back(base + static_cast<std::uint32_t>(i));
        }

        auto or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) -> void
        {
            for (std::size_t i = 0; i < dst.size(); ++i)
                dst[i] |= src[i];
        }

        auto popcount_words(std::span<const std::uint64_t> words) -> std::size_t
        {
            std::size_t total = 0;
            for (auto w : words)
                total += static_cast<std::size_t>(std::popcount(w));
            return total;
        }
    }

    const KernelTable scalar_table{&select_xor_popcount, &or_into, &popcount_words};
}
