#pragma once

// Word-parallel inner loops shared by the graph constructors and the square operator.
// Each kernel has a scalar reference implementation plus vectorized variants; the
// variant is chosen once at runtime from CPU features and can be pinned for testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace panconnect::kernels
{
    enum class Isa
    {
        scalar,
        avx2,
        neon
    };

    [[nodiscard]] auto isa_name(Isa isa) -> std::string_view;

    /// Variants compiled in and supported by the running CPU. Always contains Isa::scalar.
    [[nodiscard]] auto available_isas() -> std::vector<Isa>;

    /// The variant used by the dispatching entry points below. Defaults to the widest
    /// available one; PANCONNECT_ISA=scalar|avx2|neon overrides at first use.
    [[nodiscard]] auto active_isa() -> Isa;

    /// Throws UsageError if the variant is not available here.
    auto set_active_isa(Isa isa) -> void;

    struct KernelTable
    {
        /// Appends base + i for every i with popcount(words[i] ^ query) == target.
        void (*select_xor_popcount)(std::span<const std::uint64_t> words, std::uint64_t query, unsigned target,
            std::uint32_t base, std::vector<std::uint32_t> & out);

        /// dst[i] |= src[i]
        void (*or_into)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

        /// Total number of set bits.
        std::size_t (*popcount_words)(std::span<const std::uint64_t> words);
    };

    [[nodiscard]] auto table_for(Isa isa) -> const KernelTable &;

    auto select_xor_popcount(std::span<const std::uint64_t> words, std::uint64_t query, unsigned target,
        std::uint32_t base, std::vector<std::uint32_t> & out) -> void;
    auto or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) -> void;
    [[nodiscard]] auto popcount_words(std::span<const std::uint64_t> words) -> std::size_t;

    namespace detail
    {
        extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
        extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__)
        extern const KernelTable neon_table;
#endif
    }
}
