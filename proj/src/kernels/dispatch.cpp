#include <panconnect/errors.hpp>
#include <panconnect/kernels.hpp>

#include <atomic>
#include <cstdlib>
#include <string>

namespace panconnect::kernels
{
    namespace
    {
        auto cpu_has(Isa isa) -> bool
        {
            switch (isa) {
            case Isa::scalar: return true;
            case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
                return __builtin_cpu_supports("avx2");
#else
                return false;
#endif
            case Isa::neon:
#if defined(__aarch64__)
                return true;
#else
                return false;
#endif
            }
            return false;
        }

        auto parse_isa(std::string_view text) -> Isa
        {
            if (text == "scalar")
                return Isa::scalar;
            if (text == "avx2")
                return Isa::avx2;
            if (text == "neon")
                return Isa::neon;
            throw UsageError("unknown PANCONNECT_ISA value '" + std::string{text} + "'");
        }

        auto initial_isa() -> Isa
        {
            if (const char * forced = std::getenv("PANCONNECT_ISA"); forced != nullptr && *forced != '\0') {
                auto isa = parse_isa(forced);
                if (! cpu_has(isa))
                    throw UsageError("PANCONNECT_ISA=" + std::string{forced} + " is not supported on this CPU");
                return isa;
            }
            auto all = available_isas();
            return all.back();
        }

        auto active_slot() -> std::atomic<const KernelTable *> &
        {
            static std::atomic<const KernelTable *> slot{&table_for(initial_isa())};
            return slot;
        }

        auto active_isa_slot() -> std::atomic<Isa> &
        {
            static std::atomic<Isa> slot{initial_isa()};
            return slot;
        }
    }

    auto isa_name(Isa isa) -> std::string_view
    {
        switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        }
        return "unknown";
    }

    auto available_isas() -> std::vector<Isa>
    {
        std::vector<Isa> result{Isa::scalar};
        for (auto isa : {Isa::avx2, Isa::neon})
            if (cpu_has(isa))
                result.push_back(isa);
        return result;
    }

    auto table_for(Isa isa) -> const KernelTable &
    {
        switch (isa) {
        case Isa::scalar: return detail::scalar_table;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (cpu_has(isa))
                return detail::avx2_table;
#endif
            break;
        case Isa::neon:
#if defined(__aarch64__)
            return detail::neon_table;
#endif
            break;
        }
        throw UsageError("kernel variant '" + std::string{isa_name(isa)} + "' is not available on this machine");
    }

    auto active_isa() -> Isa
    {
        return active_isa_slot().load(std::memory_order_relaxed);
    }

    auto set_active_isa(Isa isa) -> void
    {
        const auto & table = table_for(isa);
        active_slot().store(&table, std::memory_order_relaxed);
        active_isa_slot().store(isa, std::memory_order_relaxed);
    }

    auto select_xor_popcount(std::span<const std::uint64_t> words, std::uint64_t query, unsigned target,
        std::uint32_t base, std::vector<std::uint32_t> & out) -> void
    {
        active_slot().load(std::memory_order_relaxed)->select_xor_popcount(words, query, target, base, out);
    }

    auto or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) -> void
    {
        active_slot().load(std::memory_order_relaxed)->or_into(dst, src);
    }

    auto popcount_words(std::span<const std::uint64_t> words) -> std::size_t
    {
        return active_slot().load(std::memory_order_relaxed)->popcount_words(words);
    }
}
