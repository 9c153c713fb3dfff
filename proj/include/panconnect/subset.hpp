#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace panconnect
{
    constexpr int max_ground_size = 64;

    /// A subset of [n] = {1,...,n} packed into one machine word: element i lives in bit i-1.
    class SubsetWord
    {
    public:
        SubsetWord() = default;

        /// Throws UsageError if n is outside 1..64 or bits outside [n] are set.
        SubsetWord(std::uint64_t bits, int ground_n);

        /// Builds from 1-based elements. Duplicates are rejected.
        static auto from_elements(const std::vector<int> & elements, int ground_n) -> SubsetWord;

        /// Parses the "1,3,4" / "-" text form; elements must be strictly ascending.
        static auto parse(std::string_view text, int ground_n) -> SubsetWord;

        [[nodiscard]] auto bits() const noexcept -> std::uint64_t { return _bits; }
        [[nodiscard]] auto ground_n() const noexcept -> int { return _ground_n; }
        [[nodiscard]] auto size() const noexcept -> int { return std::popcount(_bits); }
        [[nodiscard]] auto contains(int element) const noexcept -> bool
        {
            return element >= 1 && element <= _ground_n && ((_bits >> (element - 1)) & 1U);
        }
        [[nodiscard]] auto elements() const -> std::vector<int>;

        /// Ascending 1-based elements joined by commas; the empty set renders as "-".
        [[nodiscard]] auto to_string() const -> std::string;

        friend auto operator==(const SubsetWord &, const SubsetWord &) -> bool = default;

    private:
        std::uint64_t _bits = 0;
        int _ground_n = 1;
    };

    [[nodiscard]] auto full_mask(int ground_n) noexcept -> std::uint64_t;

    [[nodiscard]] auto symm_diff_size(const SubsetWord & a, const SubsetWord & b) -> int;
    [[nodiscard]] auto intersect_size(const SubsetWord & a, const SubsetWord & b) -> int;
    [[nodiscard]] auto complement(const SubsetWord & a) -> SubsetWord;
    [[nodiscard]] auto is_proper_subset(const SubsetWord & a, const SubsetWord & b) -> bool;

    /// Exact binomial coefficient for 0 <= k <= n <= 64 (0 when k > n).
    [[nodiscard]] auto binomial(int n, int k) -> std::uint64_t;

    /// Position of a among the |a|-subsets of its ground set in colex order.
    [[nodiscard]] auto colex_rank(const SubsetWord & a) -> std::uint64_t;

    /// Inverse of colex_rank. Throws UsageError unless 0 <= rank < C(n,k).
    [[nodiscard]] auto colex_unrank(std::uint64_t rank, int n, int k) -> SubsetWord;

    /// All k-subsets of [n] in colex order, which is also ascending bitmask order.
    [[nodiscard]] auto enumerate_k_subsets(int n, int k) -> std::vector<SubsetWord>;
}
