#include <panconnect/errors.hpp>
#include <panconnect/subset.hpp>

#include <array>
#include <charconv>

using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace panconnect
{
    namespace
    {
        constexpr auto make_pascal() -> std::array<std::array<uint64_t, 65>, 65>
        {
            std::array<std::array<uint64_t, 65>, 65> table{};
            for (int n = 0; n <= 64; ++n) {
                table[n][0] = 1;
                for (int k = 1; k <= n; ++k)
                    table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? table[n - 1][k] : 0);
            }
            return table;
        }

        constexpr auto pascal = make_pascal();

        auto check_ground(int ground_n) -> void
        {
            if (ground_n < 1 || ground_n > max_ground_size)
                throw UsageError("ground set size must be in 1..64, got " + std::to_string(ground_n));
        }

        auto check_same_ground(const SubsetWord & a, const SubsetWord & b) -> void
        {
            if (a.ground_n() != b.ground_n())
                throw UsageError("subsets live over different ground sets [" + std::to_string(a.ground_n()) + "] and [" +
                    std::to_string(b.ground_n()) + "]");
        }
    }

    auto full_mask(int ground_n) noexcept -> uint64_t
    {
        return ground_n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << ground_n) - 1);
    }

    SubsetWord::SubsetWord(uint64_t bits, int ground_n) : _bits(bits), _ground_n(ground_n)
    {
        check_ground(ground_n);
        if ((bits & ~full_mask(ground_n)) != 0)
            throw UsageError("subset has elements outside [" + std::to_string(ground_n) + "]");
    }

    auto SubsetWord::from_elements(const vector<int> & elements, int ground_n) -> SubsetWord
    {
        check_ground(ground_n);
        uint64_t bits = 0;
        for (int e : elements) {
            if (e < 1 || e > ground_n)
                throw UsageError("element " + std::to_string(e) + " outside [" + std::to_string(ground_n) + "]");
            uint64_t bit = uint64_t{1} << (e - 1);
            if (bits & bit)
                throw UsageError("duplicate element " + std::to_string(e));
            bits |= bit;
        }
        return SubsetWord{bits, ground_n};
    }

    auto SubsetWord::parse(string_view text, int ground_n) -> SubsetWord
    {
        if (text == "-")
            return SubsetWord{0, ground_n};
        vector<int> elements;
        while (! text.empty()) {
            auto comma = text.find(',');
            auto token = text.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
                throw UsageError("malformed subset text '" + string{text} + "'");
            if (! elements.empty() && value <= elements.back())
                throw UsageError("subset text must list elements in ascending order");
            elements.push_back(value);
            if (comma == string_view::npos)
                break;
            text.remove_prefix(comma + 1);
            if (text.empty())
                throw UsageError("trailing comma in subset text");
        }
        if (elements.empty())
            throw UsageError("empty subset text (use '-')");
        return from_elements(elements, ground_n);
    }

    auto SubsetWord::elements() const -> vector<int>
    {
        vector<int> result;
        result.reserve(size());
        for (uint64_t rest = _bits; rest != 0; rest &= rest - 1)
            result.push_back(std::countr_zero(rest) + 1);
        return result;
    }

    auto SubsetWord::to_string() const -> string
    {
        if (_bits == 0)
            return "-";
        string out;
        for (uint64_t rest = _bits; rest != 0; rest &= rest - 1) {
            if (! out.empty())
                out += ',';
            out += std::to_string(std::countr_zero(rest) + 1);
        }
        return out;
    }

    auto symm_diff_size(const SubsetWord & a, const SubsetWord & b) -> int
    {
        check_same_ground(a, b);
        return std::popcount(a.bits() ^ b.bits());
    }

    auto intersect_size(const SubsetWord & a, const SubsetWord & b) -> int
    {
        check_same_ground(a, b);
        return std::popcount(a.bits() & b.bits());
    }

    auto complement(const SubsetWord & a) -> SubsetWord
    {
        return SubsetWord{~a.bits() & full_mask(a.ground_n()), a.ground_n()};
    }

    auto is_proper_subset(const SubsetWord & a, const SubsetWord & b) -> bool
    {
        check_same_ground(a, b);
        return a.bits() != b.bits() && (a.bits() & ~b.bits()) == 0;
    }

    auto binomial(int n, int k) -> uint64_t
    {
        if (n < 0 || n > 64 || k < 0)
            throw UsageError("binomial arguments out of range");
        return k > n ? 0 : pascal[n][k];
    }

    // Combinadic: the i-th smallest element at 0-based position p contributes C(p, i).
    auto colex_rank(const SubsetWord & a) -> uint64_t
    {
        uint64_t rank = 0;
        int i = 1;
        for (uint64_t rest = a.bits(); rest != 0; rest &= rest - 1, ++i)
            rank += pascal[std::countr_zero(rest)][i];
        return rank;
    }

    auto colex_unrank(uint64_t rank, int n, int k) -> SubsetWord
    {
        check_ground(n);
        if (k < 0 || k > n)
            throw UsageError("subset size " + std::to_string(k) + " invalid for [" + std::to_string(n) + "]");
        if (rank >= pascal[n][k])
            throw UsageError("rank " + std::to_string(rank) + " out of range for " + std::to_string(k) + "-subsets of [" +
                std::to_string(n) + "]");
        uint64_t bits = 0;
        int position = n - 1;
        for (int i = k; i >= 1; --i) {
            while (pascal[position][i] > rank)
                --position;
            bits |= uint64_t{1} << position;
            rank -= pascal[position][i];
            --position;
        }
        return SubsetWord{bits, n};
    }

    auto enumerate_k_subsets(int n, int k) -> vector<SubsetWord>
    {
        check_ground(n);
        if (k < 0 || k > n)
            throw UsageError("cannot take " + std::to_string(k) + "-subsets of [" + std::to_string(n) + "]");
        vector<SubsetWord> result;
        auto count = pascal[n][k];
        result.reserve(count);
        if (k == 0) {
            result.emplace_back(0, n);
            return result;
        }
        // Gosper's hack walks fixed-popcount words in increasing numeric order.
        uint64_t word = full_mask(k);
        for (uint64_t i = 0; i < count; ++i) {
            result.emplace_back(word, n);
            if (i + 1 == count)
                break;
            uint64_t low = word & (~word + 1);
            uint64_t ripple = word + low;
            word = ripple | (((word ^ ripple) >> 2) >> std::countr_zero(low));
        }
        return result;
    }
}
