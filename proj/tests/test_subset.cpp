#include "oracles.hpp"

#include <panconnect/errors.hpp>
#include <panconnect/subset.hpp>

#include <doctest.h>

using namespace panconnect;

namespace
{
    auto set_of(std::initializer_list<int> elements, int n) -> SubsetWord
    {
        return SubsetWord::from_elements(elements, n);
    }
}

TEST_CASE("text form round-trips and renders the empty set as a dash")
{
    auto s = SubsetWord::parse("1,3,4", 5);
    CHECK(s.bits() == 0b1101U);
    CHECK(s.size() == 3);
    CHECK(s.to_string() == "1,3,4");
    CHECK(s.elements() == std::vector<int>{1, 3, 4});
    CHECK(SubsetWord::parse("-", 3).bits() == 0);
    CHECK(SubsetWord{0, 3}.to_string() == "-");
    CHECK(SubsetWord::parse("64", 64).contains(64));
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(SubsetWord::parse("1,,2", 4), UsageError);
    CHECK_THROWS_AS(SubsetWord::parse("0", 4), UsageError);
    CHECK_THROWS_AS(SubsetWord::parse("5", 4), UsageError);
    CHECK_THROWS_AS(SubsetWord::parse("2,1", 4), UsageError);
    CHECK_THROWS_AS(SubsetWord::parse("1, 2", 4), UsageError);
    CHECK_THROWS_AS(SubsetWord::parse("", 4), UsageError);
    CHECK_THROWS_AS(SubsetWord::from_elements({1, 1}, 4), UsageError);
    CHECK_THROWS_AS((SubsetWord{0b10000, 4}), UsageError);
    CHECK_THROWS_AS((SubsetWord{0, 65}), UsageError);
    CHECK_THROWS_AS((SubsetWord{0, 0}), UsageError);
}

TEST_CASE("set algebra examples")
{
    CHECK(symm_diff_size(set_of({1, 2}, 4), set_of({1, 3}, 4)) == 2);
    CHECK(symm_diff_size(set_of({1, 2}, 4), set_of({1, 2}, 4)) == 0);
    CHECK(symm_diff_size(set_of({1}, 3), set_of({2, 3}, 3)) == 3);
    CHECK(intersect_size(set_of({1, 2}, 4), set_of({1, 3}, 4)) == 1);
    CHECK(intersect_size(set_of({1, 2}, 4), set_of({3, 4}, 4)) == 0);
    CHECK(complement(set_of({1, 2}, 5)) == set_of({3, 4, 5}, 5));
    CHECK(complement(SubsetWord{0, 3}) == set_of({1, 2, 3}, 3));
    CHECK(complement(set_of({1, 3}, 4)) == set_of({2, 4}, 4));
    CHECK(complement(SubsetWord{0, 64}).bits() == ~std::uint64_t{0});
    CHECK(is_proper_subset(set_of({2}, 4), set_of({2, 3}, 4)));
    CHECK_FALSE(is_proper_subset(set_of({2, 3}, 4), set_of({2, 3}, 4)));
    CHECK_THROWS_AS((void) symm_diff_size(set_of({1}, 3), set_of({1}, 4)), UsageError);
}

TEST_CASE("set algebra agrees with std::set on every pair over [6]")
{
    for (std::uint64_t a = 0; a < 64; ++a)
        for (std::uint64_t b = 0; b < 64; ++b) {
            SubsetWord x{a, 6}, y{b, 6};
            auto sx = oracle::element_set(x), sy = oracle::element_set(y);
            std::vector<int> both, either;
            std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(both));
            std::set_symmetric_difference(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(either));
            REQUIRE(intersect_size(x, y) == static_cast<int>(both.size()));
            REQUIRE(symm_diff_size(x, y) == static_cast<int>(either.size()));
            REQUIRE(is_proper_subset(x, y) == (sx != sy && std::includes(sy.begin(), sy.end(), sx.begin(), sx.end())));
        }
}

TEST_CASE("binomial matches Pascal's rule")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(11, 5) == 462);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k < n; ++k)
            REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("colex rank examples")
{
    CHECK(colex_rank(set_of({1, 2}, 4)) == 0);
    CHECK(colex_rank(set_of({3, 4}, 4)) == 5);
    CHECK(colex_unrank(5, 4, 2) == set_of({3, 4}, 4));
    CHECK_THROWS_AS((void) colex_unrank(6, 4, 2), UsageError);
}

TEST_CASE("rank, unrank and enumeration agree with a sorted colex oracle")
{
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            auto expected = oracle::colex_subsets(n, k);
            auto listed = enumerate_k_subsets(n, k);
            REQUIRE(listed.size() == expected.size());
            REQUIRE(listed.size() == binomial(n, k));
            for (std::size_t r = 0; r < expected.size(); ++r) {
                auto s = SubsetWord::from_elements(expected[r], n);
                REQUIRE(listed[r] == s);
                REQUIRE(colex_rank(s) == r);
                REQUIRE(colex_unrank(r, n, k) == s);
                if (r > 0)
                    REQUIRE(listed[r - 1].bits() < listed[r].bits());
            }
        }
}

TEST_CASE("enumeration examples")
{
    auto singles = enumerate_k_subsets(3, 1);
    REQUIRE(singles.size() == 3);
    CHECK(singles[0].to_string() == "1");
    CHECK(singles[2].to_string() == "3");
    CHECK(enumerate_k_subsets(4, 2).size() == 6);
    CHECK(enumerate_k_subsets(5, 2).size() == 10);
}

TEST_CASE("round trip at full word width")
{
    for (std::uint64_t r : {std::uint64_t{0}, std::uint64_t{12345}, binomial(64, 3) - 1}) {
        auto s = colex_unrank(r, 64, 3);
        CHECK(colex_rank(s) == r);
        CHECK(SubsetWord::parse(s.to_string(), 64) == s);
    }
}
