#include <doctest.h>

#include <map>
#include <string>

#include "palfm/error.hpp"
#include "palfm/oracle.hpp"
#include "support.hpp"

using namespace palfm;
using namespace palfm::oracle;
using palfm::test::I;
using palfm::test::lengths;
using palfm::test::symbols;

TEST_CASE("palindromes") {
    CHECK(is_palindrome("abba"));
    CHECK_FALSE(is_palindrome("ab"));
    CHECK(is_palindrome("babbbab"));
    CHECK(is_palindrome(""));
    CHECK(is_palindrome("x"));
}

TEST_CASE("pal_match") {
    CHECK(pal_match("abcbaaca", "bcacbbdb"));
    CHECK_FALSE(pal_match("ab", "aa"));
    CHECK(pal_match("abbbabb", "baaabaa"));
    CHECK(pal_match("", ""));
    CHECK_THROWS_AS(pal_match("ab", "abc"), usage_error);
}

TEST_CASE("brute-force encodings") {
    CHECK(ssp_naive("abbbabb") == lengths({I, I, 2, 2, 5, 3, 2}));
    CHECK(ssp_naive("").empty());
    CHECK(ssp_naive("aaaa") == lengths({I, 2, 2, 2}));
    CHECK(lpal_naive("babbbabb") == std::vector<std::uint32_t>{1, 1, 3, 2, 3, 5, 7, 5});
    CHECK(lpal_second_naive("abbbabb") == std::vector<std::uint32_t>{0, 0, 1, 2, 1, 1, 2});
    CHECK(spp_naive("bbabbbab") == lengths({2, 3, 5, 2, 2, 3, I, I}));
    CHECK(maximal_palindromes_naive("aba") == std::vector<std::uint32_t>{1, 0, 3, 0, 1});
}

TEST_CASE("group enumeration") {
    const auto fig = groups_naive("bababababacababacababacababa");
    const auto& last = fig.partitions.back();
    REQUIRE(last.size() == 3);
    CHECK(fig.gstar.back() == 3);
    const char keys[] = {'a', 'b', 'c'};
    const std::uint32_t reps[] = {0, 1, 5};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(last[k].id == k + 1);
        CHECK(last[k].key == keys[k]);
        CHECK(last[k].representative() == reps[k]);
    }

    const auto single = groups_naive("a");
    CHECK(single.gstar == std::vector<std::uint32_t>{1});
    REQUIRE(single.partitions[1].size() == 2);
    CHECK(single.partitions[1][0].key == 'a');
    CHECK(single.partitions[1][0].lengths == std::vector<std::uint32_t>{0});
    // the whole prefix "a" forms the boundary group
    CHECK_FALSE(single.partitions[1][1].key.has_value());

    CHECK(groups_naive("babbbabb").sspg == symbols({I, I, 2, 1, 1, 2, 2, 1}));
}

TEST_CASE("group identifiers are dense") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        const auto w = test::random_text(rng, rng() % 30, 2 + round % 3);
        const auto g = groups_naive(w);
        for (std::size_t j = 1; j <= w.size(); ++j) {
            std::uint32_t expect = 1;
            for (const auto& grp : g.partitions[j]) {
                if (grp.key) {
                    CHECK(grp.id == expect++);
                }
            }
            CHECK(g.gstar[j - 1] == expect - 1);
        }
    }
}

TEST_CASE("naive search") {
    CHECK(naive_search("abbabbcbc", "bb") == std::vector<std::size_t>{2, 5});
    CHECK(naive_search("abbabbcbc", "aba") == std::vector<std::size_t>{3, 6, 7});
    CHECK(naive_search("abc", "aaaa").empty());
}

TEST_CASE("ssp and lpal classes coincide with pal-match classes") {
    for (std::size_t len = 1; len <= 8; ++len) {
        std::vector<std::string> all;
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            std::string s(len, 'a');
            for (std::size_t k = 0; k < len; ++k) {
                if ((mask >> k) & 1U) {
                    s[k] = 'b';
                }
            }
            all.push_back(s);
        }
        for (std::size_t x = 0; x < all.size(); ++x) {
            for (std::size_t y = x; y < all.size(); ++y) {
                const bool match = pal_match(all[x], all[y]);
                CHECK((ssp_naive(all[x]) == ssp_naive(all[y])) == match);
                CHECK((lpal_naive(all[x]) == lpal_naive(all[y])) == match);
            }
        }
    }
}

TEST_CASE("size guard") {
    const std::string big(kMaxOracleLength + 1, 'a');
    CHECK_THROWS_AS(ssp_naive(big), usage_error);
    CHECK_THROWS_AS(naive_search(big, "a"), usage_error);
}
