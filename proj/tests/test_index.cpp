#include <doctest.h>

#include <random>

#include "palfm/error.hpp"
#include "palfm/index.hpp"
#include "palfm/oracle.hpp"
#include "palfm/palcore.hpp"
#include "support.hpp"

using namespace palfm;
using palfm::test::I;
using palfm::test::symbols;

namespace {

constexpr std::string_view kFixture = "abbabbcbc";

std::vector<std::size_t> sa_column(const PalFmIndex& idx) {
    std::vector<std::size_t> out;
    for (std::size_t r = 1; r <= idx.rows(); ++r) {
        out.push_back(idx.sa_access(r));
    }
    return out;
}

}  // namespace

TEST_CASE("fixture columns") {
    CHECK(pal_sorted_suffixes(kFixture) == std::vector<std::uint32_t>{10, 9, 2, 5, 8, 1, 4, 7, 3, 6});
    for (std::size_t delta : {1U, 2U, 4U, 9U}) {
        const auto idx = PalFmIndex::build(kFixture, delta);
        CAPTURE(delta);
        REQUIRE(idx.rows() == 10);
        CHECK(idx.max_group() == 2);
        std::vector<SymbolCode> f;
        std::vector<SymbolCode> l;
        std::vector<std::size_t> lf;
        for (std::size_t r = 1; r <= 10; ++r) {
            f.push_back(idx.f(r));
            l.push_back(idx.l(r));
            lf.push_back(idx.lf(r));
            CHECK(idx.lf_value(r) == idx.lf(r));
        }
        CHECK(f == symbols({0, I, 1, 1, I, 2, I, 2, 2, 2}));
        CHECK(l == symbols({I, I, 2, I, 2, 0, 2, 2, 1, 1}));
        CHECK(lf == std::vector<std::size_t>{2, 5, 6, 7, 8, 1, 9, 10, 3, 4});
        CHECK(sa_column(idx) == std::vector<std::size_t>{10, 9, 2, 5, 8, 1, 4, 7, 3, 6});
    }
}

TEST_CASE("a run of one character") {
    CHECK(pal_sorted_suffixes("aaa") == std::vector<std::uint32_t>{4, 3, 2, 1});
    const auto idx = PalFmIndex::build("aaa", 1);
    CHECK(idx.f(2) == SymbolCode::inf());
    CHECK(idx.f(3) == SymbolCode::group(1));
    CHECK(idx.l(4) == SymbolCode::dollar());
    CHECK(idx.lf(1) == 2);
    CHECK(idx.lf(4) == 1);
}

TEST_CASE("backward steps on the fixture") {
    const auto idx = PalFmIndex::build(kFixture, 1);
    CHECK(idx.backward_step({1, 10}, SymbolCode::inf(), 0) == PalInterval{2, 10});
    CHECK(idx.backward_step({2, 10}, SymbolCode::group(1), 1) == PalInterval{3, 4});
    CHECK(idx.backward_step({2, 10}, SymbolCode::inf(), 1) == PalInterval{5, 10});
    CHECK(idx.backward_step({2, 10}, SymbolCode::group(9), 1).empty());
    CHECK_THROWS_AS(idx.backward_step({}, SymbolCode::inf(), 0), usage_error);
}

TEST_CASE("count and locate") {
    const auto idx1 = PalFmIndex::build(kFixture, 1);
    CHECK(idx1.locate("bb") == std::vector<std::size_t>{2, 5});
    CHECK(idx1.count("bb") == 2);
    const auto idx3 = PalFmIndex::build(kFixture, 3);
    CHECK(idx3.locate("aba") == std::vector<std::size_t>{3, 6, 7});
    CHECK(idx1.locate("aba") == idx3.locate("aba"));
    CHECK(idx1.count("abbabbcbc") == 1);
    CHECK(idx1.count("x") == 9);

    const auto abc = PalFmIndex::build("abc", 1);
    CHECK(abc.locate("abcd").empty());
    CHECK(abc.count("abcd") == 0);
    CHECK_THROWS_AS(abc.count(""), usage_error);
    CHECK_THROWS_AS(abc.locate(""), usage_error);
}

TEST_CASE("sampled suffix-array access") {
    const auto idx = PalFmIndex::build(kFixture, 4);
    CHECK(idx.stats().samples == 3);
    CHECK(idx.sa_access(3) == 2);
    CHECK(idx.sa_access(6) == 1);
    CHECK_THROWS_AS(idx.sa_access(0), query_range_error);
    CHECK_THROWS_AS(idx.sa_access(11), query_range_error);
}

TEST_CASE("empty text") {
    const auto idx = PalFmIndex::build("", 1);
    CHECK(idx.rows() == 1);
    CHECK(idx.f(1).is_dollar());
    CHECK(idx.lf(1) == 1);
    CHECK(idx.sa_access(1) == 1);
    CHECK(idx.count("a") == 0);
    CHECK(idx.stats().n == 0);
}

TEST_CASE("build preconditions") {
    CHECK_THROWS_AS(PalFmIndex::build(kFixture, 0), usage_error);
    CHECK_THROWS_AS(PalFmIndex::build(kFixture, 10), usage_error);
    BuildOptions small;
    small.max_length = 5;
    CHECK_THROWS_AS(PalFmIndex::build(kFixture, 1, small), build_limit_error);
    small.force_large = true;
    CHECK(PalFmIndex::build(kFixture, 1, small).text_length() == 9);
}

TEST_CASE("queries agree with the naive search for every sampling rate") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 150; ++round) {
        const int sigma = 2 + round % 3;
        const auto t = test::random_text(rng, 1 + rng() % 80, sigma);
        std::vector<PalFmIndex> indexes;
        for (std::size_t delta : {1U, 4U, 16U}) {
            if (delta <= t.size()) {
                indexes.push_back(PalFmIndex::build(t, delta));
            }
        }
        for (int q = 0; q < 8; ++q) {
            const auto p = test::random_text(rng, 1 + rng() % 10, sigma);
            const auto want = oracle::naive_search(t, p);
            CAPTURE(t);
            CAPTURE(p);
            for (const auto& idx : indexes) {
                CHECK(idx.locate(p) == want);
                CHECK(idx.count(p) == want.size());
            }
        }
    }
}

TEST_CASE("intervals hold exactly the rows prefixed by the pattern encoding") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 60; ++round) {
        const auto t = test::random_text(rng, 1 + rng() % 30, 2 + round % 2);
        const auto idx = PalFmIndex::build(t, 1);
        const auto sa = pal_sorted_suffixes(t);
        const auto p = test::random_text(rng, 1 + rng() % 6, 2 + round % 2);
        const auto prof = pattern_preprocess(p);
        PalInterval iv{1, idx.rows()};
        for (std::size_t i = p.size(); i >= 1 && !iv.empty(); --i) {
            iv = idx.backward_step(iv, prof.pi[i - 1], prof.groups[i - 1]);
            const auto want = ssp(p.substr(i - 1));
            std::vector<std::size_t> rows;
            for (std::size_t r = 1; r <= idx.rows(); ++r) {
                const auto enc = ssp(std::string_view(t).substr(sa[r - 1] - 1));
                if (enc.size() >= want.size() && std::equal(want.begin(), want.end(), enc.begin())) {
                    rows.push_back(r);
                }
            }
            CAPTURE(t);
            CAPTURE(p);
            CAPTURE(i);
            if (rows.empty()) {
                CHECK(iv.empty());
            } else {
                CHECK(iv == PalInterval{rows.front(), rows.back()});
                CHECK(rows.size() == iv.width());
            }
        }
    }
}

TEST_CASE("from_parts round trip and strict validation") {
    const auto idx = PalFmIndex::build(kFixture, 2);
    const auto parts = idx.parts();
    const auto again = PalFmIndex::from_parts(parts);
    CHECK(again.parts().l_codes == parts.l_codes);
    CHECK(again.locate("aba") == idx.locate("aba"));

    auto bad = parts;
    std::swap(bad.f_codes[1], bad.f_codes[2]);
    CHECK_NOTHROW(PalFmIndex::from_parts(bad, PalFmIndex::validation::unchecked));
    bad = parts;
    bad.l_codes[0] = 1;  // histogram now differs
    CHECK_THROWS_AS(PalFmIndex::from_parts(bad), format_error);
    const auto loose = PalFmIndex::from_parts(bad, PalFmIndex::validation::unchecked);
    CHECK_FALSE(loose.lf_complete());
    bad = parts;
    bad.samples.pop_back();
    CHECK_THROWS_AS(PalFmIndex::from_parts(bad), format_error);
    bad = parts;
    bad.l_codes.pop_back();
    CHECK_THROWS_AS(PalFmIndex::from_parts(bad, PalFmIndex::validation::unchecked), format_error);
}

TEST_CASE("stats") {
    const auto st = PalFmIndex::build(kFixture, 2).stats();
    CHECK(st.n == 9);
    CHECK(st.rows == 10);
    CHECK(st.max_group == 2);
    CHECK(st.delta == 2);
    CHECK(st.samples == 5);
    CHECK(st.total_bits == st.f_bits + st.l_bits + st.lf_bits + st.rmq_bits + st.sampled_bits + st.sample_value_bits);
}
