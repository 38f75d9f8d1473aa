#include "oracles.hpp"

#include <meanderkit/enumeration.hpp>
#include <meanderkit/spectrum.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace meanderkit;

TEST(Measure, WorkedExampleTable)
{
    // 1|4/2|3: the single path is v1 - v2 - v5 - v3 - v4
    const auto m = parse_type("1|4/2|3");
    const std::vector<std::tuple<int, int, int>> table{
        {1, 1, 0}, {1, 2, 1},  {2, 2, 0}, {3, 2, 2},  {3, 3, 0},  {3, 4, -1}, {3, 5, 1},  {4, 2, 3},
        {4, 3, 1}, {4, 4, 0},  {4, 5, 2}, {5, 2, 1},  {5, 3, -1}, {5, 4, -2}, {5, 5, 0},
    };
    const OrientedMeander om(m);
    for (auto [i, j, want] : table) {
        EXPECT_EQ(om.measure(i, j), want) << i << "," << j;
        int o = 0;
        ASSERT_TRUE(oracle::measure(m, i, j, o));
        EXPECT_EQ(o, want) << i << "," << j;
    }
}

TEST(Measure, RejectsCyclesAndSplitComponents)
{
    EXPECT_THROW(measure(parse_type("2/2"), 1, 2), PreconditionError);
    EXPECT_THROW(measure(parse_type("1|1/1|1"), 1, 2), PreconditionError);
    EXPECT_THROW(measure(parse_type("1/1"), 1, 2), PreconditionError);
    EXPECT_EQ(measure(parse_type("2/2"), 1, 1), 0);
}

TEST(Spectrum, WorkedExample)
{
    const Spectrum s = spectrum(parse_type("1|4/2|3"));
    EXPECT_EQ(to_string(s), "{-2:1, -1:2, 0:4, 1:4, 2:2, 3:1}");
    EXPECT_EQ(s.total(), admissible_pair_count(parse_type("1|4/2|3")) - 1);
    EXPECT_EQ(classify(s), (SpectrumFlags{true, true, true, true}));
}

TEST(Spectrum, SmallCases)
{
    EXPECT_EQ(to_string(spectrum(parse_type("1/1"))), "{}");
    EXPECT_EQ(to_string(spectrum(parse_type("1|2/3"))), "{-1:1, 0:2, 1:2, 2:1}");
    try {
        spectrum(parse_type("3/3"));
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_STREQ(e.what(), "not Frobenius (index 2)");
    }
}

TEST(Spectrum, MatchesBreadthFirstOracle)
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            if (oracle::index(m) != 0) {
                continue;
            }
            const auto want = oracle::spectrum(m);
            ASSERT_EQ(spectrum(m).dims, (std::map<int, std::int64_t>(want.begin(), want.end()))) << to_string(m);
        }
    }
}

TEST(Spectrum, FlipLeavesTheSpectrumAlone)
{
    std::mt19937_64 rng(3);
    int seen = 0;
    while (seen < 200) {
        const auto m = random_meander(std::uniform_int_distribution<int>(1, 16)(rng), rng);
        if (index_naive(m) != 0) {
            continue;
        }
        ++seen;
        EXPECT_EQ(spectrum(m), spectrum(m.flipped())) << to_string(m);
    }
}

TEST(AdmissiblePairs, CountFormula)
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            ASSERT_EQ(static_cast<std::int64_t>(admissible_pairs(m).size()), admissible_pair_count(m));
        }
    }
}

TEST(Classify, Flags)
{
    auto make = [](std::map<int, std::int64_t> d) { return Spectrum{std::move(d)}; };
    EXPECT_EQ(classify(make({})), (SpectrumFlags{true, true, true, true}));
    EXPECT_EQ(classify(make({{0, 1}, {1, 1}})), (SpectrumFlags{true, true, true, true}));
    // gap at 1
    EXPECT_EQ(classify(make({{-1, 1}, {0, 2}, {2, 1}})).unbroken, false);
    // symmetric but with a flat step away from the middle
    const auto flat = classify(make({{-2, 2}, {-1, 2}, {0, 3}, {1, 3}, {2, 2}, {3, 2}}));
    EXPECT_TRUE(flat.symmetric);
    EXPECT_TRUE(flat.unimodal);
    EXPECT_FALSE(flat.strictly_unimodal);
    const auto dip = classify(make({{-1, 2}, {0, 1}, {1, 1}, {2, 2}}));
    EXPECT_TRUE(dip.symmetric);
    EXPECT_FALSE(dip.unimodal);
    EXPECT_FALSE(classify(make({{0, 2}, {1, 1}})).symmetric);
}

TEST(BlockMeasures, WorkedExampleSecondTopBlock)
{
    EXPECT_EQ(block_measures(parse_type("1|4/2|3"), {Side::Top, 2}), (std::vector<int>{-2, -1, 0, 0, 1, 1, 2, 3}));
    EXPECT_TRUE(symmetric_unbroken({-2, -1, 0, 0, 1, 1, 2, 3}));
    EXPECT_FALSE(symmetric_unbroken({-2, 0, 1, 3}));
    EXPECT_THROW(block_measures(parse_type("1|4/2|3"), {Side::Top, 3}), PreconditionError);
    EXPECT_THROW(block_measures(parse_type("3/3"), {Side::Top, 1}), PreconditionError);
}

TEST(BlockMeasures, AllBlocksOfSmallMeanders)
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            if (index_naive(m) != 0) {
                continue;
            }
            for (std::size_t k = 1; k <= m.top.size(); ++k) {
                ASSERT_TRUE(symmetric_unbroken(block_measures(m, {Side::Top, static_cast<int>(k)}))) << to_string(m);
            }
            for (std::size_t k = 1; k <= m.bottom.size(); ++k) {
                ASSERT_TRUE(symmetric_unbroken(block_measures(m, {Side::Bottom, static_cast<int>(k)})))
                    << to_string(m);
            }
        }
    }
}
