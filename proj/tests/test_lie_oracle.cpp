#include "oracles.hpp"

#include <meanderkit/enumeration.hpp>
#include <meanderkit/lie_oracle.hpp>
#include <meanderkit/winding.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace meanderkit;

TEST(Pattern, OneTwoOverThree)
{
    const auto pat = seaweed_positions(parse_type("1|2/3"));
    const std::vector<Position> want{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
    EXPECT_EQ(pat.positions(), want);
    EXPECT_FALSE(pat.contains(2, 1));
    EXPECT_EQ(pat.index(4, 1), -1);
}

TEST(Pattern, SizeIsHalfTheSumOfSquares)
{
    for (int n = 1; n <= 12; ++n) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        const int count = n <= 6 ? static_cast<int>(meander_count(n)) : 300;
        for (int i = 0; i < count; ++i) {
            const auto m = n <= 6 ? meander_at(n, static_cast<std::uint64_t>(i)) : random_meander(n, rng);
            long long sq = 0;
            for (int a : m.top.parts) {
                sq += a * a;
            }
            for (int b : m.bottom.parts) {
                sq += b * b;
            }
            ASSERT_EQ(static_cast<long long>(seaweed_positions(m).size()), sq / 2) << to_string(m);
        }
    }
}

TEST(CanonicalFunctional, OneTwoOverThree)
{
    const auto f = canonical_functional(parse_type("1|2/3"));
    std::vector<Position> support;
    for (const auto& [p, v] : f.coefficients) {
        support.push_back(p);
        EXPECT_EQ(v, 1);
    }
    EXPECT_EQ(support, (std::vector<Position>{{1, 3}, {3, 2}}));
    EXPECT_TRUE(canonical_functional(parse_type("1/1")).coefficients.empty());
    const auto g = canonical_functional(parse_type("2/1|1"));
    EXPECT_EQ(g.coefficients.size(), 1U);
    EXPECT_EQ(g(2, 1), 1);
}

TEST(Kirillov, AlwaysAntisymmetric)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_meander(std::uniform_int_distribution<int>(1, 7)(rng), rng);
        const SeaweedPattern pat(m);
        Functional f;
        for (const auto& p : pat.positions()) {
            f.coefficients[p] = std::uniform_int_distribution<int>(-9, 9)(rng);
        }
        EXPECT_TRUE(kirillov_matrix(pat, f).is_antisymmetric()) << to_string(m);
    }
}

TEST(IndexOracle, Examples)
{
    EXPECT_EQ(index_oracle(parse_type("1|2/3")), 0);
    EXPECT_EQ(index_oracle(parse_type("3/3")), 2);
    EXPECT_EQ(index_oracle(parse_type("2|1/2|1")), 2);
    EXPECT_THROW(index_oracle(parse_type("13/13")), PreconditionError);
}

TEST(IndexOracle, AgreesWithComponentsOnSmallMeanders)
{
    for (int n = 1; n <= 4; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            ASSERT_EQ(index_oracle(m), oracle::index(m)) << to_string(m);
        }
    }
}

TEST(PrincipalElement, OneTwoOverThree)
{
    const auto x = principal_element(parse_type("1|2/3"));
    EXPECT_TRUE(x.is_diagonal());
    EXPECT_EQ(x.diagonal(), (std::vector<Rational>{1, -1, 0}));
}

TEST(PrincipalElement, SingleVertex)
{
    const auto x = principal_element(parse_type("1/1"));
    EXPECT_EQ(x.diagonal(), (std::vector<Rational>{0}));
}

TEST(PrincipalElement, DefiningEquationHoldsExactly)
{
    for (const char* s : {"1|4/2|3", "6|1/2|3|2", "2|2|3/5|2", "1|2/3"}) {
        const auto m = parse_type(s);
        const auto x = principal_element(m);
        const SeaweedPattern pat(m);
        const auto f = canonical_functional(m);
        // integral up to the common shift that makes the trace vanish
        Rational trace = 0;
        for (int i = 1; i <= x.n; ++i) {
            trace += x.at(i, i);
            EXPECT_EQ(Rational(x.at(i, i) - x.at(1, 1)).get_den(), 1) << s;
        }
        EXPECT_EQ(trace, 0) << s;
        // F([X, e_ab]) = F(e_ab) for every pattern position
        for (const auto& [a, b] : pat.positions()) {
            Rational lhs = 0;
            for (int i = 1; i <= x.n; ++i) {
                lhs += x.at(i, a) * f(i, b);  // (X e_ab)_{ib} = X_ia
                lhs -= x.at(b, i) * f(a, i);  // (e_ab X)_{ai} = X_bi
            }
            EXPECT_EQ(lhs, f(a, b)) << s << " at " << a << "," << b;
        }
    }
}

TEST(PrincipalElement, NonFrobeniusIsRejected)
{
    EXPECT_THROW(principal_element(parse_type("2/2")), PreconditionError);
}

TEST(AdSpectrum, WorkedExamples)
{
    EXPECT_EQ(to_string(ad_spectrum_oracle(parse_type("1|4/2|3"))), "{-2:1, -1:2, 0:4, 1:4, 2:2, 3:1}");
    EXPECT_EQ(to_string(ad_spectrum_oracle(parse_type("1/1"))), "{}");
    EXPECT_EQ(to_string(ad_spectrum_oracle(parse_type("1|2/3"))), "{-1:1, 0:2, 1:2, 2:1}");
}

TEST(AdSpectrum, MatchesPathMeasures)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto m = generate_frobenius(static_cast<int>(seed % 6) + 1, seed);
        if (m.order() > 8) {
            continue;
        }
        const auto want = oracle::spectrum(m);
        EXPECT_EQ(ad_spectrum_oracle(m).dims, (std::map<int, std::int64_t>(want.begin(), want.end()))) << to_string(m);
    }
}

TEST(Cybe, HoldsForCanonicalRMatrix)
{
    EXPECT_TRUE(cybe_residual(parse_type("1|2/3")));
    EXPECT_TRUE(cybe_residual(parse_type("1/1")));
    EXPECT_TRUE(cybe_residual(parse_type("1|4/2|3")));
    EXPECT_TRUE(cybe_residual(parse_type("2/1|1")));
}

TEST(Cybe, PerturbedRMatrixFails)
{
    const auto m = parse_type("1|4/2|3");
    const SeaweedPattern pat(m);
    const auto basis = sl_basis(pat);
    auto r = canonical_r_matrix(pat, canonical_functional(m), basis);
    ASSERT_TRUE(r.is_antisymmetric());
    ASSERT_EQ(cybe_defect(pat, basis, r), 0U);
    r(0, 1) += 1;
    r(1, 0) -= 1;
    EXPECT_GT(cybe_defect(pat, basis, r), 0U);
}

TEST(Cybe, DegenerateFormIsRejected)
{
    EXPECT_THROW(cybe_residual(parse_type("3/3")), PreconditionError);
}
