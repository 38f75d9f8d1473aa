#include "oracles.hpp"

#include <meanderkit/enumeration.hpp>
#include <meanderkit/winding.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace meanderkit;

namespace {

std::string simplified(const char* m) { return to_string(signature_simplified(parse_type(m))); }
std::string refined(const char* m) { return to_string(signature_refined(parse_type(m))); }

} // namespace

TEST(Signature, WorkedExampleSixOne)
{
    EXPECT_EQ(simplified("6|1/2|3|2"), "P0 F0 R0 B0 F0 B0 F0 B0 C0(1)");
    EXPECT_TRUE(is_frobenius(signature_simplified(parse_type("6|1/2|3|2"))));
}

TEST(Signature, WorkedExampleSixteen)
{
    const auto m = parse_type("16|2|4/5|17");
    EXPECT_EQ(simplified("16|2|4/5|17"), "P0 F0 P0 C0(5) P0 F0 B0 C0(2)");
    EXPECT_EQ(index_from_signature(signature_simplified(m)), 6);
    EXPECT_EQ(index_naive(m), 6);
}

TEST(Signature, SingleMoves)
{
    EXPECT_EQ(simplified("3/3"), "C0(3)");
    EXPECT_EQ(simplified("1|2/3"), "F0 P0 F0 B0 C0(1)");
    EXPECT_EQ(simplified("4/2|2"), "B0 C0(2)");
    EXPECT_EQ(index_from_signature(parse_simplified_signature("C0(3)")), 2);
    EXPECT_EQ(index_from_signature(SimplifiedSignature{}), -1);
}

TEST(Signature, EachStepShrinksOrders)
{
    // P0: 6|1 over 2|3|2 drops 2*b1 = 4 vertices
    auto s = step_simplified(parse_type("6|1/2|3|2"));
    EXPECT_EQ(to_string(s.move), "P0");
    EXPECT_EQ(to_string(s.next), "2|2|1/3|2");
    s = step_simplified(parse_type("3|2/2|2|1"));
    EXPECT_EQ(to_string(s.move), "R0");
    EXPECT_EQ(to_string(s.next), "2|2/1|2|1");
    EXPECT_THROW(step_simplified(MeanderType{}), PreconditionError);
}

TEST(Refined, InternalComponentAroundTheCentre)
{
    const auto s = step_refined(parse_type("9/2|5|2"));
    EXPECT_EQ(s.move.tag, RefinedTag::IC);
    EXPECT_EQ(s.move.c, 5);
    EXPECT_EQ(s.move.block, 2);
    EXPECT_EQ(to_string(s.next), "4/2|2");
    EXPECT_EQ(index_naive(parse_type("9/2|5|2")) - index_naive(s.next), 5);
    EXPECT_EQ(refined("9/2|5|2"), "IC(5) B C(2)");
}

TEST(Refined, InternalBlockRemovesTheBlockEndingAtTheMiddle)
{
    // a1 = 16: v8 closes B2 = v4..v8, v9 opens B3
    const auto s = step_refined(parse_type("16/3|5|4|4"));
    EXPECT_EQ(s.move.tag, RefinedTag::IB);
    EXPECT_EQ(s.move.block, 2);
    EXPECT_EQ(to_string(s.next), "11/3|4|4");
    EXPECT_EQ(components(s.next), components(parse_type("16/3|5|4|4")));
}

TEST(Refined, InternalRotation)
{
    // a1 = 14: the centre lies in B2 = v4..v9, off its own centre
    const auto s = step_refined(parse_type("14/3|6|5"));
    EXPECT_EQ(s.move.tag, RefinedTag::IR);
    EXPECT_EQ(s.move.block, 2);
    EXPECT_EQ(to_string(s.next), "12/3|4|5");
    EXPECT_EQ(components(s.next), components(parse_type("14/3|6|5")));
}

TEST(Refined, PureFallbackWhenTheCentreBlockLeavesA1)
{
    // centre of A1 = v3.5 lies in B2 = v2..v6, which reaches past v5
    const auto s = step_refined(parse_type("5|1/1|5"));
    EXPECT_EQ(s.move.tag, RefinedTag::P);
    EXPECT_EQ(to_string(s.next), "3|1|1/5");
}

TEST(Refined, NonComponentMovesPreserveComponents)
{
    for (int n = 1; n <= 9; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            const auto s = step_refined(m);
            const auto before = components(m);
            const auto after = components(s.next);
            if (eliminates_component(s.move)) {
                ASSERT_EQ(index_naive(m) - index_naive(s.next), s.move.c) << to_string(m);
            } else {
                ASSERT_EQ(before, after) << to_string(m) << " " << to_string(s.move);
            }
            ASSERT_LT(s.next.order(), m.order() + (s.move.tag == RefinedTag::F ? 1 : 0)) << to_string(m);
        }
    }
}

TEST(Signature, IndexAgreesWithUnionFindOracle)
{
    for (int n = 1; n <= 9; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            const int want = oracle::index(m);
            ASSERT_EQ(index_from_signature(signature_simplified(m)), want) << to_string(m);
            ASSERT_EQ(index_from_signature(signature_refined(m)), want) << to_string(m);
        }
    }
}

TEST(Signature, NeverTwoFlipsInARow)
{
    for (int n = 1; n <= 9; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            const auto sig = signature_simplified(m);
            for (std::size_t i = 1; i < sig.size(); ++i) {
                ASSERT_FALSE(sig.moves[i].tag == SimplifiedTag::F0 && sig.moves[i - 1].tag == SimplifiedTag::F0)
                    << to_string(m);
            }
            ASSERT_TRUE(eliminates_component(sig.moves.back())) << to_string(m);
        }
    }
}

TEST(Signature, TextRoundTrip)
{
    const auto sig = signature_simplified(parse_type("16|2|4/5|17"));
    EXPECT_EQ(parse_simplified_signature(to_string(sig)), sig);
    EXPECT_EQ(to_string(parse_refined_signature("F C(3) B R IC(5) IB IR")), "F C(3) B R IC(5) IB IR");
    EXPECT_THROW(parse_simplified_signature("C0"), ParseError);
    EXPECT_THROW(parse_simplified_signature("F0(2)"), ParseError);
    EXPECT_THROW(parse_simplified_signature("X0"), ParseError);
    EXPECT_THROW(parse_simplified_signature("~F0"), ParseError);
    EXPECT_THROW(parse_refined_signature("C(0)"), ParseError);
    EXPECT_THROW(parse_refined_signature("IB(2)"), ParseError);
}

TEST(Homotopy, SixteenTwoFourSymbols)
{
    const auto h = homotopy_type(parse_type("16|2|4/5|17"));
    ASSERT_EQ(h.symbols.size(), 2U);
    EXPECT_EQ(h.symbols[0].c, 5);
    EXPECT_EQ(h.symbols[0].nested_cycles(), 2);
    EXPECT_TRUE(h.symbols[0].has_center_path());
    EXPECT_EQ(h.symbols[1].c, 2);
    EXPECT_FALSE(h.symbols[1].has_center_path());
    EXPECT_EQ(to_string(h), "{C(5): 2 circles + point, C(2): 1 circle}");
}

TEST(Homotopy, ParametersSumToIndexPlusOne)
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            int sum = 0;
            int points = 0;
            for (const auto& s : homotopy_type(m).symbols) {
                sum += s.c;
                points += s.has_center_path() ? 1 : 0;
            }
            const auto cs = components(m);
            ASSERT_EQ(sum, index_naive(m) + 1) << to_string(m);
            // a point marks a path; circles are cycles
            ASSERT_EQ(points, cs.paths) << to_string(m);
            ASSERT_EQ(sum - points, 2 * cs.cycles) << to_string(m);
        }
    }
}

TEST(WindUp, SixteenTwoFourSequence)
{
    const auto seq = parse_up_sequence("~C0(2) ~B0 ~F0 ~P0 ~C0(5) ~P0 ~F0 ~P0");
    EXPECT_EQ(to_string(wind_up(seq)), "16|2|4/5|17");
}

TEST(WindUp, SequenceParsing)
{
    EXPECT_THROW(parse_up_sequence(""), ParseError);
    EXPECT_THROW(parse_up_sequence("C0(2)"), ParseError);
    EXPECT_THROW(parse_up_sequence("~C0(2) ~IB(2)"), ParseError);
    EXPECT_THROW(parse_up_sequence("~C(1) ~IB"), ParseError);
    const auto seq = parse_up_sequence("~C(1) ~F ~IR(1)");
    ASSERT_TRUE(std::holds_alternative<std::vector<RefinedMove>>(seq));
    EXPECT_EQ(std::get<std::vector<RefinedMove>>(seq)[2].block, 1);
}

TEST(WindUp, PreconditionsAreEnforced)
{
    const auto one = parse_type("1/1");
    EXPECT_THROW(apply_up(one, SimplifiedMove{SimplifiedTag::F0, 0}), PreconditionError);
    EXPECT_THROW(apply_up(one, SimplifiedMove{SimplifiedTag::R0, 0}), PreconditionError);
    EXPECT_THROW(apply_up(one, SimplifiedMove{SimplifiedTag::P0, 0}), PreconditionError);
    EXPECT_THROW(apply_up(one, RefinedMove{RefinedTag::IB, 0, 2}), PreconditionError);
    EXPECT_THROW(wind_up(parse_up_sequence("~F0")), PreconditionError);
    EXPECT_EQ(to_string(apply_up(one, SimplifiedMove{SimplifiedTag::B0, 0})), "2/1|1");
    EXPECT_EQ(to_string(apply_up(one, SimplifiedMove{SimplifiedTag::C0, 3})), "3|1/3|1");
}

TEST(WindUp, InternalMovesInvertTheirDownMoves)
{
    EXPECT_EQ(to_string(apply_up(parse_type("4/2|2"), RefinedMove{RefinedTag::IC, 5, 0})), "9/2|5|2");
    EXPECT_EQ(to_string(apply_up(parse_type("11/3|4|4"), RefinedMove{RefinedTag::IB, 0, 2})), "16/3|5|4|4");
    EXPECT_EQ(to_string(apply_up(parse_type("12/3|4|5"), RefinedMove{RefinedTag::IR, 0, 2})), "14/3|6|5");
}

TEST(WindUp, SingleStepInversionUpToNine)
{
    for (int n = 1; n <= 9; ++n) {
        for (const auto& m : enumerate_meanders(n)) {
            const auto s = step_refined(m);
            ASSERT_EQ(apply_up(s.next, s.move), m) << to_string(m) << " " << to_string(s.move);
            const auto t = step_simplified(m);
            ASSERT_EQ(apply_up(t.next, t.move), m) << to_string(m) << " " << to_string(t.move);
        }
    }
}

TEST(WindUp, RandomRoundTrips)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 30)(rng);
        const auto m = random_meander(n, rng);
        ASSERT_EQ(wind_up(up_sequence(signature_simplified(m))), m) << to_string(m);
        ASSERT_EQ(wind_up(up_sequence(signature_refined(m))), m) << to_string(m);
    }
}

TEST(Generate, ZeroMovesGivesTheSingleVertex)
{
    EXPECT_EQ(to_string(generate_frobenius(0, 42)), "1/1");
    EXPECT_THROW(generate_frobenius(-1, 1), PreconditionError);
}

TEST(Generate, AlwaysFrobeniusAndReproducible)
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int moves = static_cast<int>(seed % 25);
        const auto m = generate_frobenius(moves, seed);
        ASSERT_EQ(oracle::index(m), 0) << seed << " " << to_string(m);
        ASSERT_EQ(m, generate_frobenius(moves, seed));
        ASSERT_EQ(generate_frobenius_sequence(moves, seed).size(), static_cast<std::size_t>(moves) + 1);
    }
}
