#include "constlab/scf.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace constlab;

TEST_CASE("vector encoding and counts")
{
    // string form writes voter 0 leftmost
    CHECK(vec_to_string(0b011, 3) == "110");
    CHECK(vec_from_string("110") == 0b011);
    CHECK(vec_from_string("001") == 0b100);
    CHECK(eta(0b011, 3, 1) == 2);
    CHECK(eta(0b011, 3, 0) == 1);

    for (Vec v = 0; v < 8; ++v) {
        CHECK(eta(v, 3, 1) == support_size(v));
        CHECK(eta(v, 3, 0) == 3 - support_size(v));
        CHECK(vec_from_string(vec_to_string(v, 3)) == v);
    }
}

TEST_CASE("vector negation")
{
    CHECK(negate_vec(vec_from_string("000"), 3) == vec_from_string("111"));
    CHECK(negate_vec(vec_from_string("101"), 3) == vec_from_string("010"));
    for (Vec v = 0; v < 8; ++v)
        CHECK(negate_vec(negate_vec(v, 3), 3) == v);

    CHECK(negate_vector(VotingVector(3, 0b101)).bits == 0b010);
    CHECK_THROWS_AS(VotingVector(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(VotingVector(0, 0), std::invalid_argument);
}

TEST_CASE("dictatorship materializes to the dictator's bit")
{
    const Scf f = materialize(Dictatorship{0}, 3);
    for (Vec v = 0; v < 8; ++v)
        CHECK(f(v) == static_cast<int>(v & 1u));
    CHECK(f.table_bits() == 0xaa);
}

TEST_CASE("consensus duopoly accepts exactly the two agreement-on-1 vectors")
{
    const Scf f = materialize(ConsensusDuopoly{0, 1}, 3);
    for (Vec v = 0; v < 8; ++v) {
        const bool expect = v == vec_from_string("110") || v == vec_from_string("111");
        CHECK(f(v) == (expect ? 1 : 0));
    }
}

TEST_CASE("threshold 2 equals simple majority at n=3")
{
    CHECK(materialize(Threshold{2}, 3) == oracles::brute_simple_majority(3));
    CHECK(materialize(SimpleMajority{}, 3) == oracles::brute_simple_majority(3));
}

TEST_CASE("simple majority equals the middle threshold for odd n")
{
    for (int n : {3, 5, 7})
        CHECK(materialize(SimpleMajority{}, n) == materialize(Threshold{(n + 1) / 2}, n));
}

TEST_CASE("named rule materialization against hand tables")
{
    CHECK(materialize(Unanimity{}, 3).table_bits() == 0x80);
    CHECK(materialize(ConstantZero{}, 3).table_bits() == 0x00);
    CHECK(materialize(AntiDictatorship{0}, 3).table_bits() == 0x55);
    // 3-oligopoly on everyone == simple majority
    CHECK(materialize(Oligarchy{{0, 1, 2}}, 3) == materialize(SimpleMajority{}, 3));
    // oligarchy with an even set needs a strict majority: {0,1} behaves as
    // consensus of the pair
    CHECK(materialize(Oligarchy{{0, 1}}, 3) == materialize(ConsensusDuopoly{0, 1}, 3));
    // veto rule: f = v0 & (v1 | v2)
    const Scf veto = materialize(OligopolyWithVeto{0, 1, 2}, 3);
    for (Vec v = 0; v < 8; ++v)
        CHECK(veto(v) == ((v & 1u) && ((v >> 1) & 1u || (v >> 2) & 1u) ? 1 : 0));
    // qualified 2/3 majority at n=3 passes only with eta > 2
    const Scf q = materialize(QualifiedMajority{Rat(2, 3)}, 3);
    for (Vec v = 0; v < 8; ++v)
        CHECK(q(v) == (support_size(v) == 3 ? 1 : 0));
}

TEST_CASE("materialization rejects bad parameters")
{
    CHECK_THROWS_AS(materialize(Dictatorship{3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(AntiDictatorship{-1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(Oligarchy{{}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(Oligarchy{{0, 0}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(ConsensusDuopoly{1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(QualifiedMajority{Rat(1, 2)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(QualifiedMajority{Rat(5, 4)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(Threshold{5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(materialize(Threshold{-1}, 3), std::invalid_argument);
}

TEST_CASE("canonical text round-trips every table at n=3")
{
    for (std::uint32_t t = 0; t < 256; ++t) {
        const Scf f = Scf::from_table_bits(3, t);
        const Scf back = Scf::parse_canonical(f.canonical());
        CHECK(back == f);
    }
    CHECK(materialize(SimpleMajority{}, 3).canonical() == "n=3;table=e8");
    CHECK(materialize(ConstantZero{}, 3).canonical() == "n=3;table=0");
}

TEST_CASE("canonical text round-trips at n=7")
{
    const Scf f = materialize(Threshold{4}, 7);
    CHECK(Scf::parse_canonical(f.canonical()) == f);
    CHECK_THROWS_AS(Scf::parse_canonical("n=3;table="), std::invalid_argument);
    CHECK_THROWS_AS(Scf::parse_canonical("table=ff"), std::invalid_argument);
    CHECK_THROWS_AS(Scf::parse_canonical("n=3;table=1ff"), std::invalid_argument);
    CHECK_THROWS_AS(Scf::parse_canonical("n=3;table=xy"), std::invalid_argument);
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("1/2") == Rat(1, 2));
    CHECK(parse_rational("0.65") == Rat(13, 20));
    CHECK(parse_rational("2") == Rat(2));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(3)) == "3/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
