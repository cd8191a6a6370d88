#include "constlab/predicates.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace constlab;

namespace {

Scf table(std::uint64_t bits) { return Scf::from_table_bits(3, bits); }

// f = 1 exactly on the listed vector strings (voter 0 leftmost)
Scf accepts(std::initializer_list<const char*> strings)
{
    Scf f(3);
    for (const char* s : strings)
        f.set(vec_from_string(s), true);
    return f;
}

} // namespace

TEST_CASE("never negation-agnostic")
{
    CHECK(is_never_negation_agnostic(materialize(ConstantZero{}, 3)));
    CHECK(is_never_negation_agnostic(materialize(SimpleMajority{}, 3)));
    CHECK_FALSE(is_never_negation_agnostic(accepts({"100", "011"})));
}

TEST_CASE("every named rule is never negation-agnostic at n=3")
{
    const std::vector<NamedScf> named = {
        Unanimity{},         SimpleMajority{},          QualifiedMajority{Rat(2, 3)},
        Dictatorship{1},     AntiDictatorship{2},       Oligarchy{{0, 1, 2}},
        ConsensusDuopoly{0, 2}, OligopolyWithVeto{1, 0, 2}, ConstantZero{},
    };
    for (const auto& spec : named)
        CHECK(is_never_negation_agnostic(materialize(spec, 3)));
}

TEST_CASE("downward closed")
{
    CHECK(is_downward_closed(materialize(ConstantZero{}, 3)));
    CHECK(is_downward_closed(materialize(SimpleMajority{}, 3)));
    // accepted only at 000: the pair (100, 010) is rejected but intersects to 000
    CHECK_FALSE(is_downward_closed(accepts({"000"})));
}

TEST_CASE("rejective consensus")
{
    CHECK(respects_rejective_consensus(materialize(Dictatorship{1}, 3)));
    CHECK_FALSE(respects_rejective_consensus(materialize(AntiDictatorship{1}, 3)));
    CHECK(respects_rejective_consensus(materialize(Unanimity{}, 3)));
}

TEST_CASE("bounded monotonicity violation")
{
    // monotone rules have no violating pair
    CHECK(has_bounded_monotonicity_violation(materialize(SimpleMajority{}, 3)));
    CHECK(has_bounded_monotonicity_violation(materialize(Unanimity{}, 3)));
    // the two-vector rule from the gap between the conditions
    CHECK(has_bounded_monotonicity_violation(accepts({"110", "100"})));
    // f(100)=1, f(110)=0 violates monotonicity, and 101 extends {0} avoiding {1}
    CHECK_FALSE(has_bounded_monotonicity_violation(accepts({"100", "111"})));
}

TEST_CASE("bounded downward sensitivity")
{
    // all three one-voter removals of 111 rejected: count 3 > 2
    CHECK_FALSE(has_bounded_downward_sensitivity(accepts({"111"})));
    CHECK(has_bounded_downward_sensitivity(accepts({"111", "110"})));
    // vacuous when no accepted vector has support >= 3
    CHECK(has_bounded_downward_sensitivity(accepts({"110", "100"})));
}

TEST_CASE("strong duo")
{
    CHECK(has_strong_duo(materialize(ConsensusDuopoly{0, 1}, 3)));
    CHECK_FALSE(has_strong_duo(materialize(ConstantZero{}, 3)));
    CHECK_FALSE(has_strong_duo(materialize(Unanimity{}, 3)));
}

TEST_CASE("entangled pairs")
{
    using P = std::pair<Voter, Voter>;
    CHECK(entangled_pairs(materialize(Oligarchy{{0, 1, 2}}, 3)) ==
          std::vector<P>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(entangled_pairs(materialize(ConsensusDuopoly{0, 1}, 3)) == std::vector<P>{{0, 1}});
    CHECK(entangled_pairs(materialize(ConstantZero{}, 3)).empty());
    CHECK(entangled_pairs(accepts({"110", "100"})).empty());
}

TEST_CASE("entangled classification")
{
    const auto veto = classify_entangled(materialize(OligopolyWithVeto{0, 1, 2}, 3));
    CHECK(veto.kind == EntangledKind::ConservativeFlowerForm);
    CHECK(veto.center == 0);
    CHECK(veto.pairs == std::vector<std::pair<Voter, Voter>>{{0, 1}, {0, 2}});

    CHECK(classify_entangled(materialize(Oligarchy{{0, 1, 2}}, 3)).kind ==
          EntangledKind::ThreeOligopoly);
    CHECK(classify_entangled(materialize(ConsensusDuopoly{1, 2}, 3)).kind ==
          EntangledKind::ConservativeFlowerForm);

    // A dictatorship follows every pair that contains the dictator, so it is
    // a flower form with the dictator at the center, but not conservative:
    // it accepts when the dictator disagrees with everyone.
    const auto dict = classify_entangled(materialize(Dictatorship{0}, 3));
    CHECK(dict.kind == EntangledKind::FlowerForm);
    CHECK(dict.center == 0);
    CHECK(dict.pairs == std::vector<std::pair<Voter, Voter>>{{0, 1}, {0, 2}});
    CHECK(classify_entangled(accepts({"100", "110"})).kind == EntangledKind::NotEntangled);
}

TEST_CASE("every entangled rule at n=3 is a 3-oligopoly or flower form")
{
    int entangled_count = 0;
    for (std::uint32_t t = 0; t < 256; ++t) {
        const Scf f = table(t);
        const auto cls = classify_entangled(f);
        if (cls.pairs.empty()) {
            CHECK(cls.kind == EntangledKind::NotEntangled);
            continue;
        }
        ++entangled_count;
        CHECK((cls.kind == EntangledKind::ThreeOligopoly ||
               cls.kind == EntangledKind::FlowerForm ||
               cls.kind == EntangledKind::ConservativeFlowerForm));
    }
    CHECK(entangled_count > 0);
}

TEST_CASE("each flower pair-set at n=3 has exactly one conservative rule")
{
    // possible flower pair sets over three voters: three singletons and
    // three two-petal sets
    std::map<std::set<std::pair<Voter, Voter>>, int> conservative_count;
    for (std::uint32_t t = 0; t < 256; ++t) {
        const auto cls = classify_entangled(table(t));
        if (cls.kind == EntangledKind::ConservativeFlowerForm)
            conservative_count[{cls.pairs.begin(), cls.pairs.end()}]++;
    }
    CHECK(conservative_count.size() == 6);
    for (const auto& [pairs, count] : conservative_count)
        CHECK(count == 1);
}

TEST_CASE("anonymity and monotonicity")
{
    CHECK(is_anonymous(materialize(SimpleMajority{}, 3)));
    CHECK(is_monotone(materialize(SimpleMajority{}, 3)));
    CHECK_FALSE(is_anonymous(materialize(Dictatorship{0}, 3)));
    CHECK(is_monotone(materialize(Dictatorship{0}, 3)));
    CHECK_FALSE(is_monotone(materialize(AntiDictatorship{0}, 3)));
}

TEST_CASE("anonymous monotone rules at n=3 are the five threshold tables")
{
    std::set<std::uint64_t> tables;
    for (std::uint32_t t = 0; t < 256; ++t) {
        const Scf f = table(t);
        if (is_anonymous(f) && is_monotone(f))
            tables.insert(t);
    }
    // thresholds k = 0..n+1 collapse to n+2 distinct tables: all-ones,
    // cutoffs 1..n, all-zeros
    CHECK(tables.size() == 5);
    std::set<std::uint64_t> thresholds;
    for (int k = 0; k <= 4; ++k)
        thresholds.insert(materialize(Threshold{k}, 3).table_bits());
    CHECK(tables == thresholds);
}
