#include "constlab/thresholds.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace constlab;

TEST_CASE("exact binomial tail against the Pascal oracle")
{
    for (int m : {0, 1, 4, 9, 16})
        for (int k = 0; k <= m + 1; ++k)
            for (const Rat p : {Rat(1, 3), Rat(1, 2), Rat(13, 20)})
                CHECK(binomial_tail_ge(m, k, p) == oracles::pascal_binomial_tail(m, k, p));
    CHECK(binomial_tail_ge(5, 0, Rat(1, 3)) == 1);
    CHECK(binomial_tail_ge(5, 6, Rat(1, 3)) == 0);
}

TEST_CASE("closed-form threshold utility equals the dense computation")
{
    for (int n : {3, 5}) {
        for (int k = 1; k <= n; ++k) {
            for (const Rat p : {Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
                const Scf f = materialize(Threshold{k}, n);
                const Belief F = Belief::iid(IidParameter{p}, n);
                const Rat dense = utility(f, F, 0);
                CHECK(threshold_utility(n, k, p) == dense);
                // anonymity: every voter shares the same utility
                for (Voter i = 1; i < n; ++i)
                    CHECK(utility(f, F, i) == dense);
            }
        }
    }
}

TEST_CASE("simple majority is the unique stable threshold rule")
{
    for (int n : {3, 5, 7})
        for (const Rat p : {Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
            const auto stable = threshold_stable_set(n, p, TieBreak::StatusQuoBias);
            CHECK(stable == std::vector<int>{(n + 1) / 2});
        }
}

TEST_CASE("threshold graph has majority as its unique sink at n=5, p=1/2")
{
    const auto g = threshold_transition_graph(5, Rat(1, 2), TieBreak::StatusQuoBias);
    CHECK(g.stable_ks == std::vector<int>{3});
    for (int k = 1; k <= 5; ++k)
        if (k != 3)
            CHECK_FALSE(g.adj[static_cast<std::size_t>(k - 1)].empty());
}

TEST_CASE("threshold graph agrees with the dense engine at n=3")
{
    for (const Rat p : {Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
        const Belief F = Belief::iid(IidParameter{p}, 3);
        const auto dense = transition_graph(F, TieBreak::StatusQuoBias, ThresholdRules{3});
        const auto closed = threshold_transition_graph(3, p, TieBreak::StatusQuoBias);
        REQUIRE(dense.nodes.size() == 3);
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> dense_targets;
            for (int j : dense.adj[static_cast<std::size_t>(k - 1)])
                dense_targets.push_back(j + 1); // node index -> cutoff
            CHECK(dense_targets == closed.adj[static_cast<std::size_t>(k - 1)]);
        }
    }
}

TEST_CASE("pessimistic refutation in the threshold universe")
{
    // at n=3 simple majority is the 3-oligopoly and survives
    const Scf sm3 = materialize(SimpleMajority{}, 3);
    CHECK_FALSE(pessimistic_refute(sm3, TieBreak::StatusQuoBias, 3, ThresholdRules{3}).refuted);

    // at n=5 and 7 it falls to a three-vector belief
    for (int n : {5, 7}) {
        const Scf sm = materialize(SimpleMajority{}, n);
        const auto verdict = pessimistic_refute(sm, TieBreak::StatusQuoBias, 3, ThresholdRules{n});
        REQUIRE(verdict.refuted);
        CHECK(verdict.belief->weights().size() == 3);
        CHECK(verify_witness(sm, *verdict.belief, TieBreak::StatusQuoBias, *verdict.witness));
    }
}

TEST_CASE("the three-vector construction at n=5 refutes majority directly")
{
    // supports of size 3 built so the first three voters each lose twice
    const int n = 5, k = 3;
    const Vec v1 = vec_from_string("00111");
    const Vec v2 = vec_from_string("01011");
    const Vec v3 = vec_from_string("11100");
    const Belief F = Belief::uniform_support(n, std::vector<Vec>{v1, v2, v3});
    const Scf sm = materialize(SimpleMajority{}, n);
    const Scf qualified = materialize(Threshold{k + 1}, n);

    for (Voter i = 0; i < k; ++i) {
        CHECK(utility(sm, F, i) == Rat(1, 3));
        CHECK(utility(qualified, F, i) == Rat(2, 3));
    }
    const auto cp = choice_profiles(sm, qualified, F, TieBreak::StatusQuoBias);
    CHECK(support_size(cp.forced_one) >= 3);
    CHECK(sm(cp.forced_one) == 1);
}

TEST_CASE("odd-n guard")
{
    CHECK_THROWS_AS(threshold_transition_graph(4, Rat(1, 2), TieBreak::StatusQuoBias),
                    std::invalid_argument);
    CHECK_THROWS_AS(threshold_utility(3, 0, Rat(1, 2)), std::invalid_argument);
}
