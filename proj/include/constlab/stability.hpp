/*
 * Copyright 2026 The constlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CONSTLAB_STABILITY_HPP
#define CONSTLAB_STABILITY_HPP

#include "constlab/belief.hpp"
#include "constlab/parallel.hpp"
#include "constlab/predicates.hpp"
#include "constlab/scf.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace constlab {

enum class TieBreak { Arbitrary, StatusQuoBias };

inline const char* tie_break_name(TieBreak tb)
{
    return tb == TieBreak::Arbitrary ? "arbitrary" : "sqb";
}

// ---------------------------------------------------------------------------
// Alternative universes
// ---------------------------------------------------------------------------

struct AllScfs {
    int n;
};
/// The n threshold rules with cutoffs 1..n (the anonymous monotone rules
/// that are not constant).
struct ThresholdRules {
    int n;
};
struct ExplicitUniverse {
    std::vector<Scf> scfs;
};

using Universe = std::variant<AllScfs, ThresholdRules, ExplicitUniverse>;

enum class UniverseTag { AllScfs, Thresholds, Explicit };

inline UniverseTag universe_tag(const Universe& u)
{
    if (std::holds_alternative<AllScfs>(u))
        return UniverseTag::AllScfs;
    if (std::holds_alternative<ThresholdRules>(u))
        return UniverseTag::Thresholds;
    return UniverseTag::Explicit;
}

inline const char* universe_name(UniverseTag t)
{
    switch (t) {
    case UniverseTag::AllScfs: return "all";
    case UniverseTag::Thresholds: return "thresholds";
    default: return "explicit";
    }
}

/// Materializes the universe's member list. Full enumeration is the point of
/// the exhaustive engines and is capped at n <= 4 (65536 tables).
inline std::vector<Scf> universe_members(const Universe& u)
{
    std::vector<Scf> out;
    if (const auto* all = std::get_if<AllScfs>(&u)) {
        check_voter_count(all->n);
        if (all->n > 4)
            throw std::invalid_argument("full SCF enumeration limited to n <= 4");
        const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << all->n);
        out.reserve(tables);
        for (std::uint64_t t = 0; t < tables; ++t)
            out.push_back(Scf::from_table_bits(all->n, t));
    } else if (const auto* th = std::get_if<ThresholdRules>(&u)) {
        check_voter_count(th->n);
        if (th->n > 16)
            throw std::invalid_argument("threshold tables limited to n <= 16 here; use the "
                                        "closed-form threshold engine for larger n");
        out.reserve(static_cast<std::size_t>(th->n));
        for (int k = 1; k <= th->n; ++k)
            out.push_back(materialize(Threshold{k}, th->n));
    } else {
        out = std::get<ExplicitUniverse>(u).scfs;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Utilities and choice vectors
// ---------------------------------------------------------------------------

inline void check_same_n(int a, int b)
{
    if (a != b)
        throw std::invalid_argument("voter-count mismatch");
}

/// Ex-ante utility of voter i: probability that the rule's decision matches
/// the voter's own preference under belief F.
inline Rat utility(const Scf& f, const Belief& F, Voter i)
{
    check_same_n(f.n(), F.n());
    detail::check_voter_index(i, f.n());
    Rat total = 0;
    for (const auto& [v, w] : F.pmf())
        if (f(v) == static_cast<int>(vec_bit(v, i)))
            total += w;
    return total;
}

inline std::vector<Rat> utilities(const Scf& f, const Belief& F)
{
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(f.n()));
    for (Voter i = 0; i < f.n(); ++i)
        out.push_back(utility(f, F, i));
    return out;
}

inline Rat welfare(const Scf& f, const Belief& F)
{
    Rat total = 0;
    for (Voter i = 0; i < f.n(); ++i)
        total += utility(f, F, i);
    return total;
}

inline Rat nash_welfare(const Scf& f, const Belief& F)
{
    Rat total = 1;
    for (Voter i = 0; i < f.n(); ++i)
        total *= utility(f, F, i);
    return total;
}

/// The admissible replacement-vote profiles when voting f (encoded 0)
/// against f2 (encoded 1): strict preferences are forced, ties are free
/// under arbitrary tie-breaking and forced to 0 under status-quo bias.
struct ChoiceProfileSet {
    int n = 0;
    Vec forced_one = 0;
    Vec free = 0;

    Vec forced_zero() const { return all_ones_vec(n) & ~(forced_one | free); }
    std::uint64_t admissible_count() const { return std::uint64_t{1} << support_size(free); }

    template <class Fn>
    bool any_admissible(Fn&& fn) const
    {
        Vec sub = free;
        while (true) {
            if (fn(static_cast<Vec>(forced_one | sub)))
                return true;
            if (sub == 0)
                return false;
            sub = (sub - 1) & free;
        }
    }

    bool admits(Vec c) const
    {
        return (c & ~(forced_one | free)) == 0 && (c & forced_one) == forced_one;
    }
};

namespace detail {

/// Integer-scaled per-voter utilities; weights are the belief's numerators
/// over its common denominator.
template <class IntT>
std::vector<IntT> scaled_utilities(const Scf& f, const std::vector<std::pair<Vec, IntT>>& atoms,
                                   int n)
{
    std::vector<IntT> u(static_cast<std::size_t>(n), IntT{0});
    for (const auto& [v, w] : atoms) {
        const int fv = f(v);
        for (Voter i = 0; i < n; ++i)
            if (fv == static_cast<int>(vec_bit(v, i)))
                u[static_cast<std::size_t>(i)] += w;
    }
    return u;
}

template <class IntT>
ChoiceProfileSet profiles_from_utilities(const std::vector<IntT>& uf, const std::vector<IntT>& uf2,
                                         int n, TieBreak tb)
{
    ChoiceProfileSet cp;
    cp.n = n;
    for (Voter i = 0; i < n; ++i) {
        const auto& a = uf[static_cast<std::size_t>(i)];
        const auto& b = uf2[static_cast<std::size_t>(i)];
        if (b > a)
            cp.forced_one |= Vec{1} << i;
        else if (b == a && tb == TieBreak::Arbitrary)
            cp.free |= Vec{1} << i;
    }
    return cp;
}

inline bool belief_fits_int64(const Belief& F)
{
    static const Int cap = Int(std::numeric_limits<std::int64_t>::max()) / 4;
    return F.denom() <= cap;
}

inline std::vector<std::pair<Vec, std::int64_t>> atoms64(const Belief& F)
{
    std::vector<std::pair<Vec, std::int64_t>> atoms;
    atoms.reserve(F.weights().size());
    for (const auto& [v, w] : F.weights())
        atoms.emplace_back(v, static_cast<std::int64_t>(w));
    return atoms;
}

template <class IntT, class AtomsT>
ChoiceProfileSet choice_profiles_impl(const Scf& f, const Scf& f2, const AtomsT& atoms,
                                      TieBreak tb)
{
    const auto uf = scaled_utilities<IntT>(f, atoms, f.n());
    const auto uf2 = scaled_utilities<IntT>(f2, atoms, f.n());
    return profiles_from_utilities(uf, uf2, f.n(), tb);
}

} // namespace detail

inline ChoiceProfileSet choice_profiles(const Scf& f, const Scf& f2, const Belief& F, TieBreak tb)
{
    check_same_n(f.n(), F.n());
    check_same_n(f.n(), f2.n());
    if (detail::belief_fits_int64(F))
        return detail::choice_profiles_impl<std::int64_t>(f, f2, detail::atoms64(F), tb);
    return detail::choice_profiles_impl<Int>(f, f2, F.weights(), tb);
}

// ---------------------------------------------------------------------------
// Self-maintenance
// ---------------------------------------------------------------------------

struct Witness {
    Scf challenger;
    Vec choice = 0;
};

struct StabilityVerdict {
    bool stable = true;
    std::optional<Witness> witness;
    UniverseTag universe = UniverseTag::AllScfs;
};

namespace detail {

template <class IntT, class AtomsT>
std::optional<Vec> replacement_choice(const Scf& f, const std::vector<IntT>& uf, const Scf& f2,
                                      const AtomsT& atoms, TieBreak tb)
{
    const auto uf2 = scaled_utilities<IntT>(f2, atoms, f.n());
    const ChoiceProfileSet cp = profiles_from_utilities(uf, uf2, f.n(), tb);
    std::optional<Vec> found;
    cp.any_admissible([&](Vec c) {
        if (f(c)) {
            found = c;
            return true;
        }
        return false;
    });
    return found;
}

template <class IntT, class AtomsT>
StabilityVerdict self_maintaining_impl(const Scf& f, const AtomsT& atoms, TieBreak tb,
                                       const Universe& universe)
{
    StabilityVerdict verdict;
    verdict.universe = universe_tag(universe);
    const auto uf = scaled_utilities<IntT>(f, atoms, f.n());
    for (const Scf& f2 : universe_members(universe)) {
        check_same_n(f.n(), f2.n());
        if (f2 == f)
            continue;
        if (auto c = replacement_choice<IntT>(f, uf, f2, atoms, tb)) {
            verdict.stable = false;
            verdict.witness = Witness{f2, *c};
            return verdict;
        }
    }
    return verdict;
}

} // namespace detail

/// Stable iff every admissible replacement vote against every alternative in
/// the universe is rejected by f itself. On failure carries the first
/// witnessing (challenger, choice vector) in canonical order.
inline StabilityVerdict is_self_maintaining(const Scf& f, const Belief& F, TieBreak tb,
                                            const Universe& universe)
{
    check_same_n(f.n(), F.n());
    if (detail::belief_fits_int64(F))
        return detail::self_maintaining_impl<std::int64_t>(f, detail::atoms64(F), tb, universe);
    return detail::self_maintaining_impl<Int>(f, F.weights(), tb, universe);
}

/// Re-derives the choice profile for a reported witness and confirms both
/// admissibility and f(choice) = 1.
inline bool verify_witness(const Scf& f, const Belief& F, TieBreak tb, const Witness& w)
{
    const ChoiceProfileSet cp = choice_profiles(f, w.challenger, F, tb);
    return cp.admits(w.choice) && f(w.choice) == 1;
}

// ---------------------------------------------------------------------------
// Exhaustive i.i.d. classification
// ---------------------------------------------------------------------------

struct ClassifyResult {
    std::vector<Scf> stable;                      // sorted by table
    std::vector<std::pair<Scf, Witness>> unstable; // witness per unstable rule
};

/// Filters every SCF on n voters through self-maintenance against the full
/// universe under the iid(p) belief. Exhaustive: n <= 4.
inline ClassifyResult classify_iid(int n, const IidParameter& p, TieBreak tb, unsigned threads = 0)
{
    check_voter_count(n);
    if (n > 4)
        throw std::invalid_argument("classify_iid is exhaustive and limited to n <= 4");

    const Belief F = Belief::iid(p, n);
    if (!detail::belief_fits_int64(F))
        throw std::invalid_argument("iid parameter denominator too large for classification");
    const auto atoms = detail::atoms64(F);

    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    std::vector<std::array<std::int64_t, 4>> us(tables);
    parallel_for(
        tables,
        [&](std::size_t t) {
            const Scf f = Scf::from_table_bits(n, t);
            const auto u = detail::scaled_utilities<std::int64_t>(f, atoms, n);
            for (Voter i = 0; i < n; ++i)
                us[t][static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
        },
        threads);

    std::vector<std::optional<Witness>> witness(tables);
    std::vector<char> stable(tables, 0);
    parallel_for(
        tables,
        [&](std::size_t t) {
            const Scf f = Scf::from_table_bits(n, t);
            for (std::uint64_t t2 = 0; t2 < tables; ++t2) {
                if (t2 == t)
                    continue;
                ChoiceProfileSet cp;
                cp.n = n;
                for (Voter i = 0; i < n; ++i) {
                    const auto a = us[t][static_cast<std::size_t>(i)];
                    const auto b = us[t2][static_cast<std::size_t>(i)];
                    if (b > a)
                        cp.forced_one |= Vec{1} << i;
                    else if (b == a && tb == TieBreak::Arbitrary)
                        cp.free |= Vec{1} << i;
                }
                std::optional<Vec> bad;
                cp.any_admissible([&](Vec c) {
                    if (f(c)) {
                        bad = c;
                        return true;
                    }
                    return false;
                });
                if (bad) {
                    witness[t] = Witness{Scf::from_table_bits(n, t2), *bad};
                    return;
                }
            }
            stable[t] = 1;
        },
        threads);

    ClassifyResult result;
    for (std::uint64_t t = 0; t < tables; ++t) {
        if (stable[t])
            result.stable.push_back(Scf::from_table_bits(n, t));
        else
            result.unstable.emplace_back(Scf::from_table_bits(n, t), *witness[t]);
    }
    return result;
}

// ---------------------------------------------------------------------------
// The S1/S2/S3 partition and the structural necessary condition
// ---------------------------------------------------------------------------

struct S123 {
    std::vector<Voter> s1, s2, s3;
};

/// Splits voters by utility against the thresholds 2p(1-p) and p^2+(1-p)^2.
inline S123 partition_s123(const Scf& f, const IidParameter& p)
{
    const Belief F = Belief::iid(p, f.n());
    const Rat low = 2 * p.p * (1 - p.p);
    const Rat high = p.p * p.p + (1 - p.p) * (1 - p.p);
    S123 out;
    for (Voter i = 0; i < f.n(); ++i) {
        const Rat u = utility(f, F, i);
        if (u < low)
            out.s1.push_back(i);
        else if (u < high)
            out.s2.push_back(i);
        else
            out.s3.push_back(i);
    }
    return out;
}

/// f rejects every vector in which all of S1 u S2 are in favor, and every
/// vector in which all of S2 u S3 are against. An empty set satisfies its
/// condition vacuously, so the clause then demands rejection everywhere.
inline bool check_main_structural_lemma(const Scf& f, const IidParameter& p)
{
    const S123 parts = partition_s123(f, p);
    Vec m12 = 0, m23 = 0;
    for (Voter i : parts.s1)
        m12 |= Vec{1} << i;
    for (Voter i : parts.s2) {
        m12 |= Vec{1} << i;
        m23 |= Vec{1} << i;
    }
    for (Voter i : parts.s3)
        m23 |= Vec{1} << i;

    for (Vec v = 0; v < f.vector_count(); ++v) {
        if (!f(v))
            continue;
        if ((v & m12) == m12)
            return false;
        if ((v & m23) == 0)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pessimistic refutation search
// ---------------------------------------------------------------------------

struct PessimisticVerdict {
    bool refuted = false;
    std::optional<Belief> belief;
    std::optional<Witness> witness;
    int budget = 0;
    UniverseTag universe = UniverseTag::AllScfs;
};

/// Semi-decision procedure for pessimistic self-maintenance: searches the
/// uniform beliefs over supports of size <= budget (point masses first) for
/// a belief plus challenger that replace f. "Not refuted" is not a proof of
/// stability; the structural predicates carry the certified conditions.
inline PessimisticVerdict pessimistic_refute(const Scf& f, TieBreak tb, int budget,
                                             const Universe& universe)
{
    if (budget < 1)
        throw std::invalid_argument("refutation budget must be >= 1");
    PessimisticVerdict verdict;
    verdict.budget = budget;
    verdict.universe = universe_tag(universe);

    const std::vector<Scf> alternatives = universe_members(universe);
    const Vec count = f.vector_count();

    std::vector<Vec> support;
    const auto try_support = [&]() -> bool {
        const auto atoms = [&] {
            std::vector<std::pair<Vec, std::int64_t>> a;
            a.reserve(support.size());
            for (Vec v : support)
                a.emplace_back(v, 1);
            return a;
        }();
        const auto uf = detail::scaled_utilities<std::int64_t>(f, atoms, f.n());
        for (const Scf& f2 : alternatives) {
            if (f2 == f)
                continue;
            if (auto c = detail::replacement_choice<std::int64_t>(f, uf, f2, atoms, tb)) {
                verdict.refuted = true;
                verdict.belief = Belief::uniform_support(f.n(), support);
                verdict.witness = Witness{f2, *c};
                return true;
            }
        }
        return false;
    };

    // Supports in canonical order: size 1 (all point masses), then 2, ...
    const std::function<bool(Vec, int)> extend = [&](Vec first, int remaining) {
        for (Vec v = first; v < count; ++v) {
            support.push_back(v);
            if (remaining == 1) {
                if (try_support())
                    return true;
            } else if (extend(v + 1, remaining - 1)) {
                return true;
            }
            support.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= budget; ++size) {
        support.clear();
        if (extend(0, size))
            return verdict;
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Replacement dynamics
// ---------------------------------------------------------------------------

struct TransitionGraph {
    int n = 0;
    UniverseTag universe = UniverseTag::AllScfs;
    TieBreak tie_break = TieBreak::Arbitrary;
    std::vector<Scf> nodes;
    std::vector<std::vector<int>> adj; // edge u -> v: some admissible vote replaces u with v
    std::vector<char> stable;          // out-degree zero
    std::vector<std::vector<Rat>> node_utilities;

    std::vector<int> stable_indices() const
    {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            if (stable[static_cast<std::size_t>(i)])
                out.push_back(i);
        return out;
    }
};

/// Directed replacement graph over a universe: an edge f -> f2 means some
/// admissible choice vector passes the motion to replace f with f2.
inline TransitionGraph transition_graph(const Belief& F, TieBreak tb, const Universe& universe,
                                        unsigned threads = 0)
{
    TransitionGraph g;
    g.universe = universe_tag(universe);
    g.tie_break = tb;
    if (const auto* all = std::get_if<AllScfs>(&universe)) {
        if (all->n > 3)
            throw std::invalid_argument("full-universe transition graph limited to n = 3");
    }
    g.nodes = universe_members(universe);
    if (g.nodes.empty())
        throw std::invalid_argument("empty universe");
    g.n = g.nodes.front().n();
    check_same_n(g.n, F.n());

    const bool small = detail::belief_fits_int64(F);
    const auto atoms = small ? detail::atoms64(F) : std::vector<std::pair<Vec, std::int64_t>>{};

    const std::size_t m = g.nodes.size();
    std::vector<std::vector<std::int64_t>> us64(small ? m : 0);
    std::vector<std::vector<Int>> usBig(small ? 0 : m);
    parallel_for(
        m,
        [&](std::size_t i) {
            if (small)
                us64[i] = detail::scaled_utilities<std::int64_t>(g.nodes[i], atoms, g.n);
            else
                usBig[i] = detail::scaled_utilities<Int>(g.nodes[i], F.weights(), g.n);
        },
        threads);

    g.adj.assign(m, {});
    g.stable.assign(m, 0);
    parallel_for(
        m,
        [&](std::size_t i) {
            const Scf& f = g.nodes[i];
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j)
                    continue;
                ChoiceProfileSet cp =
                    small ? detail::profiles_from_utilities(us64[i], us64[j], g.n, tb)
                          : detail::profiles_from_utilities(usBig[i], usBig[j], g.n, tb);
                const bool edge = cp.any_admissible([&](Vec c) { return f(c) != 0; });
                if (edge)
                    g.adj[i].push_back(static_cast<int>(j));
            }
            if (g.adj[i].empty())
                g.stable[i] = 1;
        },
        threads);

    g.node_utilities.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        g.node_utilities[i] = utilities(g.nodes[i], F);
    return g;
}

/// Set of node indices with a directed path into `targets` (paths of length
/// zero included).
inline std::vector<char> nodes_reaching(const TransitionGraph& g, const std::vector<int>& targets)
{
    std::vector<std::vector<int>> radj(g.nodes.size());
    for (std::size_t u = 0; u < g.adj.size(); ++u)
        for (int v : g.adj[u])
            radj[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    std::vector<char> seen(g.nodes.size(), 0);
    std::deque<int> queue;
    for (int t : targets) {
        if (!seen[static_cast<std::size_t>(t)]) {
            seen[static_cast<std::size_t>(t)] = 1;
            queue.push_back(t);
        }
    }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : radj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    return seen;
}

// ---------------------------------------------------------------------------
// Equilibrium play (voter best response)
// ---------------------------------------------------------------------------

/// Induced rule when every voter plays a response that is weakly dominant
/// regardless of the other voters' play; voters whose vote never changes the
/// outcome keep their truthful vote. Returns nothing when some voter has no
/// such response.
inline std::optional<Scf> best_response_equilibrium(const Scf& f)
{
    const int n = f.n();
    if (n > 20)
        throw std::invalid_argument("best-response analysis limited to n <= 20");
    const Vec count = f.vector_count();

    std::array<std::array<int, 2>, kMaxVoters> response{}; // [voter][preference] -> vote
    for (Voter i = 0; i < n; ++i) {
        const Vec bit = Vec{1} << i;
        bool dummy = true;
        bool dominant[2][2] = {{true, true}, {true, true}}; // [preference][vote]
        for (Vec v = 0; v < count; ++v) {
            if (v & bit)
                continue;
            const int f0 = f(v);
            const int f1 = f(v | bit);
            if (f0 != f1)
                dummy = false;
            for (int b = 0; b < 2; ++b) {
                if (f1 == b && f0 != b)
                    dominant[b][0] = false;
                if (f0 == b && f1 != b)
                    dominant[b][1] = false;
            }
        }
        for (int b = 0; b < 2; ++b) {
            if (dummy || (dominant[b][0] && dominant[b][1]))
                response[static_cast<std::size_t>(i)][b] = b; // irrelevant: stay truthful
            else if (dominant[b][1])
                response[static_cast<std::size_t>(i)][b] = 1;
            else if (dominant[b][0])
                response[static_cast<std::size_t>(i)][b] = 0;
            else
                return std::nullopt;
        }
    }

    Scf g(n);
    for (Vec v = 0; v < count; ++v) {
        Vec played = 0;
        for (Voter i = 0; i < n; ++i)
            if (response[static_cast<std::size_t>(i)][vec_bit(v, i) ? 1 : 0])
                played |= Vec{1} << i;
        g.set(v, f(played) != 0);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Lexicographic-belief stability search (n = 3)
// ---------------------------------------------------------------------------

/// Stability of f under the weight-halving belief given by `order`, with
/// arbitrary tie-breaking, against every other SCF on 3 voters. Runs on
/// integer weights 64,32,...,2,1,1 (the exact probabilities times 128).
inline bool lex_stable_n3(std::uint32_t table, const std::array<Vec, 8>& order)
{
    static constexpr std::array<int, 8> kWeight = {64, 32, 16, 8, 4, 2, 1, 1};
    const auto bit = [&](std::uint32_t t, Vec v) { return (t >> v) & 1u; };

    for (std::uint32_t t2 = 0; t2 < 256; ++t2) {
        if (t2 == table)
            continue;
        int delta[3] = {0, 0, 0};
        for (std::size_t pos = 0; pos < 8; ++pos) {
            const Vec v = order[pos];
            const auto fv = bit(table, v);
            const auto f2v = bit(t2, v);
            if (fv == f2v)
                continue;
            // f2 differs here: voters matching f2's outcome gain the weight.
            for (Voter i = 0; i < 3; ++i)
                delta[i] += (vec_bit(v, i) == (f2v != 0)) ? kWeight[pos] : -kWeight[pos];
        }
        Vec forced_one = 0, free = 0;
        for (Voter i = 0; i < 3; ++i) {
            if (delta[i] > 0)
                forced_one |= Vec{1} << i;
            else if (delta[i] == 0)
                free |= Vec{1} << i;
        }
        Vec sub = free;
        while (true) {
            if (bit(table, forced_one | sub))
                return false;
            if (sub == 0)
                break;
            sub = (sub - 1) & free;
        }
    }
    return true;
}

/// Searches all 720 orderings (the six interior positions are free; the
/// all-zeros and all-ones vectors are pinned to the last two slots) for one
/// that makes f self-maintaining. n = 3 only.
inline std::optional<std::array<Vec, 8>> stabilizing_lex_order(const Scf& f)
{
    if (f.n() != 3)
        throw std::invalid_argument("lexicographic ordering search implemented for n = 3");
    const std::uint32_t table = static_cast<std::uint32_t>(f.table_bits());
    std::array<Vec, 6> interior = {1, 2, 3, 4, 5, 6};
    std::array<Vec, 8> order{};
    order[6] = 0;
    order[7] = 7;
    std::sort(interior.begin(), interior.end());
    do {
        std::copy(interior.begin(), interior.end(), order.begin());
        if (lex_stable_n3(table, order))
            return order;
    } while (std::next_permutation(interior.begin(), interior.end()));
    return std::nullopt;
}

} // namespace constlab

#endif
