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

#ifndef CONSTLAB_PREDICATES_HPP
#define CONSTLAB_PREDICATES_HPP

#include "constlab/scf.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace constlab {

/// No vector v has f(v) = f(~v) = 1.
inline bool is_never_negation_agnostic(const Scf& f)
{
    const int n = f.n();
    for (Vec v = 0; v < f.vector_count(); ++v)
        if (f(v) && f(negate_vec(v, n)))
            return false;
    return true;
}

/// Whenever two distinct profiles are both rejected, the profile supported
/// exactly on the intersection of their supporter sets is rejected too.
inline bool is_downward_closed(const Scf& f)
{
    const Vec count = f.vector_count();
    for (Vec v1 = 0; v1 < count; ++v1) {
        if (f(v1))
            continue;
        for (Vec v2 = v1 + 1; v2 < count; ++v2) {
            if (f(v2))
                continue;
            if (f(v1 & v2))
                return false;
        }
    }
    return true;
}

inline bool respects_rejective_consensus(const Scf& f) { return f(0) == 0; }

/// For every monotonicity violation (S1 strictly inside S2, v1 accepted,
/// v2 rejected), every strict extension of S1 avoiding S2 \ S1 is accepted.
inline bool has_bounded_monotonicity_violation(const Scf& f)
{
    const Vec count = f.vector_count();
    for (Vec v1 = 0; v1 < count; ++v1) {
        if (!f(v1))
            continue;
        for (Vec v2 = 0; v2 < count; ++v2) {
            if (f(v2) || v2 == v1)
                continue;
            if ((v1 & v2) != v1)
                continue; // need S1 strictly inside S2
            const Vec forbidden = v2 & ~v1;
            for (Vec v3 = 0; v3 < count; ++v3) {
                if ((v3 & v1) != v1 || v3 == v1)
                    continue; // S1 strictly inside S3
                if (v3 & forbidden)
                    continue;
                if (!f(v3))
                    return false;
            }
        }
    }
    return true;
}

/// Every accepted profile with at least three supporters stays accepted
/// after removing any single supporter, with at most two exceptions.
inline bool has_bounded_downward_sensitivity(const Scf& f)
{
    const Vec count = f.vector_count();
    for (Vec v1 = 0; v1 < count; ++v1) {
        if (!f(v1) || support_size(v1) < 3)
            continue;
        int zero_removals = 0;
        Vec rest = v1;
        while (rest) {
            const Vec bit = rest & (~rest + 1);
            rest ^= bit;
            if (!f(v1 ^ bit))
                ++zero_removals;
        }
        if (zero_removals > 2)
            return false;
    }
    return true;
}

inline bool has_strong_duo(const Scf& f)
{
    for (Vec v = 0; v < f.vector_count(); ++v)
        if (support_size(v) == 2 && f(v))
            return true;
    return false;
}

/// All voter pairs (i, j), i < j, whose agreement forces the outcome:
/// every v with v_i = v_j has f(v) = v_i.
inline std::vector<std::pair<Voter, Voter>> entangled_pairs(const Scf& f)
{
    const int n = f.n();
    std::vector<std::pair<Voter, Voter>> pairs;
    for (Voter i = 0; i < n; ++i) {
        for (Voter j = i + 1; j < n; ++j) {
            bool entangled = true;
            for (Vec v = 0; v < f.vector_count() && entangled; ++v)
                if (vec_bit(v, i) == vec_bit(v, j) && f(v) != static_cast<int>(vec_bit(v, i)))
                    entangled = false;
            if (entangled)
                pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

enum class EntangledKind { NotEntangled, ThreeOligopoly, FlowerForm, ConservativeFlowerForm };

struct EntangledClass {
    EntangledKind kind = EntangledKind::NotEntangled;
    Voter center = -1; // flower center, or smallest oligopoly member
    std::vector<std::pair<Voter, Voter>> pairs;
};

/// Classifies by the entangled pair set. A nonempty pair set is either the
/// pair triangle of a 3-oligopoly or shares a single common voter (flower);
/// the conservative flower additionally rejects whenever the center
/// disagrees with every partner.
inline EntangledClass classify_entangled(const Scf& f)
{
    EntangledClass result;
    result.pairs = entangled_pairs(f);
    if (result.pairs.empty())
        return result;

    // Triangle of a 3-element set?
    if (result.pairs.size() == 3) {
        Vec members = 0;
        for (auto [i, j] : result.pairs)
            members |= (Vec{1} << i) | (Vec{1} << j);
        if (support_size(members) == 3) {
            // With all three pairs entangled, f necessarily follows their
            // majority; verify by scan anyway.
            bool majority_rule = true;
            for (Vec v = 0; v < f.vector_count() && majority_rule; ++v)
                if (f(v) != (2 * std::popcount(v & members) > 3 ? 1 : 0))
                    majority_rule = false;
            if (majority_rule) {
                result.kind = EntangledKind::ThreeOligopoly;
                result.center = std::countr_zero(members);
                return result;
            }
        }
    }

    // Common center across all pairs?
    Vec common = (Vec{1} << result.pairs.front().first) | (Vec{1} << result.pairs.front().second);
    for (auto [i, j] : result.pairs)
        common &= (Vec{1} << i) | (Vec{1} << j);
    if (common == 0)
        throw std::logic_error("entangled pair set is neither a triangle nor a flower");

    const Voter center = std::countr_zero(common);
    result.center = center;
    result.kind = EntangledKind::FlowerForm;

    Vec partners = 0;
    for (auto [i, j] : result.pairs)
        partners |= (Vec{1} << i) | (Vec{1} << j);
    partners &= ~(Vec{1} << center);

    bool conservative = true;
    for (Vec v = 0; v < f.vector_count() && conservative; ++v) {
        const bool cv = vec_bit(v, center);
        const Vec agreeing = cv ? (v & partners) : (~v & partners);
        if (agreeing == 0 && f(v))
            conservative = false;
    }
    if (conservative)
        result.kind = EntangledKind::ConservativeFlowerForm;
    return result;
}

/// Invariant under voter permutations, i.e. the outcome depends only on the
/// supporter count.
inline bool is_anonymous(const Scf& f)
{
    const int n = f.n();
    std::array<int, kMaxVoters + 1> value{};
    std::array<bool, kMaxVoters + 1> seen{};
    for (Vec v = 0; v < f.vector_count(); ++v) {
        const int ones = eta(v, n, 1);
        if (!seen[static_cast<std::size_t>(ones)]) {
            seen[static_cast<std::size_t>(ones)] = true;
            value[static_cast<std::size_t>(ones)] = f(v);
        } else if (value[static_cast<std::size_t>(ones)] != f(v)) {
            return false;
        }
    }
    return true;
}

/// A decision is never rejected because more voters support it.
inline bool is_monotone(const Scf& f)
{
    const int n = f.n();
    for (Vec v = 0; v < f.vector_count(); ++v) {
        if (!f(v))
            continue;
        for (Voter i = 0; i < n; ++i) {
            const Vec up = v | (Vec{1} << i);
            if (up != v && !f(up))
                return false;
        }
    }
    return true;
}

} // namespace constlab

#endif
