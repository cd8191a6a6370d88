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

#ifndef CONSTLAB_THRESHOLDS_HPP
#define CONSTLAB_THRESHOLDS_HPP

#include "constlab/stability.hpp"

#include <stdexcept>
#include <vector>

namespace constlab {

/// Pr[Binomial(m, p) >= kmin], exact. Binomials by multiplicative recurrence.
inline Rat binomial_tail_ge(int m, int kmin, const Rat& p)
{
    if (m < 0)
        throw std::invalid_argument("negative binomial size");
    if (kmin <= 0)
        return 1;
    if (kmin > m)
        return 0;
    const Rat q = 1 - p;
    Rat total = 0;
    Int choose = 1;
    // walk k upward, keeping C(m,k); accumulate only k >= kmin
    Rat pk = 1;
    for (int k = 0; k <= m; ++k) {
        if (k >= kmin) {
            Rat term = Rat(choose) * pk;
            for (int j = 0; j < m - k; ++j)
                term *= q;
            total += term;
        }
        choose = choose * (m - k) / (k + 1);
        pk *= p;
    }
    return total;
}

/// Common voter utility of the threshold-k rule under iid(p): every voter is
/// exchangeable, so u = p * Pr[eta_rest >= k-1] + (1-p) * Pr[eta_rest < k].
inline Rat threshold_utility(int n, int k, const Rat& p)
{
    check_voter_count(n);
    if (k < 1 || k > n)
        throw std::invalid_argument("threshold rule k must lie in [1, n]");
    return p * binomial_tail_ge(n - 1, k - 1, p) + (1 - p) * (1 - binomial_tail_ge(n - 1, k, p));
}

/// Replacement graph over the n threshold rules under iid(p), computed from
/// the closed-form utilities rather than truth tables; valid for any odd
/// n <= 25. All voters share one utility per rule, so a motion passes iff
/// that common utility strictly improves (arbitrary tie-breaking also lets a
/// tied electorate vote all-ones, which every rule accepts).
struct ThresholdGraph {
    int n = 0;
    Rat p;
    TieBreak tie_break = TieBreak::StatusQuoBias;
    std::vector<Rat> utility_by_k; // index 0 -> k = 1
    std::vector<std::vector<int>> adj;
    std::vector<int> stable_ks;
};

inline ThresholdGraph threshold_transition_graph(int n, const Rat& p, TieBreak tb)
{
    check_voter_count(n);
    if (n % 2 == 0)
        throw std::invalid_argument("threshold universe defined for odd n");
    ThresholdGraph g;
    g.n = n;
    g.p = p;
    g.tie_break = tb;
    g.utility_by_k.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        g.utility_by_k.push_back(threshold_utility(n, k, p));
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (int k = 1; k <= n; ++k) {
        for (int k2 = 1; k2 <= n; ++k2) {
            if (k2 == k)
                continue;
            const Rat& u = g.utility_by_k[static_cast<std::size_t>(k - 1)];
            const Rat& u2 = g.utility_by_k[static_cast<std::size_t>(k2 - 1)];
            const bool edge = tb == TieBreak::StatusQuoBias ? u2 > u : u2 >= u;
            if (edge)
                g.adj[static_cast<std::size_t>(k - 1)].push_back(k2);
        }
        if (g.adj[static_cast<std::size_t>(k - 1)].empty())
            g.stable_ks.push_back(k);
    }
    return g;
}

inline std::vector<int> threshold_stable_set(int n, const Rat& p, TieBreak tb)
{
    return threshold_transition_graph(n, p, tb).stable_ks;
}

} // namespace constlab

#endif
