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

#ifndef CONSTLAB_BELIEF_HPP
#define CONSTLAB_BELIEF_HPP

#include "constlab/scf.hpp"

#include <json.hpp>

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace constlab {

enum class IidRegime { ChangeAverse, Unbiased, ChangeInclined };

struct IidParameter {
    Rat p;
    IidRegime regime;

    explicit IidParameter(Rat p_) : p(std::move(p_))
    {
        if (p < 0 || p > 1)
            throw std::invalid_argument("iid parameter must lie in [0, 1]");
        if (p < Rat(1, 2))
            regime = IidRegime::ChangeAverse;
        else if (p == Rat(1, 2))
            regime = IidRegime::Unbiased;
        else
            regime = IidRegime::ChangeInclined;
    }
};

/// An exact, finitely-supported probability mass function over the 2^n
/// preference vectors. Entries absent from the map have probability zero;
/// the stored entries are strictly positive and sum to exactly 1.
///
/// Alongside the rational pmf the belief caches integer weights over a
/// common denominator, which is what the stability engines compare.
class Belief {
public:
    static Belief point_mass(const VotingVector& v)
    {
        std::map<Vec, Rat> pmf;
        pmf[v.bits] = 1;
        return Belief(v.n, std::move(pmf));
    }

    static Belief uniform_support(int n, std::span<const Vec> vs)
    {
        check_voter_count(n);
        if (vs.empty())
            throw std::invalid_argument("uniform support must be nonempty");
        std::map<Vec, Rat> pmf;
        const Rat w(1, static_cast<long>(vs.size()));
        for (Vec v : vs) {
            if (v >= (Vec{1} << n))
                throw std::invalid_argument("support vector out of range");
            if (!pmf.emplace(v, w).second)
                throw std::invalid_argument("duplicate vector in uniform support");
        }
        return Belief(n, std::move(pmf));
    }

    /// The weight-halving belief over a full ordering of the 2^n vectors:
    /// position i (1-based) carries 2^-i, except the final position, which
    /// repeats 2^-(2^n - 1) so the total is exactly 1. The ordering must put
    /// the all-zeros vector second to last and the all-ones vector last.
    static Belief lexicographic(int n, std::span<const Vec> order)
    {
        check_voter_count(n);
        const std::size_t count = std::size_t{1} << n;
        if (order.size() != count)
            throw std::invalid_argument("lexicographic order must list every vector once");
        std::vector<bool> seen(count, false);
        for (Vec v : order) {
            if (v >= count || seen[v])
                throw std::invalid_argument("lexicographic order is not a permutation");
            seen[v] = true;
        }
        if (order[count - 2] != 0)
            throw std::invalid_argument("lexicographic order must have the all-zeros vector second to last");
        if (order[count - 1] != all_ones_vec(n))
            throw std::invalid_argument("lexicographic order must have the all-ones vector last");

        std::map<Vec, Rat> pmf;
        Int den = 2;
        for (std::size_t i = 0; i + 1 < count; ++i, den *= 2)
            pmf[order[i]] = Rat(1, den);
        pmf[order[count - 1]] = Rat(1, den / 2);
        return Belief(n, std::move(pmf));
    }

    static Belief iid(const IidParameter& p, int n)
    {
        check_voter_count(n);
        if (n > 16)
            throw std::invalid_argument("dense iid belief limited to n <= 16");
        std::map<Vec, Rat> pmf;
        const Rat q = 1 - p.p;
        for (Vec v = 0; v < (Vec{1} << n); ++v) {
            Rat w = 1;
            for (int i = 0; i < eta(v, n, 1); ++i)
                w *= p.p;
            for (int i = 0; i < eta(v, n, 0); ++i)
                w *= q;
            if (w != 0)
                pmf[v] = w;
        }
        return Belief(n, std::move(pmf));
    }

    static Belief from_pmf(int n, std::map<Vec, Rat> pmf)
    {
        return Belief(n, std::move(pmf));
    }

    int n() const { return n_; }
    const std::map<Vec, Rat>& pmf() const { return pmf_; }

    Rat pmf(Vec v) const
    {
        const auto it = pmf_.find(v);
        return it == pmf_.end() ? Rat(0) : it->second;
    }

    /// Common denominator and the integer numerators per support vector.
    const Int& denom() const { return denom_; }
    const std::vector<std::pair<Vec, Int>>& weights() const { return weights_; }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["n"] = n_;
        nlohmann::ordered_json entries = nlohmann::ordered_json::object();
        for (const auto& [v, w] : pmf_)
            entries[vec_to_string(v, n_)] = rat_to_string(w);
        j["pmf"] = entries;
        return j;
    }

    static Belief from_json(const nlohmann::json& j)
    {
        const int n = j.at("n").get<int>();
        check_voter_count(n);
        std::map<Vec, Rat> pmf;
        for (const auto& [key, value] : j.at("pmf").items()) {
            if (static_cast<int>(key.size()) != n)
                throw std::invalid_argument("pmf key length does not match n: " + key);
            pmf[vec_from_string(key)] = parse_rational(value.get<std::string>());
        }
        return Belief(n, std::move(pmf));
    }

private:
    Belief(int n, std::map<Vec, Rat> pmf) : n_(n), pmf_(std::move(pmf))
    {
        check_voter_count(n_);
        Rat total = 0;
        denom_ = 1;
        for (auto it = pmf_.begin(); it != pmf_.end();) {
            if (it->second < 0)
                throw std::invalid_argument("negative probability in pmf");
            if (it->first >= (Vec{1} << n_))
                throw std::invalid_argument("pmf vector out of range");
            if (it->second == 0) {
                it = pmf_.erase(it);
                continue;
            }
            total += it->second;
            denom_ = int_lcm(denom_, rat_den(it->second));
            ++it;
        }
        if (total != 1)
            throw std::invalid_argument("pmf must sum to exactly 1");
        weights_.reserve(pmf_.size());
        for (const auto& [v, w] : pmf_)
            weights_.emplace_back(v, rat_num(w) * (denom_ / rat_den(w)));
    }

    int n_;
    std::map<Vec, Rat> pmf_;
    Int denom_;
    std::vector<std::pair<Vec, Int>> weights_;
};

} // namespace constlab

#endif
