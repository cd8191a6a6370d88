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

#ifndef CONSTLAB_SCF_HPP
#define CONSTLAB_SCF_HPP

#include "constlab/rational.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace constlab {

using Voter = int;

/// A preference vector over n voters, encoded with voter i at bit i.
/// The printable form writes voter 0 leftmost, so n=3 encoding 0b011
/// prints as "110" (voters 0 and 1 in favor, voter 2 against).
using Vec = std::uint32_t;

inline constexpr int kMaxVoters = 25;

inline void check_voter_count(int n)
{
    if (n < 1 || n > kMaxVoters)
        throw std::invalid_argument("voter count out of range: " + std::to_string(n));
}

inline Vec all_ones_vec(int n) { return (Vec{1} << n) - 1; }

/// Number of voters choosing x in v: eta(v, 1) counts set bits.
inline int eta(Vec v, int n, int x)
{
    const int ones = std::popcount(v & all_ones_vec(n));
    return x == 1 ? ones : n - ones;
}

inline int support_size(Vec v) { return std::popcount(v); }

inline Vec negate_vec(Vec v, int n) { return ~v & all_ones_vec(n); }

inline bool vec_bit(Vec v, Voter i) { return (v >> i) & 1u; }

inline std::string vec_to_string(Vec v, int n)
{
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (vec_bit(v, i))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline Vec vec_from_string(std::string_view s)
{
    if (s.empty() || s.size() > kMaxVoters)
        throw std::invalid_argument("bad vector string length");
    Vec v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v |= Vec{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bad vector string: " + std::string(s));
    }
    return v;
}

/// Strongly typed preference vector; used at API boundaries, while the
/// engines work on raw Vec encodings.
struct VotingVector {
    int n = 0;
    Vec bits = 0;

    VotingVector() = default;
    VotingVector(int n_, Vec bits_) : n(n_), bits(bits_)
    {
        check_voter_count(n);
        if (bits >= (Vec{1} << n))
            throw std::invalid_argument("vector encoding out of range");
    }

    friend bool operator==(const VotingVector&, const VotingVector&) = default;
};

inline VotingVector negate_vector(const VotingVector& v)
{
    return VotingVector(v.n, negate_vec(v.bits, v.n));
}

/// A social-choice function on n voters as an explicit truth table:
/// bit k of the table is f applied to the vector with encoding k.
class Scf {
public:
    Scf() = default;

    explicit Scf(int n) : n_(n)
    {
        check_voter_count(n);
        words_.assign((vector_count() + 63) / 64, 0);
    }

    /// Builds from a packed table for n <= 6 (table fits one word).
    static Scf from_table_bits(int n, std::uint64_t table)
    {
        check_voter_count(n);
        if (n > 6)
            throw std::invalid_argument("packed table constructor requires n <= 6");
        Scf f(n);
        const std::uint64_t mask =
            f.vector_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.vector_count()) - 1;
        if (table & ~mask)
            throw std::invalid_argument("table has bits beyond 2^n entries");
        f.words_[0] = table;
        return f;
    }

    int n() const { return n_; }
    std::uint32_t vector_count() const { return std::uint32_t{1} << n_; }

    int operator()(Vec v) const { return static_cast<int>((words_[v >> 6] >> (v & 63)) & 1u); }

    void set(Vec v, bool value)
    {
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (value)
            words_[v >> 6] |= bit;
        else
            words_[v >> 6] &= ~bit;
    }

    std::uint64_t table_bits() const
    {
        if (n_ > 6)
            throw std::logic_error("table does not fit one word");
        return words_[0];
    }

    bool is_constant_zero() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Canonical text form: "n=<n>;table=<hex>", hex of the 2^n-bit table as
    /// one big-endian integer without leading zeros.
    std::string canonical() const
    {
        static const char* digits = "0123456789abcdef";
        std::string hex;
        bool leading = true;
        for (std::size_t wi = words_.size(); wi-- > 0;) {
            for (int nib = 15; nib >= 0; --nib) {
                const unsigned d = (words_[wi] >> (4 * nib)) & 0xf;
                if (leading && d == 0)
                    continue;
                leading = false;
                hex.push_back(digits[d]);
            }
        }
        if (hex.empty())
            hex = "0";
        return "n=" + std::to_string(n_) + ";table=" + hex;
    }

    static Scf parse_canonical(std::string_view text)
    {
        const auto bad = [&] {
            return std::invalid_argument("bad SCF literal: '" + std::string(text) + "'");
        };
        if (text.substr(0, 2) != "n=")
            throw bad();
        const auto semi = text.find(';');
        if (semi == std::string_view::npos)
            throw bad();
        int n = 0;
        for (char c : text.substr(2, semi - 2)) {
            if (c < '0' || c > '9')
                throw bad();
            n = n * 10 + (c - '0');
            if (n > kMaxVoters)
                throw bad();
        }
        auto rest = text.substr(semi + 1);
        if (rest.substr(0, 6) != "table=")
            throw bad();
        rest.remove_prefix(6);
        if (rest.empty())
            throw bad();
        Scf f(n);
        std::uint32_t nibble_pos = 0; // from least significant
        for (std::size_t i = rest.size(); i-- > 0;) {
            const char c = rest[i];
            unsigned d;
            if (c >= '0' && c <= '9')
                d = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                d = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                d = static_cast<unsigned>(c - 'A' + 10);
            else
                throw bad();
            if (d != 0) {
                if (4 * nibble_pos >= f.vector_count())
                    throw bad();
                if ((4 * nibble_pos + 3) >= f.vector_count() &&
                    (d >> (f.vector_count() - 4 * nibble_pos)) != 0)
                    throw bad();
                f.words_[nibble_pos / 16] |= std::uint64_t{d} << (4 * (nibble_pos % 16));
            }
            ++nibble_pos;
        }
        return f;
    }

    friend bool operator==(const Scf& a, const Scf& b)
    {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    friend bool operator<(const Scf& a, const Scf& b)
    {
        if (a.n_ != b.n_)
            return a.n_ < b.n_;
        for (std::size_t wi = a.words_.size(); wi-- > 0;)
            if (a.words_[wi] != b.words_[wi])
                return a.words_[wi] < b.words_[wi];
        return false;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// Named rules
// ---------------------------------------------------------------------------

struct Unanimity {};
struct SimpleMajority {};
struct QualifiedMajority {
    Rat q; // 1/2 < q <= 1; passes iff eta(v,1) > q*n
};
struct Dictatorship {
    Voter who;
};
struct AntiDictatorship {
    Voter who;
};
struct Oligarchy {
    std::vector<Voter> members; // strict majority within the set decides
};
struct ConsensusDuopoly {
    Voter a, b;
};
struct OligopolyWithVeto {
    Voter veto, a, b;
};
struct ConstantZero {};
struct Threshold {
    int k; // passes iff eta(v,1) >= k; k in [0, n+1]
};

using NamedScf = std::variant<Unanimity, SimpleMajority, QualifiedMajority, Dictatorship,
                              AntiDictatorship, Oligarchy, ConsensusDuopoly, OligopolyWithVeto,
                              ConstantZero, Threshold>;

namespace detail {

inline void check_voter_index(Voter i, int n)
{
    if (i < 0 || i >= n)
        throw std::invalid_argument("voter index out of range: " + std::to_string(i));
}

} // namespace detail

/// Builds the exact truth table of a named rule on n voters.
inline Scf materialize(const NamedScf& spec, int n)
{
    check_voter_count(n);
    Scf f(n);
    const Vec count = Vec{1} << n;

    const auto fill = [&](auto&& decide) {
        for (Vec v = 0; v < count; ++v)
            if (decide(v))
                f.set(v, true);
    };

    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Unanimity>) {
                fill([&](Vec v) { return v == all_ones_vec(n); });
            } else if constexpr (std::is_same_v<T, SimpleMajority>) {
                fill([&](Vec v) { return eta(v, n, 1) > eta(v, n, 0); });
            } else if constexpr (std::is_same_v<T, QualifiedMajority>) {
                if (!(s.q > Rat(1, 2) && s.q <= 1))
                    throw std::invalid_argument("qualified majority requires 1/2 < q <= 1");
                // eta(v,1) > q*n, compared exactly: den*eta > num*n
                const Int num = rat_num(s.q), den = rat_den(s.q);
                fill([&](Vec v) { return Int(eta(v, n, 1)) * den > num * n; });
            } else if constexpr (std::is_same_v<T, Dictatorship>) {
                detail::check_voter_index(s.who, n);
                fill([&](Vec v) { return vec_bit(v, s.who); });
            } else if constexpr (std::is_same_v<T, AntiDictatorship>) {
                detail::check_voter_index(s.who, n);
                fill([&](Vec v) { return !vec_bit(v, s.who); });
            } else if constexpr (std::is_same_v<T, Oligarchy>) {
                if (s.members.empty())
                    throw std::invalid_argument("oligarchy set must be nonempty");
                Vec mask = 0;
                for (Voter i : s.members) {
                    detail::check_voter_index(i, n);
                    mask |= Vec{1} << i;
                }
                const int size = std::popcount(mask);
                if (static_cast<std::size_t>(size) != s.members.size())
                    throw std::invalid_argument("oligarchy set has duplicates");
                fill([&](Vec v) { return 2 * std::popcount(v & mask) > size; });
            } else if constexpr (std::is_same_v<T, ConsensusDuopoly>) {
                detail::check_voter_index(s.a, n);
                detail::check_voter_index(s.b, n);
                if (s.a == s.b)
                    throw std::invalid_argument("consensus duopoly needs two distinct voters");
                fill([&](Vec v) { return vec_bit(v, s.a) && vec_bit(v, s.b); });
            } else if constexpr (std::is_same_v<T, OligopolyWithVeto>) {
                detail::check_voter_index(s.veto, n);
                detail::check_voter_index(s.a, n);
                detail::check_voter_index(s.b, n);
                if (s.veto == s.a || s.veto == s.b || s.a == s.b)
                    throw std::invalid_argument("oligopoly-with-veto needs three distinct voters");
                fill([&](Vec v) {
                    return vec_bit(v, s.veto) && (vec_bit(v, s.a) || vec_bit(v, s.b));
                });
            } else if constexpr (std::is_same_v<T, ConstantZero>) {
                // table stays all zeros
            } else if constexpr (std::is_same_v<T, Threshold>) {
                if (s.k < 0 || s.k > n + 1)
                    throw std::invalid_argument("threshold k out of [0, n+1]");
                fill([&](Vec v) { return eta(v, n, 1) >= s.k; });
            }
        },
        spec);
    return f;
}

inline Scf negation_scf(const Scf& f)
{
    Scf g(f.n());
    for (Vec v = 0; v < f.vector_count(); ++v)
        g.set(v, f(v) == 0);
    return g;
}

} // namespace constlab

template <>
struct std::hash<constlab::Scf> {
    std::size_t operator()(const constlab::Scf& f) const noexcept
    {
        std::size_t h = std::hash<int>{}(f.n());
        for (constlab::Vec v = 0; v < f.vector_count(); v += 64) {
            std::uint64_t w = 0;
            for (int b = 0; b < 64 && v + static_cast<constlab::Vec>(b) < f.vector_count(); ++b)
                w |= std::uint64_t(f(v + static_cast<constlab::Vec>(b))) << b;
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

#endif
