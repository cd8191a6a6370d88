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

#ifndef CONSTLAB_RATIONAL_HPP
#define CONSTLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace constlab {

/// Arbitrary-precision integer and rational. All probability and utility
/// arithmetic in the exact engines runs on these; floating point is confined
/// to the common-value oligarchy model.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Serialized form used in every JSON/CSV artifact: "num/den", denominator
/// always present ("3" serializes as "3/1").
inline std::string rat_to_string(const Rat& r)
{
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline double rat_to_double(const Rat& r)
{
    return static_cast<double>(r);
}

/// Parses "num/den", a plain integer, or a decimal string ("0.65" becomes
/// 13/20 exactly). Throws std::invalid_argument on anything else.
inline Rat parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");

    const auto bad = [&] {
        return std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw bad();

    Int num = 0;
    Int den = 1;
    bool after_point = false;
    bool saw_digit = false;
    bool saw_slash = false;
    Int slash_den = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c >= '0' && c <= '9') {
            saw_digit = true;
            if (saw_slash)
                slash_den = slash_den * 10 + (c - '0');
            else {
                num = num * 10 + (c - '0');
                if (after_point)
                    den *= 10;
            }
        } else if (c == '.' && !after_point && !saw_slash) {
            after_point = true;
        } else if (c == '/' && !saw_slash && !after_point && saw_digit) {
            saw_slash = true;
            saw_digit = false;
        } else {
            throw bad();
        }
    }
    if (!saw_digit)
        throw bad();
    if (saw_slash) {
        if (slash_den == 0)
            throw std::invalid_argument("zero denominator in rational literal");
        den = slash_den;
    }
    Rat r(num, den);
    if (negative)
        r = -r;
    return r;
}

/// Lowest common multiple helper for assembling a common denominator.
inline Int int_lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

} // namespace constlab

#endif
