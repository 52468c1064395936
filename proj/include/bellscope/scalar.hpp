// Copyright 2026 The Bellscope Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Scalar types shared by every module: binary floats for the quantum path and
 * exact GMP rationals wherever a result has to hold with equality.
 */

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace bellscope {

/// Exact rational. Expression templates are disabled so `auto` behaves.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T> struct scalar_traits;

template <> struct scalar_traits<double> {
    static constexpr bool exact = false;
    /// Feasibility / pivot tolerance of the float path.
    static double tolerance() { return 1e-9; }
    static double from_ratio(std::int64_t num, std::int64_t den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double to_double(double v) { return v; }
    static std::string to_string(double v);
};

template <> struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational tolerance() { return Rational{0}; }
    static Rational from_ratio(std::int64_t num, std::int64_t den) {
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        return Rational{num} / Rational{den};
    }
    static double to_double(const Rational &v) { return v.convert_to<double>(); }
    static std::string to_string(const Rational &v) { return v.str(); }
};

inline std::string scalar_traits<double>::to_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T> T abs_value(const T &v) {
    if constexpr (std::same_as<T, double>) {
        return std::fabs(v);
    } else {
        return boost::multiprecision::abs(v);
    }
}

/// Exact conversion between scalar kinds. double -> Rational keeps the binary value.
template <Scalar To, Scalar From> To scalar_cast(const From &v) {
    if constexpr (std::same_as<To, From>) {
        return v;
    } else if constexpr (std::same_as<To, double>) {
        return v.template convert_to<double>();
    } else {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite value cannot be made exact");
        }
        return Rational{v};
    }
}

namespace detail {

/// Decimal integer text to mpz; GMP would read a leading 0 as octal.
inline boost::multiprecision::mpz_int parse_decimal_integer(const std::string &text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("malformed integer: " + text);
    }
    for (std::size_t c = i; c < text.size(); ++c) {
        if (text[c] < '0' || text[c] > '9') {
            throw std::invalid_argument("malformed integer: " + text);
        }
    }
    const auto digits = text.find_first_not_of('0', i);
    boost::multiprecision::mpz_int v{digits == std::string::npos ? std::string("0") : text.substr(digits)};
    return negative ? boost::multiprecision::mpz_int{-v} : v;
}

} // namespace detail

/// Parses "p/q", "p" or a decimal literal ("0.25") into an exact rational.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    std::string s{text};
    const auto dot = s.find('.');
    const auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) {
        try {
            const auto slash = s.find('/');
            if (slash == std::string::npos) {
                return Rational{detail::parse_decimal_integer(s)};
            }
            const auto den = detail::parse_decimal_integer(s.substr(slash + 1));
            if (den == 0) {
                throw std::invalid_argument("zero denominator");
            }
            return Rational{detail::parse_decimal_integer(s.substr(0, slash))} / Rational{den};
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
    }
    // Decimal literal: mantissa digits over a power of ten, then the exponent.
    std::string mantissa = exp == std::string::npos ? s : s.substr(0, exp);
    long exponent = 0;
    if (exp != std::string::npos) {
        try {
            exponent = std::stol(s.substr(exp + 1));
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
    }
    if (const auto d = mantissa.find('.'); d != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - d - 1);
        mantissa.erase(d, 1);
    }
    Rational value;
    try {
        value = Rational{detail::parse_decimal_integer(mantissa)};
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (std::labs(exponent) > 4096) {
        throw std::invalid_argument("decimal exponent out of range: " + s);
    }
    const Rational ten{10};
    for (long i = 0; i < std::labs(exponent); ++i) {
        value = exponent > 0 ? value * ten : value / ten;
    }
    return value;
}

} // namespace bellscope
