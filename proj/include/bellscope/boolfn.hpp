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
 * Boolean functions over bit strings: truth tables, algebraic normal form and
 * the linearity test that carves out the local-hidden-variable region.
 *
 * Bit convention used across the library: bit j (1-based) of a string is stored
 * at position j-1 of its integer encoding.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bellscope {

/// Largest supported arity; truth tables are dense.
inline constexpr unsigned kMaxArity = 24;

/// Parity of the set bits of `v`.
inline unsigned parity(std::uint64_t v) { return static_cast<unsigned>(std::popcount(v) & 1); }

/// Bit j (1-based) of `v`.
inline unsigned bit_at(std::uint64_t v, unsigned j) { return static_cast<unsigned>((v >> (j - 1)) & 1U); }

/// A fixed-length string of bits, bit j at integer position j-1.
struct BitString {
    unsigned length = 0;
    std::uint64_t value = 0;

    BitString() = default;
    BitString(unsigned len, std::uint64_t val) : length(len), value(val) {
        if (len > 64 || (len < 64 && (val >> len) != 0)) {
            throw std::invalid_argument("bit string value does not fit its length");
        }
    }

    /// Builds from bits listed in party order, bits[0] is bit 1.
    static BitString from_bits(const std::vector<unsigned> &bits) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] > 1) {
                throw std::invalid_argument("bit values must be 0 or 1");
            }
            v |= static_cast<std::uint64_t>(bits[i]) << i;
        }
        return BitString{static_cast<unsigned>(bits.size()), v};
    }

    unsigned operator[](unsigned j) const { return bit_at(value, j); }

    /// Bits in party order, bit 1 first.
    std::string to_string() const {
        std::string out(length, '0');
        for (unsigned j = 1; j <= length; ++j) {
            out[j - 1] = static_cast<char>('0' + bit_at(value, j));
        }
        return out;
    }

    friend bool operator==(const BitString &, const BitString &) = default;
};

/// Algebraic normal form: coefficient i is the monomial over the subset encoded by i.
struct AnfForm {
    unsigned arity = 0;
    std::vector<std::uint8_t> coefficients;

    /// Size of the largest monomial present; 0 for constants (including constant 0).
    unsigned degree() const {
        unsigned d = 0;
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            if (coefficients[i] != 0) {
                d = std::max(d, static_cast<unsigned>(std::popcount(i)));
            }
        }
        return d;
    }

    friend bool operator==(const AnfForm &, const AnfForm &) = default;
};

class BooleanFunction {
  public:
    BooleanFunction() : BooleanFunction(0, std::vector<std::uint8_t>{0}) {}

    BooleanFunction(unsigned arity, std::vector<std::uint8_t> table)
        : arity_(arity), table_(std::move(table)) {
        if (arity_ > kMaxArity) {
            throw std::invalid_argument("arity " + std::to_string(arity_) + " exceeds the cap of " +
                                        std::to_string(kMaxArity));
        }
        if (table_.size() != (std::size_t{1} << arity_)) {
            throw std::invalid_argument("truth table length must be 2^arity");
        }
        for (auto &b : table_) {
            if (b > 1) {
                throw std::invalid_argument("truth table entries must be 0 or 1");
            }
        }
    }

    /// Tabulates any callable `uint64_t -> bool-like` over all 2^arity inputs.
    template <class Fn> static BooleanFunction tabulate(unsigned arity, Fn &&fn) {
        if (arity > kMaxArity) {
            throw std::invalid_argument("arity exceeds cap");
        }
        std::vector<std::uint8_t> table(std::size_t{1} << arity);
        for (std::uint64_t x = 0; x < table.size(); ++x) {
            table[x] = static_cast<std::uint8_t>(fn(x) ? 1 : 0);
        }
        return BooleanFunction{arity, std::move(table)};
    }

    static BooleanFunction constant(unsigned arity, unsigned value) {
        return tabulate(arity, [value](std::uint64_t) { return value != 0; });
    }

    /// The affine function x -> (mask . x) xor constant.
    static BooleanFunction linear(unsigned arity, std::uint64_t mask, unsigned constant) {
        if (arity < 64 && (mask >> arity) != 0) {
            throw std::invalid_argument("linear mask references inputs beyond the arity");
        }
        return tabulate(arity, [=](std::uint64_t x) { return (parity(mask & x) ^ (constant & 1U)) != 0; });
    }

    /// Product of the listed (1-based) inputs.
    static BooleanFunction monomial(unsigned arity, std::uint64_t subset) {
        return tabulate(arity, [subset](std::uint64_t x) { return (x & subset) == subset; });
    }

    unsigned arity() const { return arity_; }
    std::size_t size() const { return table_.size(); }
    const std::vector<std::uint8_t> &table() const { return table_; }

    /// Unchecked lookup by integer encoding.
    unsigned operator()(std::uint64_t x) const { return table_[x]; }

    friend bool operator==(const BooleanFunction &, const BooleanFunction &) = default;
    friend auto operator<=>(const BooleanFunction &a, const BooleanFunction &b) {
        if (auto c = a.arity_ <=> b.arity_; c != 0) {
            return c;
        }
        return a.table_ <=> b.table_;
    }

    friend BooleanFunction operator^(const BooleanFunction &a, const BooleanFunction &b) {
        if (a.arity_ != b.arity_) {
            throw std::invalid_argument("xor of functions with different arity");
        }
        auto t = a.table_;
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] ^= b.table_[i];
        }
        return BooleanFunction{a.arity_, std::move(t)};
    }

  private:
    unsigned arity_;
    std::vector<std::uint8_t> table_;
};

inline unsigned evaluate(const BooleanFunction &f, const BitString &in) {
    if (in.length != f.arity()) {
        throw std::invalid_argument("input length " + std::to_string(in.length) +
                                    " does not match arity " + std::to_string(f.arity()));
    }
    return f(in.value);
}

/// Moebius transform over GF(2).
inline AnfForm to_anf(const BooleanFunction &f) {
    AnfForm anf{f.arity(), f.table()};
    auto &c = anf.coefficients;
    for (std::size_t step = 1; step < c.size(); step <<= 1) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i & step) {
                c[i] ^= c[i ^ step];
            }
        }
    }
    return anf;
}

/// Inverse of to_anf. The GF(2) Moebius transform is an involution.
inline BooleanFunction from_anf(const AnfForm &anf) {
    auto t = to_anf(BooleanFunction{anf.arity, anf.coefficients});
    return BooleanFunction{anf.arity, std::move(t.coefficients)};
}

/// Affine over GF(2): the constant term counts as linear.
inline bool is_linear(const BooleanFunction &f) { return to_anf(f).degree() <= 1; }

/// The (mask, constant) pair of a linear function; throws for nonlinear input.
struct LinearForm {
    std::uint64_t mask = 0;
    unsigned constant = 0;
};

inline LinearForm linear_form(const BooleanFunction &f) {
    const auto anf = to_anf(f);
    if (anf.degree() > 1) {
        throw std::invalid_argument("function is not linear");
    }
    LinearForm lf;
    lf.constant = anf.coefficients[0];
    for (unsigned j = 0; j < f.arity(); ++j) {
        if (anf.coefficients[std::size_t{1} << j] != 0) {
            lf.mask |= std::uint64_t{1} << j;
        }
    }
    return lf;
}

/// All 2^(k+1) linear functions of arity k. Function (a, b) sits at index a + 2^k * b,
/// so index 0 is the constant-0 function.
inline std::vector<BooleanFunction> enumerate_linear(unsigned k) {
    if (k < 1) {
        throw std::invalid_argument("enumerate_linear requires arity >= 1");
    }
    if (k > kMaxArity) {
        throw std::invalid_argument("arity exceeds cap");
    }
    std::vector<BooleanFunction> out;
    const std::uint64_t masks = std::uint64_t{1} << k;
    out.reserve(2 * masks);
    for (unsigned b = 0; b < 2; ++b) {
        for (std::uint64_t a = 0; a < masks; ++a) {
            out.push_back(BooleanFunction::linear(k, a, b));
        }
    }
    return out;
}

/// Whether f depends on input j (1-based).
inline bool depends_on(const BooleanFunction &f, unsigned j) {
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        if ((x & bit) == 0 && f(x) != f(x | bit)) {
            return true;
        }
    }
    return false;
}

// Text form "<arity>:<hex>", the hex string holding entry i at bit i, most
// significant digit first.

inline std::string to_text(const BooleanFunction &f) {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t nibbles = f.size() < 4 ? 1 : f.size() / 4;
    std::string hex(nibbles, '0');
    for (std::size_t d = 0; d < nibbles; ++d) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t i = 4 * d + b;
            if (i < f.size()) {
                v |= f(i) << b;
            }
        }
        hex[nibbles - 1 - d] = digits[v];
    }
    return std::to_string(f.arity()) + ":" + hex;
}

inline BooleanFunction from_text(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw std::invalid_argument("boolean function text must be <arity>:<hex>");
    }
    unsigned arity = 0;
    for (char ch : text.substr(0, colon)) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("malformed arity in boolean function text");
        }
        arity = arity * 10 + static_cast<unsigned>(ch - '0');
        if (arity > kMaxArity) {
            throw std::invalid_argument("arity exceeds cap");
        }
    }
    const auto hex = text.substr(colon + 1);
    const std::size_t size = std::size_t{1} << arity;
    const std::size_t nibbles = size < 4 ? 1 : size / 4;
    if (hex.size() != nibbles) {
        throw std::invalid_argument("hex truth table must have " + std::to_string(nibbles) + " digits");
    }
    std::vector<std::uint8_t> table(size);
    for (std::size_t d = 0; d < nibbles; ++d) {
        const char ch = hex[nibbles - 1 - d];
        unsigned v;
        if (ch >= '0' && ch <= '9') {
            v = static_cast<unsigned>(ch - '0');
        } else if (ch >= 'a' && ch <= 'f') {
            v = static_cast<unsigned>(ch - 'a' + 10);
        } else if (ch >= 'A' && ch <= 'F') {
            v = static_cast<unsigned>(ch - 'A' + 10);
        } else {
            throw std::invalid_argument("non-hex digit in truth table");
        }
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t i = 4 * d + b;
            if (i < size) {
                table[i] = static_cast<std::uint8_t>((v >> b) & 1U);
            } else if ((v >> b) & 1U) {
                throw std::invalid_argument("hex truth table sets entries beyond 2^arity");
            }
        }
    }
    return BooleanFunction{arity, std::move(table)};
}

} // namespace bellscope
