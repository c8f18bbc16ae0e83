#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "posit/config.hpp"

namespace posit {

/// An n-bit two's-complement pattern together with its format. This is the
/// only at-rest representation of a posit value; everything else (unpacked
/// fields, exact values) is derived on demand.
struct PositBits {
    std::uint64_t bits = 0;
    PositConfig config;

    PositBits() = default;

    PositBits(std::uint64_t b, PositConfig c) : bits(b), config(c) {
        if (bits > config.pattern_mask()) {
            throw std::invalid_argument("pattern does not fit in " +
                                        std::to_string(config.n) + " bits");
        }
    }

    bool is_zero() const { return bits == 0; }
    bool is_nar() const { return bits == config.nar_pattern(); }

    friend bool operator==(const PositBits& a, const PositBits& b) {
        return a.config == b.config && a.bits == b.bits;
    }
};

inline void require_same_config(const PositBits& a, const PositBits& b) {
    if (!(a.config == b.config)) {
        throw std::invalid_argument("posit operands use different configs: " +
                                    to_string(a.config) + " vs " + to_string(b.config));
    }
}

/// The pattern interpreted as a signed integer (sign-extended from bit n-1).
/// Posit ordering coincides with this integer ordering for non-NaR patterns.
inline std::int64_t as_signed(const PositBits& p) {
    const int shift = 64 - p.config.n;
    return static_cast<std::int64_t>(p.bits << shift) >> shift;
}

/// n-bit two's complement. Fixes zero and NaR, maps x to -x otherwise.
inline PositBits negate(const PositBits& p) {
    return PositBits{(~p.bits + 1) & p.config.pattern_mask(), p.config};
}

/// Signed integer comparison of the raw patterns, which for posits equals
/// comparison of the represented values. NaR has no place in the real order,
/// so either NaR operand yields `unordered`.
inline std::partial_ordering compare(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    if (a.is_nar() || b.is_nar()) return std::partial_ordering::unordered;
    return as_signed(a) <=> as_signed(b);
}

/// "0x.." with the digits zero-padded to ceil(n/4).
std::string to_hex_string(const PositBits& p);

/// "0b.." zero-padded to n digits.
std::string to_bin_string(const PositBits& p);

/// Accepts 0x-/0b-prefixed pattern literals (case-insensitive digits).
/// Throws std::invalid_argument on malformed text or out-of-range patterns.
PositBits parse_pattern(std::string_view text, const PositConfig& cfg);

}  // namespace posit
