#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "posit/config.hpp"

namespace posit {

using BigInt = boost::multiprecision::cpp_int;

/// Power-of-two exponent type. Scales reach (n-2)*2^es, which overflows
/// int64 for the largest legal es, so a 128-bit integer is used.
using ScaleInt = __int128;

/// sign * significand * 2^scale, held exactly. Canonical form keeps the
/// significand odd (or zero), so equal values have equal representations.
struct ExactValue {
    bool sign = false;        // true = negative
    BigInt significand = 0;   // >= 0; odd unless the value is zero
    ScaleInt scale = 0;
    bool nar = false;

    bool is_zero() const { return !nar && significand == 0; }

    static ExactValue zero() { return ExactValue{}; }

    static ExactValue make_nar() {
        ExactValue v;
        v.nar = true;
        return v;
    }

    /// Builds a canonical value from any significand/scale pair.
    static ExactValue make(bool sign, BigInt significand, ScaleInt scale);
};

ExactValue negated(ExactValue v);

/// Exact sum. Cost grows with the scale span of the operands.
ExactValue exact_add(const ExactValue& a, const ExactValue& b);

ExactValue exact_mul(const ExactValue& a, const ExactValue& b);

/// -1 / 0 / +1 ordering of real values; NaR operands are a precondition
/// violation and throw.
int exact_compare(const ExactValue& a, const ExactValue& b);

/// useed = 2^(2^es) as an exact integer. Guarded against absurd es where the
/// value would not be materializable.
BigInt useed_value(const PositConfig& cfg);

}  // namespace posit
