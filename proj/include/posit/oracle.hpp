#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "posit/bits.hpp"

namespace posit::oracle {

// The golden model deliberately shares nothing with the datapath
// implementations beyond PositConfig and the pattern type: values are read
// straight off the bit string per the format definition, arithmetic is exact,
// and rounding picks between the two neighboring representable patterns.

using Num = boost::multiprecision::cpp_int;

/// num * 2^exp2, exact. Posit values and their products/sums are all dyadic.
struct Dyadic {
    Num num;
    __int128 exp2 = 0;
};

/// Exact value of a non-special pattern, read by walking the regime run, the
/// (possibly truncated) exponent field, and the fraction.
Dyadic pattern_value(const PositConfig& cfg, std::uint64_t pattern);

/// Reference rounding: saturate outside [minpos, maxpos], otherwise locate
/// the neighboring representable patterns by binary search over the pattern
/// order and keep the nearer one, breaking exact ties toward the pattern with
/// a zero LSB. `num` must be positive; sign is applied by two's complement.
std::uint64_t round_dyadic(const PositConfig& cfg, bool negative, const Dyadic& v);

/// Same, for a general positive rational num/den (division needs this).
std::uint64_t round_rational(const PositConfig& cfg, bool negative, const Num& num,
                             const Num& den);

/// Exact product, reference-rounded. NaR dominates zero.
PositBits oracle_mult(const PositBits& a, const PositBits& b);

/// Exact sum, reference-rounded.
PositBits oracle_add(const PositBits& a, const PositBits& b);

/// Exact quotient, reference-rounded; division by zero and NaR give NaR.
PositBits oracle_div(const PositBits& a, const PositBits& b);

}  // namespace posit::oracle
