#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posit/bits.hpp"
#include "posit/exact.hpp"

namespace posit {

/// Decoded posit fields. `fraction` carries the hidden bit at its MSB and is
/// a fixed-width register of n-es-2 bits (hidden bit + up to n-es-3 fraction
/// bits, zero-padded low), so downstream datapaths see a stable layout.
///
/// For a non-special pattern the represented value is
///   (-1)^sign * useed^regime_k * 2^exponent_e * fraction / 2^(n-es-3).
struct UnpackedPosit {
    bool sign = false;
    int regime_k = 0;
    std::int64_t exponent_e = 0;  // unsigned field, < 2^es; 0 when es == 0
    std::uint64_t fraction = 0;   // hidden bit at bit n-es-3
    bool is_zero = false;
    bool is_nar = false;
};

/// Posit data extraction: special-case flags from the MSB and an OR-reduction
/// of the remaining bits, two's complement of negatives, regime via a leading
/// zero count after conditional inversion, then regime shift-out, exponent and
/// hidden-bit fraction extraction. Total over all 2^n patterns; zero and NaR
/// come back with flags set and zeroed numeric fields.
UnpackedPosit decode(const PositBits& p);

/// Lossless conversion to an exact scaled integer. NaR maps to the NaR flag.
ExactValue to_exact(const PositBits& p);

/// All 2^n patterns with their decoded values, ordered by pattern. Values are
/// rounded to binary64 (exact for every config with n <= 32, es <= 2). NaR
/// decodes to NaN. Bounded at n <= 16; larger configs raise a capacity error.
std::vector<std::pair<std::uint64_t, double>> enumerate_values(const PositConfig& cfg);

}  // namespace posit
