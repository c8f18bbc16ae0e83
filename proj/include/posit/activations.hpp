#pragma once

#include "posit/bits.hpp"

namespace posit {

/// The es=0 bit-trick sigmoid: flip the sign bit, logical shift right by two.
/// Outputs lie in [0,1] and are monotone in the input. Only defined for es=0
/// configs; anything else throws. Applied literally, NaR maps to the zero
/// pattern.
PositBits fast_sigmoid(const PositBits& p);

/// 1/(1+e^-x) evaluated in binary64, then rounded to the config. binary64 is
/// strictly wider than every supported posit here, so the only format-level
/// rounding is the final encode. NaR in, NaR out.
PositBits exact_sigmoid(const PositBits& p);

/// max(0, x); NaR propagates.
PositBits relu(const PositBits& p);

}  // namespace posit
