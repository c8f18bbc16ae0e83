#pragma once

#include "posit/bits.hpp"
#include "posit/exact.hpp"

namespace posit {

/// Rounds an exact value to the nearest posit pattern.
///
/// Round-to-nearest-even on the bit-pattern space, decided from the LSB and
/// guard/round/sticky bits of the packed regime-exponent-fraction string.
/// Saturation replaces overflow and underflow: |v| > maxpos gives maxpos,
/// 0 < |v| < minpos gives minpos (sign applied afterwards). Nonzero finite
/// input never encodes to zero or NaR.
PositBits encode(const ExactValue& v, const PositConfig& cfg);

/// encode() applied to the exact value of x. NaN maps to NaR; +-infinity
/// saturates to +-maxpos, consistent with posits having no overflow.
PositBits from_binary64(double x, const PositConfig& cfg);

/// Exact whenever the posit value fits binary64 (all n <= 32, es <= 2 configs
/// fit); otherwise rounds to nearest, saturating to +-inf / +-0 at the ends of
/// the binary64 range. NaR maps to NaN.
double to_binary64(const PositBits& p);

}  // namespace posit
