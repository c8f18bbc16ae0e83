#pragma once

#include <cstdint>
#include <utility>

#include "posit/bits.hpp"
#include "posit/exact.hpp"

namespace posit {

/// Every intermediate of the multiplier datapath, for debugging and for the
/// CLI trace output. Invariants: sf_mult = sf_a + sf_b + ovf_m, and norm_frac
/// is frac_mult with a zero appended at exactly one end, selected by ovf_m.
struct MulTrace {
    bool sign = false;
    bool z = false;
    bool inf = false;
    ScaleInt sf_a = 0;                  // regime||exponent scale factors
    ScaleInt sf_b = 0;
    unsigned __int128 frac_mult = 0;    // double-width fraction product
    bool ovf_m = false;                 // fraction product reached [2,4)
    unsigned __int128 norm_frac = 0;
    ScaleInt sf_mult = 0;
    bool sf_sign = false;
    bool nzero = false;
    std::int64_t exp_field = 0;         // low es bits of sf_mult
    ScaleInt reg_tmp = 0;               // signed regime portion of sf_mult
    ScaleInt reg_abs = 0;               // its magnitude
    bool ovf_reg = false;               // regime run cannot fit the word
    int reg_f = 0;
    bool ovf_regf = false;
    std::int64_t exp_f = 0;
    int shift_neg = 0;
    int shift_pos = 0;
    bool lsb = false, g = false, r = false, s = false;
    bool round = false;
    std::uint64_t result = 0;
};

/// Posit multiplication as a staged datapath: decode both operands, XOR the
/// signs and OR the exception flags, add the regime||exponent scale factors
/// (plus the fraction-overflow carry), normalize the double-width fraction
/// product, clamp overflowing regimes, pack, shift, and round to nearest-even
/// from LSB/G/R/S with rounding suppressed on regime overflow. NaR wins over
/// zero in the final select. Total over all operand pairs of a config.
PositBits posit_mult(const PositBits& a, const PositBits& b);

/// Same result plus the full trace.
std::pair<PositBits, MulTrace> posit_mult_traced(const PositBits& a, const PositBits& b);

}  // namespace posit
