#include "posit/multiply.hpp"

#include "posit/decode.hpp"
#include "posit/detail/round.hpp"

namespace posit {

namespace {

using detail::u128;

std::uint64_t mult_impl(const PositBits& a, const PositBits& b, MulTrace* tr) {
    require_same_config(a, b);
    const PositConfig& cfg = a.config;
    const int n = cfg.n;
    const int es = cfg.es;
    const ScaleInt p2es = ScaleInt(1) << es;

    const UnpackedPosit ua = decode(a);
    const UnpackedPosit ub = decode(b);

    const bool sign = ua.sign ^ ub.sign;
    const bool z = ua.is_zero | ub.is_zero;
    const bool inf = ua.is_nar | ub.is_nar;

    // scale factors: regime and exponent concatenated
    const ScaleInt sf_a = static_cast<ScaleInt>(ua.regime_k) * p2es + ua.exponent_e;
    const ScaleInt sf_b = static_cast<ScaleInt>(ub.regime_k) * p2es + ub.exponent_e;

    // integer product of the hidden-bit fractions; the top bit flags overflow
    // into [2,4)
    const int fr_w = cfg.frac_reg_width();  // n - es - 2, hidden bit included
    const u128 frac_mult = static_cast<u128>(ua.fraction) * ub.fraction;
    const bool ovf_m = detail::get_bit(frac_mult, 2 * fr_w - 1);
    // normalize by appending a zero instead of shifting, so no bit is lost:
    // after this the hidden bit sits at index 2*fr_w - 1 in both cases
    const u128 norm_frac = ovf_m ? frac_mult : frac_mult << 1;

    const bool nzero = frac_mult != 0;
    const ScaleInt sf_mult = sf_a + sf_b + (ovf_m ? 1 : 0);
    const bool sf_sign = sf_mult < 0;

    // unpack: low es bits are the exponent field, the rest is the regime
    const std::int64_t exp_field = static_cast<std::int64_t>(sf_mult & (p2es - 1));
    const ScaleInt reg_tmp = sf_mult >> es;
    const ScaleInt reg_abs = sf_sign ? -reg_tmp : reg_tmp;

    // a regime of n-1 or more cannot be terminated inside the word: clamp to
    // the maximal run and zero the exponent (rounding is suppressed below)
    const bool ovf_reg = reg_abs >= n - 1;
    const int reg_f = ovf_reg ? n - 1 : static_cast<int>(reg_abs);
    const bool ovf_regf = reg_f == n - 1;
    const std::int64_t exp_f = (ovf_reg || ovf_regf || !nzero) ? 0 : exp_field;

    // pack [nzero, 0, exp_f, fraction] (or [0, nzero, ...] for negative
    // regimes) and shift right; the conceptual n-1 zero pad bits keep every
    // fraction bit available for rounding
    const int fb = 2 * fr_w - 1;  // product fraction bits below the hidden bit
    const u128 frac_bits = norm_frac & ((u128(1) << fb) - 1);
    const int C = 2 + es + fb;
    const u128 c = (u128(nzero ? 1 : 0) << (sf_sign ? es + fb : 1 + es + fb)) |
                   (static_cast<u128>(exp_f) << fb) | frac_bits;

    const int shift_neg = ovf_regf ? reg_f - 2 : reg_f - 1;
    const int shift_pos = ovf_regf ? reg_f - 1 : reg_f;
    const int s_amt = sf_sign ? shift_neg : shift_pos;
    const int fill = sf_sign ? 0 : (nzero ? 1 : 0);

    const detail::Window w = detail::extract_window(c, C, n, s_amt, fill);
    const bool lsb = w.body & 1;
    const bool round = (ovf_reg || ovf_regf) ? false : (w.g && (lsb || w.r || w.s));
    const std::uint64_t result_tmp = w.body + (round ? 1 : 0);

    std::uint64_t result;
    if (inf) {
        result = cfg.nar_pattern();
    } else if (z) {
        result = 0;
    } else if (sign) {
        result = (~result_tmp + 1) & cfg.pattern_mask();
    } else {
        result = result_tmp;
    }

    if (tr) {
        *tr = MulTrace{sign, z,        inf,     sf_a,    sf_b,   frac_mult,
                       ovf_m, norm_frac, sf_mult, sf_sign, nzero, exp_field,
                       reg_tmp, reg_abs, ovf_reg, reg_f,   ovf_regf, exp_f,
                       shift_neg, shift_pos, lsb,  w.g,     w.r,     w.s,
                       round, result};
    }
    return result;
}

}  // namespace

PositBits posit_mult(const PositBits& a, const PositBits& b) {
    return PositBits{mult_impl(a, b, nullptr), a.config};
}

std::pair<PositBits, MulTrace> posit_mult_traced(const PositBits& a, const PositBits& b) {
    MulTrace tr;
    const std::uint64_t result = mult_impl(a, b, &tr);
    return {PositBits{result, a.config}, tr};
}

}  // namespace posit
