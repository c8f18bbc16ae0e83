#include "posit/encode.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "posit/decode.hpp"
#include "posit/detail/round.hpp"

namespace posit {

namespace {

// floor division of the total scale into regime and exponent fields
void split_scale(ScaleInt total, int es, ScaleInt& k, std::int64_t& e) {
    const ScaleInt p2 = ScaleInt(1) << es;
    k = total >= 0 ? total / p2 : -((-total + p2 - 1) / p2);
    e = static_cast<std::int64_t>(total - k * p2);
}

}  // namespace

PositBits encode(const ExactValue& v, const PositConfig& cfg) {
    if (v.nar) return PositBits{cfg.nar_pattern(), cfg};
    if (v.is_zero()) return PositBits{0, cfg};

    const int fw = static_cast<int>(boost::multiprecision::msb(v.significand));
    const ScaleInt total = v.scale + fw;
    ScaleInt k;
    std::int64_t e;
    split_scale(total, cfg.es, k, e);

    if (2 + cfg.es + fw <= 128) {
        const detail::u128 frac =
            fw == 0 ? 0
                    : (v.significand - (BigInt(1) << fw)).convert_to<detail::u128>();
        return PositBits{detail::pack_round(cfg, v.sign, k, e, frac, fw, false), cfg};
    }
    const BigInt frac = v.significand - (BigInt(1) << fw);
    return PositBits{detail::pack_round(cfg, v.sign, k, e, frac, fw, false), cfg};
}

PositBits from_binary64(double x, const PositConfig& cfg) {
    if (std::isnan(x)) return PositBits{cfg.nar_pattern(), cfg};
    if (x == 0.0) return PositBits{0, cfg};
    const std::uint64_t raw = std::bit_cast<std::uint64_t>(x);
    const bool sign = raw >> 63;
    if (std::isinf(x)) {
        // posits have no overflow: infinities saturate
        const std::uint64_t mp = cfg.maxpos_pattern();
        return PositBits{sign ? (~mp + 1) & cfg.pattern_mask() : mp, cfg};
    }
    const int biased = static_cast<int>((raw >> 52) & 0x7FF);
    const std::uint64_t mantissa = raw & ((std::uint64_t{1} << 52) - 1);
    std::uint64_t sig;
    std::int64_t scale;
    if (biased == 0) {
        sig = mantissa;
        scale = -1074;
    } else {
        sig = mantissa | (std::uint64_t{1} << 52);
        scale = biased - 1075;
    }
    const int tz = std::countr_zero(sig);
    sig >>= tz;
    scale += tz;

    const int fw = std::bit_width(sig) - 1;
    ScaleInt k;
    std::int64_t e;
    split_scale(scale + fw, cfg.es, k, e);
    const detail::u128 frac = sig ^ (std::uint64_t{1} << fw);
    return PositBits{detail::pack_round(cfg, sign, k, e, frac, fw, false), cfg};
}

double to_binary64(const PositBits& p) {
    if (p.is_nar()) return std::numeric_limits<double>::quiet_NaN();
    if (p.is_zero()) return 0.0;
    const UnpackedPosit u = decode(p);
    ScaleInt scale = static_cast<ScaleInt>(u.regime_k) * p.config.useed_exponent() +
                     u.exponent_e - (p.config.n - p.config.es - 3);
    // clamp far outside the binary64 range; ldexp saturates the rest of the way
    if (scale > 4096) scale = 4096;
    if (scale < -4200) scale = -4200;
    // the 64-bit x87 significand holds any posit fraction (<= 62 bits) exactly,
    // so the only rounding is the final narrowing
    const double mag = static_cast<double>(
        std::ldexp(static_cast<long double>(u.fraction), static_cast<int>(scale)));
    return u.sign ? -mag : mag;
}

}  // namespace posit
