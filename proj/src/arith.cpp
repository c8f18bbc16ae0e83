#include "posit/arith.hpp"

#include <bit>

#include "posit/decode.hpp"
#include "posit/detail/round.hpp"
#include "posit/encode.hpp"
#include "posit/multiply.hpp"

namespace posit {

namespace {

using detail::u128;
using i128 = __int128;

struct DecodedScalar {
    bool sign;
    std::uint64_t sig;  // hidden-bit fraction register
    ScaleInt scale;     // value = (-1)^sign * sig * 2^scale
};

DecodedScalar split(const PositBits& p) {
    const UnpackedPosit u = decode(p);
    const ScaleInt scale =
        static_cast<ScaleInt>(u.regime_k) * p.config.useed_exponent() +
        u.exponent_e - (p.config.n - p.config.es - 3);
    return {u.sign, u.fraction, scale};
}

// Alignment shifts are clamped: the smaller operand cannot influence anything
// below the sticky bit once it sits more than ~2n bits under the leading one,
// so it collapses to a one-ulp marker there. This keeps the sum width bounded
// for any es.
PositBits add_narrow(const PositBits& a, const PositBits& b, int clamp) {
    const PositConfig& cfg = a.config;
    DecodedScalar hi = split(a);
    DecodedScalar lo = split(b);
    if (hi.scale < lo.scale) std::swap(hi, lo);
    const ScaleInt gap = hi.scale - lo.scale;

    i128 sum;
    ScaleInt base;
    if (gap > clamp) {
        sum = (static_cast<i128>(hi.sign ? -static_cast<i128>(hi.sig) : hi.sig)
               << clamp) +
              (lo.sign ? -1 : 1);
        base = hi.scale - clamp;
    } else {
        const int shift = static_cast<int>(gap);
        sum = (static_cast<i128>(hi.sign ? -static_cast<i128>(hi.sig) : hi.sig)
               << shift) +
              (lo.sign ? -static_cast<i128>(lo.sig) : static_cast<i128>(lo.sig));
        base = lo.scale;
    }
    if (sum == 0) return PositBits{0, cfg};

    const bool negative = sum < 0;
    u128 mag = negative ? static_cast<u128>(-sum) : static_cast<u128>(sum);
    const int tz = detail::countr_zero_u128(mag);
    mag >>= tz;
    base += tz;

    const int fw = detail::bit_width_u128(mag) - 1;
    const ScaleInt total = base + fw;
    const ScaleInt p2 = ScaleInt(1) << cfg.es;
    const ScaleInt k = total >= 0 ? total / p2 : -((-total + p2 - 1) / p2);
    const std::int64_t e = static_cast<std::int64_t>(total - k * p2);
    const u128 frac = mag ^ (u128(1) << fw);
    return PositBits{detail::pack_round(cfg, negative, k, e, frac, fw, false), cfg};
}

PositBits add_wide(const PositBits& a, const PositBits& b, int clamp) {
    const PositConfig& cfg = a.config;
    DecodedScalar hi = split(a);
    DecodedScalar lo = split(b);
    if (hi.scale < lo.scale) std::swap(hi, lo);
    const ScaleInt gap = hi.scale - lo.scale;

    BigInt sum;
    ScaleInt base;
    if (gap > clamp) {
        sum = (BigInt(hi.sig) << clamp) + (hi.sign == lo.sign ? 1 : -1);
        if (hi.sign) sum = -sum;
        base = hi.scale - clamp;
    } else {
        BigInt top = BigInt(hi.sig) << static_cast<unsigned>(gap);
        if (hi.sign) top = -top;
        BigInt bottom = lo.sig;
        if (lo.sign) bottom = -bottom;
        sum = top + bottom;
        base = lo.scale;
    }
    if (sum == 0) return PositBits{0, cfg};
    const bool negative = sum < 0;
    return encode(ExactValue::make(negative, boost::multiprecision::abs(sum), base),
                  cfg);
}

}  // namespace

PositBits posit_add(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    const PositConfig& cfg = a.config;
    if (a.is_nar() || b.is_nar()) return PositBits{cfg.nar_pattern(), cfg};
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int clamp = 2 * cfg.n + 8;
    // the aligned sum needs (n-es-2) + clamp + 1 bits
    if (cfg.n - cfg.es - 2 + clamp + 1 <= 126) return add_narrow(a, b, clamp);
    return add_wide(a, b, clamp);
}

PositBits posit_sub(const PositBits& a, const PositBits& b) {
    return posit_add(a, negate(b));
}

PositBits posit_div(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    const PositConfig& cfg = a.config;
    if (a.is_nar() || b.is_nar() || b.is_zero()) {
        return PositBits{cfg.nar_pattern(), cfg};
    }
    if (a.is_zero()) return PositBits{0, cfg};
    const DecodedScalar da = split(a);
    const DecodedScalar db = split(b);
    // quotient to n+8 significant bits, remainder folded into a sticky bit
    // well below the rounding window
    const int extra = cfg.n + 8 + std::bit_width(db.sig);
    const BigInt num = BigInt(da.sig) << extra;
    const BigInt den = db.sig;
    BigInt q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) q |= 1;
    return encode(
        ExactValue::make(da.sign != db.sign, q, da.scale - db.scale - extra), cfg);
}

Quire::Quire(const PositConfig& cfg) : cfg_(cfg) {
    if (cfg.es > 20) {
        throw std::length_error("quire register for es=" + std::to_string(cfg.es) +
                                " would exceed any practical width");
    }
}

std::int64_t Quire::frac_bits() const {
    return 2 * cfg_.useed_exponent() * (cfg_.n - 2);
}

void Quire::check_capacity() const {
    // 1 + 31 + 4*2^es*(n-2) total bits: magnitudes must stay below
    // 2^(31 + value_bits) in units of 2^-frac_bits
    const std::int64_t limit = 31 + 2 * frac_bits();
    if (acc_ != 0 && boost::multiprecision::msb(boost::multiprecision::abs(acc_)) >=
                         static_cast<unsigned>(limit)) {
        throw QuireOverflow("quire capacity exceeded for " + to_string(cfg_));
    }
}

void Quire::fma(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    if (!(a.config == cfg_)) {
        throw std::invalid_argument("quire/operand config mismatch");
    }
    if (a.is_nar() || b.is_nar()) {
        nar_ = true;
        return;
    }
    if (a.is_zero() || b.is_zero()) return;
    const DecodedScalar da = split(a);
    const DecodedScalar db = split(b);
    u128 prod = static_cast<u128>(da.sig) * db.sig;
    const int tz = detail::countr_zero_u128(prod);
    prod >>= tz;
    // with an odd significand the product scale is at worst -frac_bits
    // (minpos^2), which sits exactly at the bottom of the register
    const ScaleInt pos = da.scale + db.scale + tz + frac_bits();
    if (pos < 0) throw std::logic_error("quire: product below register bottom");
    BigInt term = BigInt(prod) << static_cast<unsigned>(pos);
    if (da.sign != db.sign) term = -term;
    acc_ += term;
    check_capacity();
}

void Quire::merge(const Quire& other) {
    if (!(other.cfg_ == cfg_)) {
        throw std::invalid_argument("quire config mismatch in merge");
    }
    nar_ = nar_ || other.nar_;
    acc_ += other.acc_;
    check_capacity();
}

PositBits Quire::to_posit() const {
    if (nar_) return PositBits{cfg_.nar_pattern(), cfg_};
    if (acc_ == 0) return PositBits{0, cfg_};
    const bool negative = acc_ < 0;
    return encode(ExactValue::make(negative, boost::multiprecision::abs(acc_),
                                   -static_cast<ScaleInt>(frac_bits())),
                  cfg_);
}

PositBits dot(std::span<const PositBits> a, std::span<const PositBits> b, DotMode mode,
              const PositConfig& cfg) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: vector lengths differ");
    }
    if (mode == DotMode::quire) {
        Quire q(cfg);
        for (std::size_t i = 0; i < a.size(); ++i) q.fma(a[i], b[i]);
        return q.to_posit();
    }
    PositBits acc{0, cfg};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = posit_add(acc, posit_mult(a[i], b[i]));
    }
    return acc;
}

}  // namespace posit
