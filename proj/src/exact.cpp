#include "posit/exact.hpp"

#include <utility>

namespace posit {

namespace {

int lowest_set_bit(const BigInt& x) {
    return static_cast<int>(boost::multiprecision::lsb(x));
}

}  // namespace

ExactValue ExactValue::make(bool sign, BigInt significand, ScaleInt scale) {
    ExactValue v;
    if (significand == 0) return v;
    const int tz = lowest_set_bit(significand);
    v.sign = sign;
    v.significand = significand >> tz;
    v.scale = scale + tz;
    return v;
}

ExactValue negated(ExactValue v) {
    if (!v.nar && !v.is_zero()) v.sign = !v.sign;
    return v;
}

ExactValue exact_mul(const ExactValue& a, const ExactValue& b) {
    if (a.nar || b.nar) return ExactValue::make_nar();
    if (a.is_zero() || b.is_zero()) return ExactValue::zero();
    return ExactValue::make(a.sign != b.sign, a.significand * b.significand,
                            a.scale + b.scale);
}

ExactValue exact_add(const ExactValue& a, const ExactValue& b) {
    if (a.nar || b.nar) return ExactValue::make_nar();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaleInt base = a.scale < b.scale ? a.scale : b.scale;
    BigInt sa = a.significand << static_cast<unsigned>(a.scale - base);
    BigInt sb = b.significand << static_cast<unsigned>(b.scale - base);
    if (a.sign) sa = -sa;
    if (b.sign) sb = -sb;
    const BigInt sum = sa + sb;
    if (sum == 0) return ExactValue::zero();
    return ExactValue::make(sum < 0, boost::multiprecision::abs(sum), base);
}

int exact_compare(const ExactValue& a, const ExactValue& b) {
    if (a.nar || b.nar) throw std::invalid_argument("exact_compare: NaR operand");
    const ExactValue d = exact_add(a, negated(b));
    if (d.is_zero()) return 0;
    return d.sign ? -1 : 1;
}

BigInt useed_value(const PositConfig& cfg) {
    if (cfg.es > 30) {
        throw std::length_error("useed for es=" + std::to_string(cfg.es) +
                                " is too large to materialize");
    }
    return BigInt(1) << (1u << cfg.es);
}

}  // namespace posit
