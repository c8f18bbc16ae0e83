#include "posit/oracle.hpp"

#include <stdexcept>

namespace posit::oracle {

namespace {

using u128 = unsigned __int128;

std::uint64_t twos_complement(const PositConfig& cfg, std::uint64_t pattern) {
    return (~pattern + 1) & cfg.pattern_mask();
}

// Exact value of a positive magnitude pattern of any width (the tie-point
// computation below needs width n+1). Walks the regime run, the possibly
// truncated exponent field, then the fraction, per the format definition.
Dyadic extended_value(int width, int es, u128 mag) {
    int pos = width - 2;
    const int r0 = static_cast<int>((mag >> pos) & 1);
    int run = 0;
    while (pos >= 0 && static_cast<int>((mag >> pos) & 1) == r0) {
        ++run;
        --pos;
    }
    if (pos >= 0) --pos;  // regime terminator, when present
    const std::int64_t k = r0 ? run - 1 : -run;

    // exponent field, left-aligned: bits running off the end read as zero
    std::int64_t e = 0;
    for (int i = 0; i < es; ++i) {
        e <<= 1;
        if (pos >= 0) {
            e |= static_cast<std::int64_t>((mag >> pos) & 1);
            --pos;
        }
    }

    const int fb = pos + 1;
    const u128 frac = fb == 0 ? 0 : mag & ((u128(1) << fb) - 1);

    Dyadic v;
    v.num = Num((u128(1) << fb) | frac);
    v.exp2 = (static_cast<__int128>(k) << es) + e - fb;
    return v;
}

// -1 / 0 / +1 compare of two dyadics
int cmp(const Dyadic& a, const Dyadic& b) {
    const __int128 base = a.exp2 < b.exp2 ? a.exp2 : b.exp2;
    const Num left = a.num << static_cast<unsigned>(a.exp2 - base);
    const Num right = b.num << static_cast<unsigned>(b.exp2 - base);
    return left.compare(right);
}

// The rounding boundary between adjacent patterns lo and lo+1: the value of
// the (n+1)-bit pattern lo||1. Appending one encoding bit lands exactly on
// the round-to-nearest-even tie point of the n-bit format, both in the
// uniform fraction bands and in the tapered bands where regime growth
// truncates the exponent field.
Dyadic tie_point(const PositConfig& cfg, std::uint64_t lo) {
    return extended_value(cfg.n + 1, cfg.es, (u128(lo) << 1) | 1);
}

}  // namespace

Dyadic pattern_value(const PositConfig& cfg, std::uint64_t pattern) {
    if (pattern == 0 || pattern == cfg.nar_pattern()) {
        throw std::invalid_argument("pattern_value: special pattern");
    }
    const bool negative = (pattern >> (cfg.n - 1)) & 1;
    const std::uint64_t mag = negative ? twos_complement(cfg, pattern) : pattern;
    return extended_value(cfg.n, cfg.es, mag);
}

std::uint64_t round_dyadic(const PositConfig& cfg, bool negative, const Dyadic& v) {
    if (v.num <= 0) throw std::invalid_argument("round_dyadic: need positive value");
    std::uint64_t lo = cfg.minpos_pattern();
    std::uint64_t hi = cfg.maxpos_pattern();
    const auto value_cmp = [&](std::uint64_t p) { return cmp(v, pattern_value(cfg, p)); };
    std::uint64_t result;
    if (value_cmp(lo) <= 0) {
        result = lo;  // no underflow: (0, minpos] lands on minpos
    } else if (value_cmp(hi) >= 0) {
        result = hi;  // no overflow
    } else {
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            const int c = value_cmp(mid);
            if (c == 0) {
                lo = hi = mid;
                break;
            }
            (c > 0 ? lo : hi) = mid;
        }
        if (lo == hi) {
            result = lo;  // exactly representable
        } else {
            const int c = cmp(v, tie_point(cfg, lo));
            if (c < 0) result = lo;
            else if (c > 0) result = hi;
            else result = (lo & 1) == 0 ? lo : hi;  // tie: even pattern
        }
    }
    return negative ? twos_complement(cfg, result) : result;
}

std::uint64_t round_rational(const PositConfig& cfg, bool negative, const Num& num,
                             const Num& den) {
    if (num <= 0 || den <= 0) {
        throw std::invalid_argument("round_rational: need positive num/den");
    }
    // compare num/den against m*2^s by cross multiplication
    const auto dyadic_cmp = [&](const Dyadic& d) {
        Num lhs = num;
        Num rhs = d.num * den;
        if (d.exp2 >= 0) rhs <<= static_cast<unsigned>(d.exp2);
        else lhs <<= static_cast<unsigned>(-d.exp2);
        return lhs.compare(rhs);
    };
    const auto value_cmp = [&](std::uint64_t p) { return dyadic_cmp(pattern_value(cfg, p)); };
    std::uint64_t lo = cfg.minpos_pattern();
    std::uint64_t hi = cfg.maxpos_pattern();
    std::uint64_t result;
    if (value_cmp(lo) <= 0) {
        result = lo;
    } else if (value_cmp(hi) >= 0) {
        result = hi;
    } else {
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            const int c = value_cmp(mid);
            if (c == 0) {
                lo = hi = mid;
                break;
            }
            (c > 0 ? lo : hi) = mid;
        }
        if (lo == hi) {
            result = lo;
        } else {
            const int c = dyadic_cmp(tie_point(cfg, lo));
            if (c < 0) result = lo;
            else if (c > 0) result = hi;
            else result = (lo & 1) == 0 ? lo : hi;
        }
    }
    return negative ? twos_complement(cfg, result) : result;
}

PositBits oracle_mult(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    const PositConfig& cfg = a.config;
    if (a.is_nar() || b.is_nar()) return PositBits{cfg.nar_pattern(), cfg};
    if (a.is_zero() || b.is_zero()) return PositBits{0, cfg};
    const bool na = (a.bits >> (cfg.n - 1)) & 1;
    const bool nb = (b.bits >> (cfg.n - 1)) & 1;
    const Dyadic va = pattern_value(cfg, a.bits);
    const Dyadic vb = pattern_value(cfg, b.bits);
    const Dyadic prod{va.num * vb.num, va.exp2 + vb.exp2};
    return PositBits{round_dyadic(cfg, na != nb, prod), cfg};
}

PositBits oracle_add(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    const PositConfig& cfg = a.config;
    if (a.is_nar() || b.is_nar()) return PositBits{cfg.nar_pattern(), cfg};
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const bool na = (a.bits >> (cfg.n - 1)) & 1;
    const bool nb = (b.bits >> (cfg.n - 1)) & 1;
    Dyadic va = pattern_value(cfg, a.bits);
    Dyadic vb = pattern_value(cfg, b.bits);
    if (na) va.num = -va.num;
    if (nb) vb.num = -vb.num;
    const __int128 base = va.exp2 < vb.exp2 ? va.exp2 : vb.exp2;
    const Num sum = (va.num << static_cast<unsigned>(va.exp2 - base)) +
                    (vb.num << static_cast<unsigned>(vb.exp2 - base));
    if (sum == 0) return PositBits{0, cfg};
    const bool negative = sum < 0;
    return PositBits{round_dyadic(cfg, negative, Dyadic{abs(sum), base}), cfg};
}

PositBits oracle_div(const PositBits& a, const PositBits& b) {
    require_same_config(a, b);
    const PositConfig& cfg = a.config;
    if (a.is_nar() || b.is_nar() || b.is_zero()) {
        return PositBits{cfg.nar_pattern(), cfg};
    }
    if (a.is_zero()) return PositBits{0, cfg};
    const bool na = (a.bits >> (cfg.n - 1)) & 1;
    const bool nb = (b.bits >> (cfg.n - 1)) & 1;
    const Dyadic va = pattern_value(cfg, a.bits);
    const Dyadic vb = pattern_value(cfg, b.bits);
    // (na * 2^ea) / (nb * 2^eb): fold the exponent gap into one side
    Num num = va.num;
    Num den = vb.num;
    const __int128 d = va.exp2 - vb.exp2;
    if (d >= 0) num <<= static_cast<unsigned>(d);
    else den <<= static_cast<unsigned>(-d);
    return PositBits{round_rational(cfg, na != nb, num, den), cfg};
}

}  // namespace posit::oracle
