#pragma once

#include <bit>
#include <cstdint>

#include "posit/config.hpp"
#include "posit/exact.hpp"

namespace posit::detail {

using u128 = unsigned __int128;

inline int bit_width_u128(u128 x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(x));
}

inline int countr_zero_u128(u128 x) {
    const auto lo = static_cast<std::uint64_t>(x);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

inline std::uint64_t to_u64(u128 x) { return static_cast<std::uint64_t>(x); }
inline std::uint64_t to_u64(const BigInt& x) { return x.convert_to<std::uint64_t>(); }

template <class U>
bool get_bit(const U& x, int i) {
    return static_cast<bool>((x >> i) & 1);
}

struct Window {
    std::uint64_t body = 0;  // the n-1 pattern bits below the sign
    bool g = false, r = false, s = false;
};

/// Slides the packed content register under the n-1 bit result window.
///
/// The conceptual register is `c` (C bits) followed by n-1 zero pad bits,
/// arithmetically shifted right by `s_amt` with `fill` replicated at the top
/// (that replication is what grows the regime run). s_amt <= n-2, so the pad
/// always absorbs the shift and no content bit is lost: everything below the
/// round bit lands in the sticky OR.
template <class U>
Window extract_window(const U& c, int C, int n, int s_amt, int fill) {
    const int body_width = n - 1;
    const int consumed = body_width - s_amt;  // content bits inside the body, >= 1
    Window w;
    U top = consumed >= C ? U(c << (consumed - C)) : U(c >> (C - consumed));
    w.body = to_u64(top);
    if (fill && s_amt > 0) {
        w.body |= ((std::uint64_t{1} << s_amt) - 1) << consumed;
    }
    const int gi = C - n + s_amt;  // bit index of the guard bit within c
    w.g = gi >= 0 && get_bit(c, gi);
    w.r = gi - 1 >= 0 && get_bit(c, gi - 1);
    w.s = gi - 1 > 0 && (c & ((U(1) << (gi - 1)) - 1)) != 0;
    return w;
}

/// Packs and rounds (-1)^sign * 2^(k*2^es + e) * (1 + frac/2^fw) to a pattern.
///
/// `frac` holds the fw fraction bits below the hidden bit; `sticky_extra`
/// marks nonzero weight below frac's LSB. Regime runs that cannot fit in the
/// word saturate to maxpos/minpos; otherwise the packed string is shifted
/// into place and rounded to nearest-even from LSB/G/R/S. U must hold
/// 2 + es + fw bits.
template <class U>
std::uint64_t pack_round(const PositConfig& cfg, bool sign, ScaleInt k, std::int64_t e,
                         const U& frac, int fw, bool sticky_extra) {
    const int n = cfg.n;
    const int es = cfg.es;
    std::uint64_t body;
    if (k >= n - 1) {
        body = cfg.maxpos_pattern();
    } else if (k <= -static_cast<ScaleInt>(n - 1)) {
        body = cfg.minpos_pattern();
    } else {
        const int ik = static_cast<int>(k);
        const int s_amt = ik >= 0 ? ik : -ik - 1;
        const int fill = ik >= 0 ? 1 : 0;
        const int C = 2 + es + fw;
        const U c = (U(1) << (fill ? 1 + es + fw : es + fw)) | (U(e) << fw) | frac;
        const Window w = extract_window(c, C, n, s_amt, fill);
        const bool lsb = w.body & 1;
        const bool round = w.g && (lsb || w.r || w.s || sticky_extra);
        body = w.body + round;
    }
    return sign ? (~body + 1) & cfg.pattern_mask() : body;
}

}  // namespace posit::detail
