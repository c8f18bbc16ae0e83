#include "posit/decode.hpp"

#include <bit>
#include <cmath>

#include "posit/encode.hpp"

namespace posit {

UnpackedPosit decode(const PositBits& p) {
    const PositConfig& cfg = p.config;
    const int n = cfg.n;
    const int es = cfg.es;
    // n-1 low bits hold everything below the sign
    const std::uint64_t low_mask = (std::uint64_t{1} << (n - 1)) - 1;

    UnpackedPosit u;
    const std::uint64_t low = p.bits & low_mask;
    const bool nzero = low != 0;  // OR-reduction of in[n-2:0]
    u.sign = (p.bits >> (n - 1)) & 1;
    u.is_zero = !u.sign && !nzero;
    u.is_nar = u.sign && !nzero;
    if (u.is_zero || u.is_nar) return u;

    // two's complement of the input, so the fields describe the magnitude
    const std::uint64_t twos = (u.sign ? ~low + 1 : low) & low_mask;
    const bool rc = (twos >> (n - 2)) & 1;  // regime of ones vs zeros
    const std::uint64_t inv = (rc ? ~twos : twos) & low_mask;
    // leading zero count over the n-1 bit register; inv's MSB is always 0,
    // so 1 <= zc <= n-1
    const int zc = (n - 1) - std::bit_width(inv);

    // shift the regime out of the low n-3 bits, leaving exponent then
    // fraction left-aligned (truncated exponent bits read as zero)
    const int tmp_width = n - 3;
    const std::uint64_t tmp_mask =
        tmp_width == 0 ? 0 : (std::uint64_t{1} << tmp_width) - 1;
    const std::uint64_t tmp =
        tmp_width == 0 ? 0 : ((twos & tmp_mask) << (zc - 1)) & tmp_mask;

    u.exponent_e = es == 0 ? 0 : static_cast<std::int64_t>(tmp >> (tmp_width - es));
    const int frac_low = n - es - 3;  // fraction bits below the hidden bit
    const std::uint64_t frac_mask =
        frac_low == 0 ? 0 : (std::uint64_t{1} << frac_low) - 1;
    u.fraction = (std::uint64_t{1} << frac_low) | (tmp & frac_mask);
    u.regime_k = rc ? zc - 1 : -zc;
    return u;
}

ExactValue to_exact(const PositBits& p) {
    if (p.is_nar()) return ExactValue::make_nar();
    if (p.is_zero()) return ExactValue::zero();
    const UnpackedPosit u = decode(p);
    const ScaleInt scale =
        static_cast<ScaleInt>(u.regime_k) * p.config.useed_exponent() +
        u.exponent_e - (p.config.n - p.config.es - 3);
    return ExactValue::make(u.sign, BigInt(u.fraction), scale);
}

std::vector<std::pair<std::uint64_t, double>> enumerate_values(const PositConfig& cfg) {
    if (cfg.n > 16) {
        throw std::length_error("enumerate_values: 2^" + std::to_string(cfg.n) +
                                " patterns exceed the n <= 16 enumeration bound");
    }
    std::vector<std::pair<std::uint64_t, double>> table;
    table.reserve(std::size_t{1} << cfg.n);
    for (std::uint64_t pat = 0; pat <= cfg.pattern_mask(); ++pat) {
        table.emplace_back(pat, to_binary64(PositBits{pat, cfg}));
    }
    return table;
}

}  // namespace posit
