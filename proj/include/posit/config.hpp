#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace posit {

/// Format descriptor for an <n,es> posit. Patterns live in the low n bits of
/// a uint64_t, so n is bounded by one machine word (3 <= n <= 64); es may be
/// any width that leaves at least one regime-terminator bit (0 <= es <= n-3).
struct PositConfig {
    int n = 8;
    int es = 0;

    PositConfig() = default;

    PositConfig(int n_, int es_) : n(n_), es(es_) {
        if (n < 3 || n > 64) {
            throw std::invalid_argument("posit width n must be in [3, 64], got " +
                                        std::to_string(n));
        }
        if (es < 0 || es > n - 3) {
            throw std::invalid_argument("posit es must be in [0, n-3], got " +
                                        std::to_string(es));
        }
    }

    std::uint64_t pattern_mask() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    std::uint64_t zero_pattern() const { return 0; }

    /// The single exception pattern (1 followed by n-1 zeros).
    std::uint64_t nar_pattern() const { return std::uint64_t{1} << (n - 1); }

    /// Pattern of the value 1.0: 0b01 followed by zeros.
    std::uint64_t one_pattern() const { return std::uint64_t{1} << (n - 2); }

    std::uint64_t maxpos_pattern() const { return nar_pattern() - 1; }

    std::uint64_t minpos_pattern() const { return 1; }

    /// log2(useed) = 2^es. useed itself can exceed any machine word, so the
    /// library works with exponents throughout.
    std::int64_t useed_exponent() const { return std::int64_t{1} << es; }

    /// log2(maxpos) = (n-2) * 2^es; minpos is the reciprocal.
    std::int64_t max_scale() const { return (n - 2) * useed_exponent(); }

    /// Width of the decoded fraction register: hidden bit + up to n-es-3
    /// fraction bits (the longest fraction a pattern can carry).
    int frac_reg_width() const { return n - es - 2; }

    /// Signed register width needed for any regime value: ceil(log2 n) + 1.
    int regime_reg_width() const {
        return std::bit_width(static_cast<unsigned>(n - 1)) + 1;
    }

    friend bool operator==(const PositConfig&, const PositConfig&) = default;
};

inline std::string to_string(const PositConfig& cfg) {
    return "<" + std::to_string(cfg.n) + "," + std::to_string(cfg.es) + ">";
}

}  // namespace posit
