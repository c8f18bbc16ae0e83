#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "posit/bits.hpp"
#include "posit/exact.hpp"

namespace posit {

/// Exact decode-align-add, then one shared rounding. NaR propagates; adding
/// zero is the identity.
PositBits posit_add(const PositBits& a, const PositBits& b);

/// posit_add(a, negate(b)).
PositBits posit_sub(const PositBits& a, const PositBits& b);

/// Correctly rounded exact-rational quotient. Division by zero gives NaR.
PositBits posit_div(const PositBits& a, const PositBits& b);

/// Raised when an accumulation would spill past the quire's carry-guard bits
/// (distinct from NaR, which is a value, not a resource limit).
struct QuireOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Wide fixed-point accumulator: 1 sign bit, 31 carry-guard bits, and
/// 4*2^es*(n-2) value bits split evenly around the binary point. Every
/// product of two finite posits of the config is representable exactly, and
/// at least 2^31 of them can be accumulated before the guard bits overflow.
class Quire {
public:
    explicit Quire(const PositConfig& cfg);

    /// Adds the exact product a*b; no rounding happens here.
    void fma(const PositBits& a, const PositBits& b);

    /// Sums another quire of the same config into this one (partial dot
    /// products computed independently can be combined this way).
    void merge(const Quire& other);

    /// Rounds once, with the shared encode rules. NaR anywhere forces NaR.
    PositBits to_posit() const;

    bool is_nar() const { return nar_; }
    const PositConfig& config() const { return cfg_; }

    /// Binary-point position: the accumulator holds multiples of 2^-frac_bits.
    std::int64_t frac_bits() const;

private:
    void check_capacity() const;

    PositConfig cfg_;
    BigInt acc_ = 0;
    bool nar_ = false;
};

enum class DotMode { sequential, quire };

/// Dot product of equal-length vectors. Quire mode accumulates the exact
/// products and rounds once at the end; sequential mode is the
/// posit_mult/posit_add chain in index order, rounding at every step.
PositBits dot(std::span<const PositBits> a, std::span<const PositBits> b, DotMode mode,
              const PositConfig& cfg);

}  // namespace posit
