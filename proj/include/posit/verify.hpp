#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "posit/bits.hpp"

namespace posit::oracle {

enum class VerifyOp { mul, add };

struct Mismatch {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t got = 0;
    std::uint64_t expected = 0;
};

struct VerifyReport {
    PositConfig config;
    std::string op;
    std::uint64_t pairs_tested = 0;
    std::vector<Mismatch> mismatches;  // capped at 100
    std::chrono::duration<double> elapsed{0};

    bool passed() const { return mismatches.empty(); }
};

/// Runs the implementation against the golden model on every ordered operand
/// pair. Bounded at n <= 10 (4^n pairs); larger configs raise a capacity
/// error.
VerifyReport verify_exhaustive(const PositConfig& cfg, VerifyOp op);

/// Seeded random operand pairs, always preceded by the full cross of the edge
/// patterns (zero, NaR, +-1, +-maxpos, +-minpos, 1+ulp).
VerifyReport verify_sampled(const PositConfig& cfg, VerifyOp op, std::uint64_t count,
                            std::uint64_t seed);

/// The edge patterns used by verify_sampled.
std::vector<std::uint64_t> edge_patterns(const PositConfig& cfg);

}  // namespace posit::oracle
