#include "posit/verify.hpp"

#include <random>

#include "posit/arith.hpp"
#include "posit/multiply.hpp"
#include "posit/oracle.hpp"

namespace posit::oracle {

namespace {

constexpr std::size_t kMismatchCap = 100;

void check_pair(const PositConfig& cfg, VerifyOp op, std::uint64_t pa, std::uint64_t pb,
                VerifyReport& report) {
    const PositBits a{pa, cfg};
    const PositBits b{pb, cfg};
    const PositBits got = op == VerifyOp::mul ? posit_mult(a, b) : posit_add(a, b);
    const PositBits expected = op == VerifyOp::mul ? oracle_mult(a, b) : oracle_add(a, b);
    ++report.pairs_tested;
    if (got.bits != expected.bits && report.mismatches.size() < kMismatchCap) {
        report.mismatches.push_back({pa, pb, got.bits, expected.bits});
    }
}

std::string op_name(VerifyOp op) { return op == VerifyOp::mul ? "mul" : "add"; }

}  // namespace

std::vector<std::uint64_t> edge_patterns(const PositConfig& cfg) {
    const auto neg = [&](std::uint64_t p) { return (~p + 1) & cfg.pattern_mask(); };
    return {
        cfg.zero_pattern(),
        cfg.nar_pattern(),
        cfg.one_pattern(),
        neg(cfg.one_pattern()),
        cfg.maxpos_pattern(),
        neg(cfg.maxpos_pattern()),
        cfg.minpos_pattern(),
        neg(cfg.minpos_pattern()),
        cfg.one_pattern() + 1,  // 1 + ulp: exercises the tie-heavy band
    };
}

VerifyReport verify_exhaustive(const PositConfig& cfg, VerifyOp op) {
    if (cfg.n > 10) {
        throw std::length_error("verify_exhaustive: 4^" + std::to_string(cfg.n) +
                                " pairs exceed the n <= 10 bound");
    }
    VerifyReport report;
    report.config = cfg;
    report.op = op_name(op);
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = std::uint64_t{1} << cfg.n;
    for (std::uint64_t a = 0; a < count; ++a) {
        for (std::uint64_t b = 0; b < count; ++b) {
            check_pair(cfg, op, a, b, report);
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerifyReport verify_sampled(const PositConfig& cfg, VerifyOp op, std::uint64_t count,
                            std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("verify_sampled: count must be >= 1");
    VerifyReport report;
    report.config = cfg;
    report.op = op_name(op);
    const auto start = std::chrono::steady_clock::now();
    const auto edges = edge_patterns(cfg);
    for (std::uint64_t a : edges) {
        for (std::uint64_t b : edges) {
            check_pair(cfg, op, a, b, report);
        }
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t a = rng() & cfg.pattern_mask();
        const std::uint64_t b = rng() & cfg.pattern_mask();
        check_pair(cfg, op, a, b, report);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace posit::oracle
