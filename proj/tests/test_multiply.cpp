#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posit/multiply.hpp"
#include "posit/oracle.hpp"

using namespace posit;

namespace {

PositBits bits(std::uint64_t pattern, int n, int es) {
    return PositBits{pattern, PositConfig(n, es)};
}

void check_exhaustive_vs_oracle(const PositConfig& cfg) {
    const std::uint64_t count = std::uint64_t{1} << cfg.n;
    for (std::uint64_t a = 0; a < count; ++a) {
        for (std::uint64_t b = 0; b < count; ++b) {
            const PositBits pa{a, cfg};
            const PositBits pb{b, cfg};
            const auto got = posit_mult(pa, pb);
            const auto expected = oracle::oracle_mult(pa, pb);
            REQUIRE_MESSAGE(got.bits == expected.bits,
                            to_string(cfg) << " " << to_hex_string(pa) << " * "
                                           << to_hex_string(pb) << ": got "
                                           << to_hex_string(got) << " want "
                                           << to_hex_string(expected));
        }
    }
}

}  // namespace

TEST_CASE("multiplier spec examples <8,0>") {
    CHECK(posit_mult(bits(0x50, 8, 0), bits(0x50, 8, 0)).bits == 0x62);  // 1.5*1.5
    CHECK(posit_mult(bits(0x60, 8, 0), bits(0x60, 8, 0)).bits == 0x70);  // 2*2
    CHECK(posit_mult(bits(0x41, 8, 0), bits(0x50, 8, 0)).bits == 0x52);  // tie to even
    CHECK(posit_mult(bits(0x7F, 8, 0), bits(0x7F, 8, 0)).bits == 0x7F);  // saturate
    CHECK(posit_mult(bits(0x01, 8, 0), bits(0x01, 8, 0)).bits == 0x01);  // no underflow
}

TEST_CASE("multiplier exception and identity rules") {
    for (int es = 0; es <= 2; ++es) {
        const PositConfig cfg(8, es);
        const PositBits nar{cfg.nar_pattern(), cfg};
        const PositBits zero{0, cfg};
        const PositBits one{cfg.one_pattern(), cfg};
        CHECK(posit_mult(nar, zero).bits == cfg.nar_pattern());  // NaR dominates
        CHECK(posit_mult(zero, nar).bits == cfg.nar_pattern());
        CHECK(posit_mult(nar, one).bits == cfg.nar_pattern());
        CHECK(posit_mult(zero, one).bits == 0);
        for (std::uint64_t p = 0; p < 256; ++p) {
            const PositBits x{p, cfg};
            CHECK(posit_mult(x, one).bits == (x.is_nar() ? cfg.nar_pattern() : p));
        }
    }
    CHECK(posit_mult(bits(0x40, 8, 1), bits(0x40, 8, 1)).bits == 0x40);
}

TEST_CASE("multiplier trace fields") {
    const auto [r1, t1] = posit_mult_traced(bits(0x50, 8, 0), bits(0x50, 8, 0));
    CHECK(r1.bits == 0x62);
    CHECK(t1.ovf_m);  // 1.5 * 1.5 = 2.25 >= 2
    CHECK(t1.sf_mult == t1.sf_a + t1.sf_b + 1);

    const auto [r2, t2] = posit_mult_traced(bits(0x40, 8, 0), bits(0x40, 8, 0));
    CHECK(r2.bits == 0x40);
    CHECK(t2.sf_mult == 0);
    CHECK(!t2.round);
    CHECK(!t2.ovf_m);

    const auto [r3, t3] = posit_mult_traced(bits(0x7F, 8, 0), bits(0x7F, 8, 0));
    CHECK(r3.bits == 0x7F);
    CHECK(t3.ovf_reg);
    CHECK(!t3.round);  // rounding suppressed on regime overflow
}

TEST_CASE("trace invariants on random pairs") {
    const PositConfig cfg(16, 1);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        const PositBits a{rng() & cfg.pattern_mask(), cfg};
        const PositBits b{rng() & cfg.pattern_mask(), cfg};
        const auto [r, t] = posit_mult_traced(a, b);
        CHECK(t.sf_mult == t.sf_a + t.sf_b + (t.ovf_m ? 1 : 0));
        // exactly one normalization placement
        if (t.ovf_m) {
            CHECK(t.norm_frac == t.frac_mult);
        } else {
            CHECK(t.norm_frac == t.frac_mult << 1);
        }
        CHECK(r.bits == t.result);
    }
}

TEST_CASE("exhaustive oracle equivalence, 8-bit configs") {
    check_exhaustive_vs_oracle(PositConfig(8, 0));
    check_exhaustive_vs_oracle(PositConfig(8, 1));
    check_exhaustive_vs_oracle(PositConfig(8, 2));
}

TEST_CASE("exhaustive oracle equivalence, non-power-of-two widths") {
    check_exhaustive_vs_oracle(PositConfig(6, 0));
    check_exhaustive_vs_oracle(PositConfig(7, 1));
    check_exhaustive_vs_oracle(PositConfig(9, 0));
    check_exhaustive_vs_oracle(PositConfig(10, 2));
    check_exhaustive_vs_oracle(PositConfig(3, 0));
    check_exhaustive_vs_oracle(PositConfig(5, 2));
}

TEST_CASE("sampled oracle equivalence, wide configs") {
    for (const PositConfig cfg :
         {PositConfig(16, 1), PositConfig(32, 2), PositConfig(48, 3), PositConfig(64, 2),
          PositConfig(64, 0), PositConfig(33, 2)}) {
        std::mt19937_64 rng(1234);
        for (int i = 0; i < 20000; ++i) {
            const PositBits a{rng() & cfg.pattern_mask(), cfg};
            const PositBits b{rng() & cfg.pattern_mask(), cfg};
            const auto got = posit_mult(a, b);
            const auto expected = oracle::oracle_mult(a, b);
            REQUIRE_MESSAGE(got.bits == expected.bits,
                            to_string(cfg) << " " << to_hex_string(a) << " * "
                                           << to_hex_string(b));
        }
    }
}

TEST_CASE("commutativity and sign rule, exhaustive <8,1>") {
    const PositConfig cfg(8, 1);
    for (std::uint64_t a = 0; a < 256; ++a) {
        for (std::uint64_t b = a; b < 256; ++b) {
            const PositBits pa{a, cfg};
            const PositBits pb{b, cfg};
            const auto ab = posit_mult(pa, pb);
            const auto ba = posit_mult(pb, pa);
            CHECK(ab.bits == ba.bits);
            if (!pa.is_nar() && !pb.is_nar() && !pa.is_zero() && !pb.is_zero()) {
                const bool sa = a >> 7, sb = b >> 7;
                const bool sr = ab.bits >> 7;
                CHECK(sr == (sa != sb));
            }
        }
    }
}

TEST_CASE("mismatched configs are rejected") {
    CHECK_THROWS_AS(posit_mult(bits(0x40, 8, 0), bits(0x40, 8, 1)),
                    std::invalid_argument);
}
