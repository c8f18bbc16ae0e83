// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Run everything, or a single criterion with --criterion N.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "posit/activations.hpp"
#include "posit/arith.hpp"
#include "posit/decode.hpp"
#include "posit/encode.hpp"
#include "posit/multiply.hpp"
#include "posit/nn.hpp"
#include "posit/oracle.hpp"
#include "posit/verify.hpp"

using namespace posit;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------- criterion 1
bool exhaustive_multiplier(std::string& detail) {
    const auto start = Clock::now();
    std::uint64_t total = 0, bad = 0;
    for (int es = 0; es <= 2; ++es) {
        const PositConfig cfg(8, es);
        const auto report = oracle::verify_exhaustive(cfg, oracle::VerifyOp::mul);
        total += report.pairs_tested;
        bad += report.mismatches.size();
    }
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << total << " pairs over <8,0> <8,1> <8,2>, " << bad << " mismatches, "
       << elapsed << " s";
    detail = os.str();
    return bad == 0 && total == 3 * 65536ull && elapsed < 30.0;
}

// ---------------------------------------------------------------- criterion 2
bool sampled_multiplier(std::string& detail) {
    const auto start = Clock::now();
    std::uint64_t total = 0, bad = 0;
    for (const PositConfig cfg : {PositConfig(16, 1), PositConfig(32, 2)}) {
        const auto report =
            oracle::verify_sampled(cfg, oracle::VerifyOp::mul, 1000000, 42);
        total += report.pairs_tested;
        bad += report.mismatches.size();
    }
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << total << " pairs over <16,1> <32,2> incl. edge cross, " << bad
       << " mismatches, " << elapsed << " s";
    detail = os.str();
    return bad == 0 && total == 2 * (1000000ull + 81) && elapsed < 60.0;
}

// ---------------------------------------------------------------- criterion 3
bool exhaustive_adder(std::string& detail) {
    std::uint64_t total = 0, bad = 0;
    for (int es = 0; es <= 2; ++es) {
        const auto report =
            oracle::verify_exhaustive(PositConfig(8, es), oracle::VerifyOp::add);
        total += report.pairs_tested;
        bad += report.mismatches.size();
    }
    std::ostringstream os;
    os << total << " pairs, " << bad << " mismatches";
    detail = os.str();
    return bad == 0 && total == 3 * 65536ull;
}

// ---------------------------------------------------------------- criterion 4
bool comparison_as_integer(std::string& detail) {
    std::uint64_t checked = 0, bad = 0;
    for (int es : {0, 2}) {
        const PositConfig cfg(8, es);
        for (std::uint64_t a = 0; a < 256; ++a) {
            for (std::uint64_t b = 0; b < 256; ++b) {
                const PositBits pa{a, cfg}, pb{b, cfg};
                if (pa.is_nar() || pb.is_nar()) continue;
                const double va = to_binary64(pa), vb = to_binary64(pb);
                const auto value_order = va < vb ? -1 : (va > vb ? 1 : 0);
                const auto int_order =
                    as_signed(pa) < as_signed(pb) ? -1 : (as_signed(pa) > as_signed(pb) ? 1 : 0);
                const auto cmp = compare(pa, pb);
                const int cmp_order = cmp == std::partial_ordering::less
                                          ? -1
                                          : (cmp == std::partial_ordering::greater ? 1 : 0);
                ++checked;
                if (value_order != int_order || value_order != cmp_order) ++bad;
            }
        }
    }
    std::ostringstream os;
    os << checked << " non-NaR pairs over <8,0> <8,2>, " << bad << " exceptions";
    detail = os.str();
    return bad == 0;
}

// ---------------------------------------------------------------- criterion 5
// exhaustively measured once and frozen; see also tests/test_activations.cpp
constexpr double kFastSigmoidMaxErr = 0.060664021611295804;

bool fast_sigmoid_study(std::string& detail) {
    const PositConfig cfg(8, 0);
    if (to_binary64(fast_sigmoid(PositBits{0, cfg})) != 0.5) {
        detail = "sigma_fast(0) != 0.5";
        return false;
    }
    double prev = -1.0, max_err = 0.0;
    bool ok = true;
    for (int i = -127; i <= 127; ++i) {
        const PositBits p{static_cast<std::uint64_t>(i) & 0xFF, cfg};
        const double out = to_binary64(fast_sigmoid(p));
        ok = ok && out >= 0.0 && out <= 1.0 && out >= prev;
        prev = out;
        const double x = to_binary64(p);
        max_err = std::max(max_err, std::abs(out - 1.0 / (1.0 + std::exp(-x))));
    }
    std::ostringstream os;
    os << "range/monotone ok=" << ok << ", max|fast-sigma|=" << max_err
       << " (pinned " << kFastSigmoidMaxErr << ")";
    detail = os.str();
    return ok && std::abs(max_err - kFastSigmoidMaxErr) < 1e-12;
}

// ---------------------------------------------------------------- criterion 6
bool quire_single_rounding(std::string& detail) {
    const PositConfig cfg(16, 1);
    std::mt19937_64 rng(20240);
    std::uint64_t bad = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t len = 1 + rng() % 1024;
        Quire q(cfg);
        ExactValue exact = ExactValue::zero();
        for (std::size_t i = 0; i < len; ++i) {
            PositBits x{rng() & cfg.pattern_mask(), cfg};
            PositBits y{rng() & cfg.pattern_mask(), cfg};
            if (x.is_nar()) x = PositBits{0, cfg};
            if (y.is_nar()) y = PositBits{0, cfg};
            q.fma(x, y);
            exact = exact_add(exact, exact_mul(to_exact(x), to_exact(y)));
        }
        if (q.to_posit().bits != encode(exact, cfg).bits) ++bad;
    }
    std::ostringstream os;
    os << "1000 random <16,1> dot products (len 1..1024), " << bad << " mismatches";
    detail = os.str();
    return bad == 0;
}

// ---------------------------------------------------------------- criterion 7
double loss_of(const nn::MlpModel& m, const nn::Dataset& ds, const nn::NumericBackend& be) {
    double sum = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double p = nn::forward(m, ds.features[i], be)[0];
        sum += (p - ds.labels[i]) * (p - ds.labels[i]);
    }
    return sum / static_cast<double>(ds.size());
}

bool gradient_check(std::string& detail) {
    const auto ds = nn::make_rings_dataset(16, 0.05, 11);
    const auto be = nn::NumericBackend::parse("binary64");
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto m = nn::init_model({2, 4, 8, 1}, seed);
        const auto stepped = nn::train(m, ds, be, 1, 1.0).model;
        const double h = 1e-6;
        double dot_bb = 0, dot_ff = 0, dot_diff = 0;
        for (std::size_t l = 0; l < m.weights.size(); ++l) {
            for (std::size_t k = 0; k < m.weights[l].size(); ++k) {
                auto up = m, down = m;
                up.weights[l][k] += h;
                down.weights[l][k] -= h;
                const double fd = (loss_of(up, ds, be) - loss_of(down, ds, be)) / (2 * h);
                const double bp = m.weights[l][k] - stepped.weights[l][k];
                dot_bb += bp * bp;
                dot_ff += fd * fd;
                dot_diff += (bp - fd) * (bp - fd);
            }
        }
        const double rel =
            std::sqrt(dot_diff) / std::max({std::sqrt(dot_bb), std::sqrt(dot_ff), 1e-12});
        worst = std::max(worst, rel);
    }
    std::ostringstream os;
    os << "20 models, worst relative error " << worst;
    detail = os.str();
    return worst < 1e-4;
}

// ---------------------------------------------------------------- criterion 8
struct TrainCase {
    const char* backend;
    double threshold;
    bool below;  // final loss must be below (or above) the threshold
};

bool training_study(std::string& detail) {
    const auto ds = nn::make_rings_dataset(500, 0.05, 7);
    const auto model = nn::init_model({2, 4, 8, 1}, 1);
    const TrainCase cases[] = {
        {"binary64", 0.01, true},   {"binary32", 0.01, true},
        {"posit:32,2", 0.01, true}, {"posit:16,1", 0.01, true},
        {"posit:12,0:fast", 0.05, true}, {"posit:16,0:fast", 0.05, true},
        {"posit:8,0:fast", 0.1, false},
    };
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
        const auto be = nn::NumericBackend::parse(c.backend);
        const auto result = nn::train(model, ds, be, 2500, 5.0);
        const double final_loss = result.record.losses.back();
        const bool ok = c.below ? final_loss < c.threshold : final_loss > c.threshold;
        all_ok = all_ok && ok;
        os << c.backend << "=" << final_loss << (ok ? " ok" : " BAD") << "  ";
        std::cerr << "  [c8] " << c.backend << " final loss " << final_loss << "\n";
    }
    detail = os.str();
    return all_ok;
}

// ---------------------------------------------------------------- criterion 9
bool inference_study(std::string& detail) {
    const auto b64 = nn::NumericBackend::parse("binary64");

    // default rings
    const auto ds = nn::make_rings_dataset(500, 0.05, 7);
    const auto trained = nn::train(nn::init_model({2, 4, 8, 1}, 1), ds, b64, 2500, 5.0).model;
    const double acc_b64 = nn::evaluate(trained, ds, b64).accuracy;

    const auto p8 = nn::NumericBackend::parse("posit:8,0:fast");
    const auto cast8 = nn::cast_model(trained, p8);
    const double acc_p8 = nn::evaluate(cast8, ds, p8).accuracy;

    // noisy variant: hybrid additions against the pure posit pipeline. Seed 5
    // gives a model whose <8,0> quantization visibly costs accuracy, which is
    // the regime the hybrid scheme exists for.
    const auto noisy = nn::make_rings_dataset(500, 0.15, 7);
    const auto trained_n =
        nn::train(nn::init_model({2, 4, 8, 1}, 5), noisy, b64, 2500, 5.0).model;
    const auto pure = nn::NumericBackend::parse("posit:8,0");
    const auto hybrid = nn::NumericBackend::parse("hybrid:8,0");
    const double acc_pure = nn::evaluate(nn::cast_model(trained_n, pure), noisy, pure).accuracy;
    const double acc_hybrid =
        nn::evaluate(nn::cast_model(trained_n, hybrid), noisy, hybrid).accuracy;

    std::ostringstream os;
    os << "binary64=" << acc_b64 << " posit8=" << acc_p8 << " | noisy pure=" << acc_pure
       << " hybrid=" << acc_hybrid;
    detail = os.str();
    return acc_b64 >= 0.98 && std::abs(acc_b64 - acc_p8) <= 0.02 && acc_hybrid >= acc_pure;
}

// --------------------------------------------------------------- criterion 10
std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(POSIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool cli_determinism(std::string& detail) {
    const fs::path tmp = fs::temp_directory_path() / "posit_acceptance_c10";
    fs::create_directories(tmp);
    const std::string rec1 = (tmp / "rec1.csv").string();
    const std::string rec2 = (tmp / "rec2.csv").string();
    const std::string model1 = (tmp / "model1.json").string();
    const std::string model2 = (tmp / "model2.json").string();

    const std::vector<std::string> commands = {
        "convert --config 8,0 --from real 1.5 --to hex",
        "convert --config 16,1 --from hex 0x4000 --to fields",
        "mul --config 8,0 0x50 0x50 --trace",
        "verify --config 8,1 --op mul --samples 5000 --seed 42",
        "verify --config 8,0 --op add --exhaustive --json",
        "table --config 8,0",
        "sigmoid --config 8,0 --sweep",
        "sigmoid --config 8,0 --mode fast 0x00",
    };
    int checked = 0, bad = 0;
    for (const auto& c : commands) {
        const std::string a = run_cli(c);
        const std::string b = run_cli(c);
        ++checked;
        if (a != b || a.empty()) ++bad;
    }

    const std::string train_flags =
        "train --backend posit:12,0:fast --epochs 25 --samples 64 --lr 5.0 --seed 1 ";
    const std::string t1 =
        run_cli(train_flags + "--out " + rec1 + " --model-out " + model1);
    const std::string t2 =
        run_cli(train_flags + "--out " + rec2 + " --model-out " + model2);
    ++checked;
    if (t1 != t2 || t1.empty() || slurp(rec1) != slurp(rec2) ||
        slurp(model1) != slurp(model2)) {
        ++bad;
    }

    const std::string infer_flags =
        "infer --model " + model1 + " --backend posit:8,0:fast --samples 64";
    const std::string i1 = run_cli(infer_flags);
    const std::string i2 = run_cli(infer_flags);
    ++checked;
    if (i1 != i2 || i1.empty()) ++bad;

    std::ostringstream os;
    os << checked << " commands run twice, " << bad << " differed";
    detail = os.str();
    return bad == 0;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria = {
        {1, "exhaustive multiplier correctness (8-bit, all es)", exhaustive_multiplier},
        {2, "sampled multiplier correctness (<16,1>, <32,2>)", sampled_multiplier},
        {3, "adder correctness (8-bit, all es)", exhaustive_adder},
        {4, "comparison as signed integer order", comparison_as_integer},
        {5, "fast sigmoid range/monotonicity/pinned error", fast_sigmoid_study},
        {6, "quire single rounding", quire_single_rounding},
        {7, "gradient check vs central differences", gradient_check},
        {8, "training study across formats", training_study},
        {9, "quantized and hybrid inference study", inference_study},
        {10, "CLI determinism", cli_determinism},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "C" << c.id << " " << c.name
                  << ": " << detail << std::endl;
    }
    return all_ok ? 0 : 1;
}
