// Command-line front end: format conversions, the multiplier (with trace),
// oracle verification sweeps, value tables, the fast-sigmoid study, and the
// neural-network training/inference case studies.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// Output on stdout is deterministic for fixed seeds; timing goes to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "posit/activations.hpp"
#include "posit/arith.hpp"
#include "posit/decode.hpp"
#include "posit/encode.hpp"
#include "posit/multiply.hpp"
#include "posit/nn.hpp"
#include "posit/oracle.hpp"
#include "posit/verify.hpp"

using namespace posit;

namespace {

PositConfig parse_config(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("config must be n,es (e.g. 8,0)");
    }
    int n = 0, es = -1;
    const auto r1 = std::from_chars(text.data(), text.data() + comma, n);
    const auto r2 =
        std::from_chars(text.data() + comma + 1, text.data() + text.size(), es);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r2.ptr != text.data() + text.size()) {
        throw std::invalid_argument("config must be n,es (e.g. 8,0)");
    }
    return PositConfig(n, es);
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_i128(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-v)
                                : static_cast<unsigned __int128>(v);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

std::string format_u128_hex(unsigned __int128 v) {
    if (v == 0) return "0x0";
    static const char* d = "0123456789ABCDEF";
    std::string out;
    while (v != 0) {
        out.push_back(d[static_cast<int>(v & 0xF)]);
        v >>= 4;
    }
    out += "x0";
    return {out.rbegin(), out.rend()};
}

std::string fraction_binary(const UnpackedPosit& u, const PositConfig& cfg) {
    const int fb = cfg.n - cfg.es - 3;
    std::string s = "1.";
    for (int i = fb - 1; i >= 0; --i) {
        s.push_back(((u.fraction >> i) & 1) ? '1' : '0');
    }
    if (fb == 0) s.pop_back();  // no fraction bits: just the hidden "1"
    return s;
}

int cmd_convert(const PositConfig& cfg, const std::string& from, const std::string& to,
                const std::string& value) {
    PositBits p{0, cfg};
    if (from == "hex" || from == "bin") {
        p = parse_pattern(value, cfg);
    } else {  // real
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("bad real literal '" + value + "'");
        }
        p = from_binary64(x, cfg);
    }
    if (to == "hex") {
        std::cout << to_hex_string(p) << '\n';
    } else if (to == "bin") {
        std::cout << to_bin_string(p) << '\n';
    } else if (to == "real") {
        std::cout << format_double(to_binary64(p)) << '\n';
    } else {  // fields
        const UnpackedPosit u = decode(p);
        if (u.is_nar) {
            std::cout << "NaR\n";
        } else if (u.is_zero) {
            std::cout << "zero\n";
        } else {
            std::cout << "sign=" << u.sign << " regime_k=" << u.regime_k;
            if (cfg.es > 0) std::cout << " exponent=" << u.exponent_e;
            std::cout << " fraction=" << fraction_binary(u, cfg)
                      << " value=" << format_double(to_binary64(p)) << '\n';
        }
    }
    return 0;
}

nlohmann::json trace_json(const MulTrace& t) {
    nlohmann::json j;
    j["sign"] = t.sign;
    j["z"] = t.z;
    j["inf"] = t.inf;
    j["sf_a"] = format_i128(t.sf_a);
    j["sf_b"] = format_i128(t.sf_b);
    j["frac_mult"] = format_u128_hex(t.frac_mult);
    j["ovf_m"] = t.ovf_m;
    j["norm_frac"] = format_u128_hex(t.norm_frac);
    j["sf_mult"] = format_i128(t.sf_mult);
    j["sf_sign"] = t.sf_sign;
    j["nzero"] = t.nzero;
    j["exp"] = t.exp_field;
    j["reg_tmp"] = format_i128(t.reg_tmp);
    j["reg"] = format_i128(t.reg_abs);
    j["ovf_reg"] = t.ovf_reg;
    j["reg_f"] = t.reg_f;
    j["ovf_regf"] = t.ovf_regf;
    j["exp_f"] = t.exp_f;
    j["shift_neg"] = t.shift_neg;
    j["shift_pos"] = t.shift_pos;
    j["lsb"] = t.lsb;
    j["g"] = t.g;
    j["r"] = t.r;
    j["s"] = t.s;
    j["round"] = t.round;
    return j;
}

int cmd_mul(const PositConfig& cfg, const std::string& a_text, const std::string& b_text,
            bool trace) {
    const PositBits a = parse_pattern(a_text, cfg);
    const PositBits b = parse_pattern(b_text, cfg);
    const auto [r, t] = posit_mult_traced(a, b);
    std::cout << to_hex_string(r) << " (" << format_double(to_binary64(r)) << ")\n";
    if (trace) {
        nlohmann::json j = trace_json(t);
        j["result"] = to_hex_string(r);
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const PositConfig& cfg, const std::string& op_name, bool exhaustive,
               std::uint64_t samples, std::uint64_t seed, bool as_json) {
    const oracle::VerifyOp op =
        op_name == "mul" ? oracle::VerifyOp::mul : oracle::VerifyOp::add;
    const oracle::VerifyReport report =
        exhaustive ? oracle::verify_exhaustive(cfg, op)
                   : oracle::verify_sampled(cfg, op, samples, seed);
    if (as_json) {
        nlohmann::json j;
        j["config"] = {{"n", cfg.n}, {"es", cfg.es}};
        j["op"] = report.op;
        j["pairs_tested"] = report.pairs_tested;
        j["passed"] = report.passed();
        nlohmann::json mm = nlohmann::json::array();
        for (const auto& m : report.mismatches) {
            mm.push_back({{"a", to_hex_string(PositBits{m.a, cfg})},
                          {"b", to_hex_string(PositBits{m.b, cfg})},
                          {"got", to_hex_string(PositBits{m.got, cfg})},
                          {"expected", to_hex_string(PositBits{m.expected, cfg})}});
        }
        j["mismatches"] = std::move(mm);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "config        " << to_string(cfg) << "\n"
                  << "op            " << report.op << "\n"
                  << "pairs_tested  " << report.pairs_tested << "\n"
                  << "mismatches    " << report.mismatches.size() << "\n"
                  << "result        " << (report.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& m : report.mismatches) {
            std::cout << "  " << to_hex_string(PositBits{m.a, cfg}) << " x "
                      << to_hex_string(PositBits{m.b, cfg}) << ": got "
                      << to_hex_string(PositBits{m.got, cfg}) << ", expected "
                      << to_hex_string(PositBits{m.expected, cfg}) << "\n";
        }
    }
    std::cerr << "elapsed: " << report.elapsed.count() << " s\n";
    return report.passed() ? 0 : 1;
}

int cmd_table(const PositConfig& cfg, const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        out = &file;
    }
    *out << "pattern,value\n";
    for (const auto& [pat, val] : enumerate_values(cfg)) {
        *out << to_hex_string(PositBits{pat, cfg}) << ',' << format_double(val) << '\n';
    }
    return 0;
}

int cmd_sigmoid(const PositConfig& cfg, const std::string& mode,
                const std::string& pattern, bool sweep, const std::string& out_path) {
    if (sweep) {
        if (cfg.es != 0) {
            throw std::invalid_argument("sigmoid --sweep needs an es=0 config");
        }
        if (cfg.n > 16) {
            throw std::invalid_argument("sigmoid --sweep is bounded at n <= 16");
        }
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw std::invalid_argument("cannot open " + out_path);
            out = &file;
        }
        *out << "input,fast,exact,abs_error\n";
        for (std::uint64_t pat = 0; pat <= cfg.pattern_mask(); ++pat) {
            const PositBits p{pat, cfg};
            const double x = to_binary64(p);
            const double fast = to_binary64(fast_sigmoid(p));
            const double exact = 1.0 / (1.0 + std::exp(-x));
            *out << format_double(x) << ',' << format_double(fast) << ','
                 << format_double(exact) << ',' << format_double(std::abs(fast - exact))
                 << '\n';
        }
        return 0;
    }
    if (pattern.empty()) {
        throw std::invalid_argument("sigmoid needs a pattern argument or --sweep");
    }
    const PositBits p = parse_pattern(pattern, cfg);
    const PositBits r = mode == "fast" ? fast_sigmoid(p) : exact_sigmoid(p);
    std::cout << to_hex_string(r) << " (" << format_double(to_binary64(r)) << ")\n";
    return 0;
}

nn::Dataset dataset_from_flag(const std::string& spec, std::size_t samples, double noise,
                              std::uint64_t data_seed) {
    if (spec == "auto") {
        return nn::make_rings_dataset(samples, noise, data_seed);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open dataset file " + spec);
    return nn::load_dataset_csv(in);
}

int cmd_train(const std::string& backend_spec, std::uint64_t epochs, double lr,
              std::uint64_t seed, const std::string& dataset_spec, std::size_t samples,
              double noise, std::uint64_t data_seed, const std::string& dot_mode,
              const std::string& out_path, const std::string& model_out) {
    auto backend = nn::NumericBackend::parse(backend_spec);
    backend.dot_mode = dot_mode == "quire" ? DotMode::quire : DotMode::sequential;
    const nn::Dataset ds = dataset_from_flag(dataset_spec, samples, noise, data_seed);
    const nn::MlpModel model = nn::init_model({2, 4, 8, 1}, seed);
    const nn::TrainResult result = nn::train(model, ds, backend, epochs, lr);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open " + out_path);
        nn::save_record_csv(result.record, out);
    }
    if (!model_out.empty()) {
        std::ofstream out(model_out);
        if (!out) throw std::invalid_argument("cannot open " + model_out);
        nn::save_model_json(result.model, out);
    }
    std::cout << "backend: " << result.record.backend_desc << "\n"
              << "epochs: " << epochs << "\n"
              << "final_loss: " << format_double(result.record.losses.back()) << "\n";
    if (!result.record.nar_epochs.empty()) {
        std::cout << "nar_epochs: " << result.record.nar_epochs.size() << "\n";
    }
    return 0;
}

int cmd_infer(const std::string& model_path, const std::string& backend_spec,
              const std::string& dataset_spec, std::size_t samples, double noise,
              std::uint64_t data_seed, const std::string& dot_mode) {
    std::ifstream in(model_path);
    if (!in) throw std::invalid_argument("cannot open model file " + model_path);
    const nn::MlpModel stored = nn::load_model_json(in);
    auto backend = nn::NumericBackend::parse(backend_spec);
    backend.dot_mode = dot_mode == "quire" ? DotMode::quire : DotMode::sequential;
    const nn::MlpModel model = nn::cast_model(stored, backend);
    const nn::Dataset ds = dataset_from_flag(dataset_spec, samples, noise, data_seed);
    const nn::EvalReport rep = nn::evaluate(model, ds, backend);
    std::cout << "backend: " << backend.to_string() << "\n"
              << "samples: " << rep.total << "\n"
              << "top1_accuracy: " << format_double(rep.accuracy) << " (" << rep.correct
              << "/" << rep.total << ")\n"
              << "class0: " << rep.class_correct[0] << "/" << rep.class_total[0] << "\n"
              << "class1: " << rep.class_correct[1] << "/" << rep.class_total[1] << "\n"
              << "nar_outputs: " << rep.nar_outputs << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"posit arithmetic toolbox"};
    app.require_subcommand(1);

    std::string config_text = "8,0";
    std::string from = "hex", to = "real", value;
    auto* convert = app.add_subcommand("convert", "convert between pattern and value forms");
    convert->add_option("--config", config_text, "posit config n,es")->required();
    convert->add_option("--from", from, "hex|bin|real")
        ->check(CLI::IsMember({"hex", "bin", "real"}));
    convert->add_option("--to", to, "hex|bin|real|fields")
        ->check(CLI::IsMember({"hex", "bin", "real", "fields"}));
    convert->add_option("value", value, "input value or pattern")->required();

    std::string mul_a, mul_b;
    bool mul_trace = false;
    auto* mul = app.add_subcommand("mul", "multiply two posit patterns");
    mul->add_option("--config", config_text, "posit config n,es")->required();
    mul->add_option("a", mul_a, "left pattern literal")->required();
    mul->add_option("b", mul_b, "right pattern literal")->required();
    mul->add_flag("--trace", mul_trace, "dump every datapath intermediate as JSON");

    std::string verify_op = "mul";
    bool exhaustive = false, verify_json = false;
    std::uint64_t samples = 1000000, seed = 42;
    auto* verify = app.add_subcommand("verify", "check an operation against the oracle");
    verify->add_option("--config", config_text, "posit config n,es")->required();
    verify->add_option("--op", verify_op, "mul|add")
        ->check(CLI::IsMember({"mul", "add"}));
    verify->add_flag("--exhaustive", exhaustive, "all 4^n ordered pairs (n <= 10)");
    verify->add_option("--samples", samples, "random pair count");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_flag("--json", verify_json, "emit the report as JSON");

    std::string out_path;
    auto* table = app.add_subcommand("table", "dump all patterns and values as CSV");
    table->add_option("--config", config_text, "posit config n,es (n <= 16)")->required();
    table->add_option("--out", out_path, "output file (default stdout)");

    std::string sig_mode = "fast", sig_pattern;
    bool sig_sweep = false;
    auto* sigmoid = app.add_subcommand("sigmoid", "fast/exact sigmoid evaluation");
    sigmoid->add_option("--config", config_text, "posit config n,es")->required();
    sigmoid->add_option("--mode", sig_mode, "fast|exact")
        ->check(CLI::IsMember({"fast", "exact"}));
    sigmoid->add_option("pattern", sig_pattern, "input pattern literal");
    sigmoid->add_flag("--sweep", sig_sweep, "CSV over every pattern (es=0, n <= 16)");
    sigmoid->add_option("--out", out_path, "output file (default stdout)");

    std::string backend_spec = "binary64", dataset_spec = "auto", dot_mode = "sequential";
    std::string record_out, model_out, model_path;
    std::uint64_t epochs = 2500, train_seed = 1, data_seed = 7;
    double lr = 5.0, noise = 0.05;
    std::size_t n_samples = 500;
    auto* train = app.add_subcommand("train", "train the rings classifier");
    train->add_option("--backend", backend_spec,
                      "binary64 | binary32 | posit:n,es[:fast] | hybrid:n,es");
    train->add_option("--epochs", epochs, "training epochs");
    train->add_option("--lr", lr, "learning rate");
    train->add_option("--seed", train_seed, "weight init seed");
    train->add_option("--dataset", dataset_spec, "auto or a csv file");
    train->add_option("--samples", n_samples, "auto dataset size");
    train->add_option("--noise", noise, "auto dataset radial noise");
    train->add_option("--data-seed", data_seed, "auto dataset seed");
    train->add_option("--dot", dot_mode, "sequential|quire")
        ->check(CLI::IsMember({"sequential", "quire"}));
    train->add_option("--out", record_out, "write epoch,loss CSV here");
    train->add_option("--model-out", model_out, "write the trained model JSON here");

    auto* infer = app.add_subcommand("infer", "evaluate a stored model");
    infer->add_option("--model", model_path, "model JSON file")->required();
    infer->add_option("--backend", backend_spec,
                      "binary64 | binary32 | posit:n,es[:fast] | hybrid:n,es");
    infer->add_option("--dataset", dataset_spec, "auto or a csv file");
    infer->add_option("--samples", n_samples, "auto dataset size");
    infer->add_option("--noise", noise, "auto dataset radial noise");
    infer->add_option("--data-seed", data_seed, "auto dataset seed");
    infer->add_option("--dot", dot_mode, "sequential|quire")
        ->check(CLI::IsMember({"sequential", "quire"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (convert->parsed()) {
            return cmd_convert(parse_config(config_text), from, to, value);
        }
        if (mul->parsed()) {
            return cmd_mul(parse_config(config_text), mul_a, mul_b, mul_trace);
        }
        if (verify->parsed()) {
            return cmd_verify(parse_config(config_text), verify_op, exhaustive, samples,
                              seed, verify_json);
        }
        if (table->parsed()) {
            return cmd_table(parse_config(config_text), out_path);
        }
        if (sigmoid->parsed()) {
            return cmd_sigmoid(parse_config(config_text), sig_mode, sig_pattern,
                               sig_sweep, out_path);
        }
        if (train->parsed()) {
            return cmd_train(backend_spec, epochs, lr, train_seed, dataset_spec,
                             n_samples, noise, data_seed, dot_mode, record_out,
                             model_out);
        }
        if (infer->parsed()) {
            return cmd_infer(model_path, backend_spec, dataset_spec, n_samples, noise,
                             data_seed, dot_mode);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
