#include "posit/nn.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "posit/activations.hpp"
#include "posit/decode.hpp"
#include "posit/encode.hpp"
#include "posit/multiply.hpp"

namespace posit::nn {

namespace {

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1p-53; }

// strictly inside (0,1), safe under log()
double uniform01_open(std::mt19937_64& rng) {
    return ((rng() >> 11) + 0.5) * 0x1p-53;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

OpCounters& op_counters() {
    thread_local OpCounters counters;
    return counters;
}

void NumericBackend::validate() const {
    if (activation == Activation::fast_sigmoid &&
        (kind != BackendKind::posit || cfg.es != 0)) {
        throw std::invalid_argument(
            "fast_sigmoid requires a pure posit backend with es=0");
    }
}

std::string NumericBackend::to_string() const {
    switch (kind) {
        case BackendKind::binary64: return "binary64";
        case BackendKind::binary32: return "binary32";
        case BackendKind::posit: {
            std::string s = "posit:" + std::to_string(cfg.n) + "," + std::to_string(cfg.es);
            if (activation == Activation::fast_sigmoid) s += ":fast";
            return s;
        }
        case BackendKind::hybrid:
            return "hybrid:" + std::to_string(cfg.n) + "," + std::to_string(cfg.es);
    }
    return "?";
}

NumericBackend NumericBackend::parse(std::string_view spec) {
    NumericBackend b;
    if (spec == "binary64") {
        b.kind = BackendKind::binary64;
        return b;
    }
    if (spec == "binary32") {
        b.kind = BackendKind::binary32;
        return b;
    }
    const auto fail = [&] {
        throw std::invalid_argument("bad backend spec '" + std::string(spec) +
                                    "' (want binary64 | binary32 | posit:n,es[:fast] | "
                                    "hybrid:n,es)");
    };
    std::string_view rest;
    if (spec.starts_with("posit:")) {
        b.kind = BackendKind::posit;
        rest = spec.substr(6);
    } else if (spec.starts_with("hybrid:")) {
        b.kind = BackendKind::hybrid;
        rest = spec.substr(7);
    } else {
        fail();
    }
    bool fast = false;
    if (rest.ends_with(":fast")) {
        fast = true;
        rest.remove_suffix(5);
    }
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) fail();
    int n = 0, es = -1;
    auto r1 = std::from_chars(rest.data(), rest.data() + comma, n);
    auto r2 = std::from_chars(rest.data() + comma + 1, rest.data() + rest.size(), es);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r2.ptr != rest.data() + rest.size()) {
        fail();
    }
    b.cfg = PositConfig(n, es);
    if (fast) {
        b.activation = Activation::fast_sigmoid;
    }
    b.validate();
    return b;
}

Dataset make_rings_dataset(std::size_t n_samples, double noise, std::uint64_t seed) {
    if (n_samples < 2 || n_samples % 2 != 0) {
        throw std::invalid_argument("make_rings_dataset: n_samples must be even, >= 2");
    }
    if (noise < 0.0) {
        throw std::invalid_argument("make_rings_dataset: noise must be >= 0");
    }
    std::mt19937_64 rng(seed);
    Dataset ds;
    ds.features.resize(n_samples);
    ds.labels.resize(n_samples);
    double max_abs = 1.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const int label = i % 2 == 0 ? 1 : 0;
        const double base = label ? 0.3 : 0.8;
        const double u1 = uniform01_open(rng);
        const double u2 = uniform01_open(rng);
        const double gauss =
            std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        const double r = base + noise * gauss;
        const double theta = 2.0 * std::numbers::pi * uniform01_open(rng);
        ds.features[i] = {r * std::cos(theta), r * std::sin(theta)};
        ds.labels[i] = label;
        max_abs = std::max({max_abs, std::abs(ds.features[i][0]),
                            std::abs(ds.features[i][1])});
    }
    if (max_abs > 1.0) {
        for (auto& f : ds.features) {
            f[0] /= max_abs;
            f[1] /= max_abs;
        }
    }
    return ds;
}

void save_dataset_csv(const Dataset& ds, std::ostream& out) {
    out << "x1,x2,label\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out << format_double(ds.features[i][0]) << ',' << format_double(ds.features[i][1])
            << ',' << ds.labels[i] << '\n';
    }
}

Dataset load_dataset_csv(std::istream& in) {
    Dataset ds;
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("x1,")) {
        throw std::invalid_argument("dataset csv: missing x1,x2,label header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::array<double, 2> f{};
        for (auto& v : f) {
            if (!std::getline(row, cell, ',')) {
                throw std::invalid_argument("dataset csv: short row");
            }
            v = std::stod(cell);
        }
        if (!std::getline(row, cell, ',')) {
            throw std::invalid_argument("dataset csv: short row");
        }
        ds.features.push_back(f);
        ds.labels.push_back(std::stoi(cell));
    }
    return ds;
}

MlpModel init_model(const std::vector<int>& layer_sizes, std::uint64_t seed) {
    if (layer_sizes.size() < 2) {
        throw std::invalid_argument("init_model: need at least input and output sizes");
    }
    for (int s : layer_sizes) {
        if (s < 1) throw std::invalid_argument("init_model: layer sizes must be >= 1");
    }
    MlpModel m;
    m.layer_sizes = layer_sizes;
    m.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const int fan_in = layer_sizes[l];
        const int fan_out = layer_sizes[l + 1];
        const double limit = std::sqrt(6.0 / (fan_in + fan_out));
        std::vector<double> w(static_cast<std::size_t>(fan_in) * fan_out);
        for (auto& x : w) x = (2.0 * uniform01(rng) - 1.0) * limit;
        m.weights.push_back(std::move(w));
        m.biases.emplace_back(fan_out, 0.0);
    }
    return m;
}

MlpModel cast_model(const MlpModel& m, const NumericBackend& backend) {
    backend.validate();
    MlpModel out = m;
    out.backend_desc = backend.to_string();
    const auto cast = [&](double v) -> double {
        switch (backend.kind) {
            case BackendKind::binary64: return v;
            case BackendKind::binary32:
            case BackendKind::hybrid: return static_cast<double>(static_cast<float>(v));
            case BackendKind::posit: return to_binary64(from_binary64(v, backend.cfg));
        }
        return v;
    };
    for (auto& layer : out.weights) {
        for (auto& w : layer) w = cast(w);
    }
    for (auto& layer : out.biases) {
        for (auto& b : layer) b = cast(b);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Backend scalar policies. The templated runner below only touches scalars
// through these, so a backend's arithmetic is the whole story of a run.
// ---------------------------------------------------------------------------

namespace {

struct Binary64Ops {
    using S = double;
    Activation act = Activation::exact_sigmoid;

    S load(double v) const { return v; }
    double readout(S v) const { return v; }
    S zero() const { return 0.0; }
    S one() const { return 1.0; }
    S add(S a, S b) const { return a + b; }
    S sub(S a, S b) const { return a - b; }
    S mul(S a, S b) const { return a * b; }
    S div(S a, S b) const { return a / b; }
    bool is_positive(S a) const { return a > 0.0; }
    S sigmoid(S z) const { return 1.0 / (1.0 + std::exp(-z)); }
    S hidden_act(S z) const {
        return act == Activation::relu ? (z > 0.0 ? z : 0.0) : sigmoid(z);
    }
    S affine(const S* x, int count, const S* w, int stride, S bias) const {
        S acc = 0.0;
        for (int i = 0; i < count; ++i) acc += x[i] * w[static_cast<std::size_t>(i) * stride];
        return acc + bias;
    }
};

struct Binary32Ops {
    using S = float;
    Activation act = Activation::exact_sigmoid;

    S load(double v) const { return static_cast<float>(v); }
    double readout(S v) const { return v; }
    S zero() const { return 0.0f; }
    S one() const { return 1.0f; }
    S add(S a, S b) const { return a + b; }
    S sub(S a, S b) const { return a - b; }
    S mul(S a, S b) const { return a * b; }
    S div(S a, S b) const { return a / b; }
    bool is_positive(S a) const { return a > 0.0f; }
    S sigmoid(S z) const { return 1.0f / (1.0f + std::exp(-z)); }
    S hidden_act(S z) const {
        return act == Activation::relu ? (z > 0.0f ? z : 0.0f) : sigmoid(z);
    }
    S affine(const S* x, int count, const S* w, int stride, S bias) const {
        S acc = 0.0f;
        for (int i = 0; i < count; ++i) acc += x[i] * w[static_cast<std::size_t>(i) * stride];
        return acc + bias;
    }
};

struct PositOps {
    using S = PositBits;
    PositConfig cfg;
    Activation act = Activation::exact_sigmoid;
    DotMode dot_mode = DotMode::sequential;

    // every crossing between posit and binary64 is counted; the purity test
    // checks the total against the exact number of boundary conversions a run
    // needs (materialization plus readouts), so an in-loop detour through
    // binary64 cannot hide
    S load(double v) const {
        ++op_counters().double_conversions;
        return from_binary64(v, cfg);
    }
    double readout(S v) const {
        ++op_counters().double_conversions;
        return to_binary64(v);
    }

    S zero() const { return PositBits{0, cfg}; }
    S one() const { return PositBits{cfg.one_pattern(), cfg}; }
    S add(S a, S b) const { return posit_add(a, b); }
    S sub(S a, S b) const { return posit_sub(a, b); }
    S mul(S a, S b) const { return posit_mult(a, b); }
    S div(S a, S b) const { return posit_div(a, b); }
    bool is_positive(S a) const { return !a.is_nar() && as_signed(a) > 0; }
    S sigmoid(S z) const {
        if (act == Activation::fast_sigmoid) {
            // applied literally, the bit trick would alias NaR to zero; the
            // network contract surfaces NaR instead
            if (z.is_nar()) return z;
            return fast_sigmoid(z);
        }
        ++op_counters().exact_sigmoid_evals;
        return exact_sigmoid(z);
    }
    S hidden_act(S z) const { return act == Activation::relu ? posit::relu(z) : sigmoid(z); }
    S affine(const S* x, int count, const S* w, int stride, S bias) const {
        if (dot_mode == DotMode::quire) {
            Quire q(cfg);
            for (int i = 0; i < count; ++i) q.fma(x[i], w[static_cast<std::size_t>(i) * stride]);
            q.fma(bias, one());
            return q.to_posit();
        }
        S acc = zero();
        for (int i = 0; i < count; ++i) {
            acc = add(acc, mul(x[i], w[static_cast<std::size_t>(i) * stride]));
        }
        return add(acc, bias);
    }
};

template <class Ops>
struct TypedModel {
    using S = typename Ops::S;
    std::vector<int> sizes;
    std::vector<std::vector<S>> W;
    std::vector<std::vector<S>> B;
};

template <class Ops>
TypedModel<Ops> materialize(const Ops& ops, const MlpModel& m) {
    TypedModel<Ops> t;
    t.sizes = m.layer_sizes;
    for (std::size_t l = 0; l < m.weights.size(); ++l) {
        std::vector<typename Ops::S> w;
        w.reserve(m.weights[l].size());
        for (double v : m.weights[l]) w.push_back(ops.load(v));
        t.W.push_back(std::move(w));
        std::vector<typename Ops::S> b;
        b.reserve(m.biases[l].size());
        for (double v : m.biases[l]) b.push_back(ops.load(v));
        t.B.push_back(std::move(b));
    }
    return t;
}

// forward pass storing every activation; a[0] is the input layer
template <class Ops>
void forward_typed(const Ops& ops, const TypedModel<Ops>& t,
                   const std::vector<typename Ops::S>& x,
                   std::vector<std::vector<typename Ops::S>>& a) {
    const std::size_t layers = t.W.size();
    a.assign(layers + 1, {});
    a[0] = x;
    for (std::size_t l = 0; l < layers; ++l) {
        const int in = t.sizes[l];
        const int out = t.sizes[l + 1];
        a[l + 1].resize(out, ops.zero());
        const bool last = l + 1 == layers;
        for (int j = 0; j < out; ++j) {
            const auto z = ops.affine(a[l].data(), in, &t.W[l][static_cast<std::size_t>(j)],
                                      out, t.B[l][static_cast<std::size_t>(j)]);
            // the output layer always squashes so predictions stay in [0,1]
            a[l + 1][static_cast<std::size_t>(j)] = last ? ops.sigmoid(z) : ops.hidden_act(z);
        }
    }
}

template <class Ops>
std::vector<double> forward_readout(const Ops& ops, const TypedModel<Ops>& t,
                                    const std::array<double, 2>& x) {
    std::vector<typename Ops::S> in;
    for (double v : x) in.push_back(ops.load(v));
    std::vector<std::vector<typename Ops::S>> a;
    forward_typed(ops, t, in, a);
    std::vector<double> out;
    for (const auto& v : a.back()) out.push_back(ops.readout(v));
    return out;
}

// derivative through the activation, computed from the activation output as
// s*(1-s) for sigmoids; relu keys off the sign of its output
template <class Ops>
typename Ops::S act_derivative(const Ops& ops, bool hidden, typename Ops::S out) {
    if (hidden && ops.act == Activation::relu) {
        return ops.is_positive(out) ? ops.one() : ops.zero();
    }
    return ops.mul(out, ops.sub(ops.one(), out));
}

template <class Ops>
TrainResult train_typed(const Ops& ops, const MlpModel& model, const Dataset& ds,
                        const NumericBackend& backend, std::uint64_t epochs, double lr) {
    using S = typename Ops::S;
    TypedModel<Ops> t = materialize(ops, model);
    const std::size_t layers = t.W.size();
    const std::size_t nsamples = ds.size();

    // constants enter backend arithmetic once, up front
    const S lr_s = ops.load(lr);
    const S n_s = ops.load(static_cast<double>(nsamples));
    const S two_s = ops.load(2.0);

    std::vector<std::vector<S>> xs(nsamples);
    std::vector<S> ys(nsamples);
    for (std::size_t i = 0; i < nsamples; ++i) {
        xs[i] = {ops.load(ds.features[i][0]), ops.load(ds.features[i][1])};
        ys[i] = ops.load(static_cast<double>(ds.labels[i]));
    }

    TrainRecord rec;
    rec.backend_desc = backend.to_string();
    std::vector<std::vector<S>> a;
    std::vector<std::vector<S>> gw(layers), gb(layers);
    std::vector<std::vector<S>> delta(layers + 1);

    for (std::uint64_t ep = 0; ep <= epochs; ++ep) {
        for (std::size_t l = 0; l < layers; ++l) {
            gw[l].assign(t.W[l].size(), ops.zero());
            gb[l].assign(t.B[l].size(), ops.zero());
        }
        S loss_sum = ops.zero();
        for (std::size_t i = 0; i < nsamples; ++i) {
            forward_typed(ops, t, xs[i], a);
            const S err = ops.sub(a[layers][0], ys[i]);
            loss_sum = ops.add(loss_sum, ops.mul(err, err));
            if (ep == epochs) continue;  // final pass records the loss only

            // output delta: 2*(pred-y) * s*(1-s)
            std::vector<S> d{ops.mul(ops.mul(two_s, err),
                                     act_derivative(ops, false, a[layers][0]))};
            for (std::size_t l = layers; l-- > 0;) {
                const int in = t.sizes[l];
                const int out = t.sizes[l + 1];
                for (int j = 0; j < out; ++j) {
                    const auto& dj = d[static_cast<std::size_t>(j)];
                    gb[l][static_cast<std::size_t>(j)] =
                        ops.add(gb[l][static_cast<std::size_t>(j)], dj);
                    for (int ii = 0; ii < in; ++ii) {
                        auto& g = gw[l][static_cast<std::size_t>(ii) * out + j];
                        g = ops.add(g, ops.mul(a[l][static_cast<std::size_t>(ii)], dj));
                    }
                }
                if (l == 0) break;
                std::vector<S> back(static_cast<std::size_t>(in), ops.zero());
                for (int ii = 0; ii < in; ++ii) {
                    const S s =
                        ops.affine(d.data(), out, &t.W[l][static_cast<std::size_t>(ii) * out],
                                   1, ops.zero());
                    back[static_cast<std::size_t>(ii)] =
                        ops.mul(s, act_derivative(ops, true, a[l][static_cast<std::size_t>(ii)]));
                }
                d = std::move(back);
            }
        }
        const double loss = ops.readout(ops.div(loss_sum, n_s));
        rec.losses.push_back(loss);
        if (std::isnan(loss)) rec.nar_epochs.push_back(ep);
        if (ep == epochs) break;

        // w -= lr * (grad_sum / N)
        for (std::size_t l = 0; l < layers; ++l) {
            for (std::size_t k = 0; k < t.W[l].size(); ++k) {
                t.W[l][k] = ops.sub(t.W[l][k], ops.mul(lr_s, ops.div(gw[l][k], n_s)));
            }
            for (std::size_t k = 0; k < t.B[l].size(); ++k) {
                t.B[l][k] = ops.sub(t.B[l][k], ops.mul(lr_s, ops.div(gb[l][k], n_s)));
            }
        }
    }

    TrainResult res;
    res.model = model;
    res.model.backend_desc = backend.to_string();
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t k = 0; k < t.W[l].size(); ++k) {
            res.model.weights[l][k] = ops.readout(t.W[l][k]);
        }
        for (std::size_t k = 0; k < t.B[l].size(); ++k) {
            res.model.biases[l][k] = ops.readout(t.B[l][k]);
        }
    }
    res.record = std::move(rec);
    return res;
}

// hybrid inference: products in binary32, additions in the posit config,
// activations on the posit accumulator
std::vector<double> hybrid_forward(const NumericBackend& backend, const MlpModel& m,
                                   const std::array<double, 2>& x) {
    const PositConfig& cfg = backend.cfg;
    std::vector<float> a(x.begin(), x.end());
    for (std::size_t l = 0; l < m.weights.size(); ++l) {
        const int in = m.layer_sizes[l];
        const int out = m.layer_sizes[l + 1];
        const bool last = l + 1 == m.weights.size();
        std::vector<float> next(static_cast<std::size_t>(out));
        for (int j = 0; j < out; ++j) {
            PositBits acc{0, cfg};
            for (int i = 0; i < in; ++i) {
                const float prod = a[static_cast<std::size_t>(i)] *
                                   static_cast<float>(m.weights[l][static_cast<std::size_t>(i) * out + j]);
                acc = posit_add(acc, from_binary64(prod, cfg));
            }
            acc = posit_add(
                acc, from_binary64(static_cast<float>(m.biases[l][static_cast<std::size_t>(j)]), cfg));
            const bool use_relu = !last && backend.activation == Activation::relu;
            const PositBits act = use_relu ? relu(acc) : exact_sigmoid(acc);
            next[static_cast<std::size_t>(j)] = static_cast<float>(to_binary64(act));
        }
        a = std::move(next);
    }
    return std::vector<double>(a.begin(), a.end());
}

template <class F>
auto with_backend(const NumericBackend& backend, F&& f) {
    backend.validate();
    switch (backend.kind) {
        case BackendKind::binary64: {
            Binary64Ops ops{backend.activation};
            return f(ops);
        }
        case BackendKind::binary32: {
            Binary32Ops ops{backend.activation};
            return f(ops);
        }
        case BackendKind::posit: {
            PositOps ops{backend.cfg, backend.activation, backend.dot_mode};
            return f(ops);
        }
        case BackendKind::hybrid:
            throw std::invalid_argument("hybrid backends are inference-only");
    }
    throw std::logic_error("unreachable backend kind");
}

}  // namespace

TrainResult train(const MlpModel& m, const Dataset& ds, const NumericBackend& backend,
                  std::uint64_t epochs, double lr) {
    if (lr <= 0.0) throw std::invalid_argument("train: lr must be positive");
    if (ds.size() == 0) throw std::invalid_argument("train: empty dataset");
    if (m.layer_sizes.front() != 2 || m.layer_sizes.back() != 1) {
        throw std::invalid_argument("train: model must map 2 features to 1 output");
    }
    return with_backend(backend, [&](const auto& ops) {
        return train_typed(ops, m, ds, backend, epochs, lr);
    });
}

std::vector<double> forward(const MlpModel& m, const std::array<double, 2>& x,
                            const NumericBackend& backend) {
    backend.validate();
    if (backend.kind == BackendKind::hybrid) return hybrid_forward(backend, m, x);
    return with_backend(backend, [&](const auto& ops) {
        const auto t = materialize(ops, m);
        return forward_readout(ops, t, x);
    });
}

EvalReport evaluate(const MlpModel& m, const Dataset& ds, const NumericBackend& backend) {
    backend.validate();
    EvalReport report;
    report.total = ds.size();

    const auto score = [&](std::size_t i, double pred) {
        const int label = ds.labels[i];
        ++report.class_total[static_cast<std::size_t>(label)];
        if (std::isnan(pred)) {
            ++report.nar_outputs;
            return;
        }
        const int decided = pred >= 0.5 ? 1 : 0;
        if (decided == label) {
            ++report.correct;
            ++report.class_correct[static_cast<std::size_t>(label)];
        }
    };

    if (backend.kind == BackendKind::hybrid) {
        for (std::size_t i = 0; i < ds.size(); ++i) {
            score(i, hybrid_forward(backend, m, ds.features[i])[0]);
        }
    } else {
        with_backend(backend, [&](const auto& ops) {
            const auto t = materialize(ops, m);
            for (std::size_t i = 0; i < ds.size(); ++i) {
                score(i, forward_readout(ops, t, ds.features[i])[0]);
            }
            return 0;
        });
    }
    report.accuracy =
        report.total == 0 ? 0.0 : static_cast<double>(report.correct) / report.total;
    return report;
}

void save_record_csv(const TrainRecord& rec, std::ostream& out) {
    out << "epoch,loss\n";
    for (std::size_t ep = 0; ep < rec.losses.size(); ++ep) {
        out << ep << ',' << format_double(rec.losses[ep]) << '\n';
    }
}

void save_model_json(const MlpModel& m, std::ostream& out) {
    nlohmann::json j;
    j["layer_sizes"] = m.layer_sizes;
    j["seed"] = m.seed;
    j["backend"] = m.backend_desc;
    j["weights"] = m.weights;
    j["biases"] = m.biases;
    if (m.backend_desc.starts_with("posit:")) {
        const NumericBackend b = NumericBackend::parse(m.backend_desc);
        const auto hex_of = [&](const std::vector<double>& vs) {
            std::vector<std::string> hx;
            hx.reserve(vs.size());
            for (double v : vs) hx.push_back(to_hex_string(from_binary64(v, b.cfg)));
            return hx;
        };
        nlohmann::json wh = nlohmann::json::array();
        nlohmann::json bh = nlohmann::json::array();
        for (const auto& layer : m.weights) wh.push_back(hex_of(layer));
        for (const auto& layer : m.biases) bh.push_back(hex_of(layer));
        j["weights_hex"] = std::move(wh);
        j["biases_hex"] = std::move(bh);
    }
    out << j.dump(2) << '\n';
}

MlpModel load_model_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    MlpModel m;
    j.at("layer_sizes").get_to(m.layer_sizes);
    j.at("seed").get_to(m.seed);
    j.at("backend").get_to(m.backend_desc);
    j.at("weights").get_to(m.weights);
    j.at("biases").get_to(m.biases);
    if (m.layer_sizes.size() < 2 || m.weights.size() != m.layer_sizes.size() - 1 ||
        m.biases.size() != m.weights.size()) {
        throw std::invalid_argument("model json: inconsistent layer shapes");
    }
    for (std::size_t l = 0; l + 1 < m.layer_sizes.size(); ++l) {
        const auto expect_w = static_cast<std::size_t>(m.layer_sizes[l]) *
                              static_cast<std::size_t>(m.layer_sizes[l + 1]);
        if (m.weights[l].size() != expect_w ||
            m.biases[l].size() != static_cast<std::size_t>(m.layer_sizes[l + 1])) {
            throw std::invalid_argument("model json: weight shape mismatch");
        }
    }
    return m;
}

}  // namespace posit::nn
