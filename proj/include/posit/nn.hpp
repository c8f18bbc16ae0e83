#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "posit/arith.hpp"
#include "posit/bits.hpp"

namespace posit::nn {

enum class BackendKind { binary64, binary32, posit, hybrid };
enum class Activation { exact_sigmoid, fast_sigmoid, relu };

/// Which scalar arithmetic a model runs under. `hybrid` performs the
/// multiplications in binary32 and the additions in the posit config.
struct NumericBackend {
    BackendKind kind = BackendKind::binary64;
    PositConfig cfg{};  // used by posit and hybrid
    Activation activation = Activation::exact_sigmoid;
    DotMode dot_mode = DotMode::sequential;

    /// fast_sigmoid is only meaningful for pure-posit es=0 backends.
    void validate() const;

    std::string to_string() const;

    /// binary64 | binary32 | posit:n,es[:fast] | hybrid:n,es
    static NumericBackend parse(std::string_view spec);
};

struct Dataset {
    std::vector<std::array<double, 2>> features;  // in [-1,1]^2
    std::vector<int> labels;                      // 1 = inner ring, 0 = outer

    std::size_t size() const { return features.size(); }
};

/// Two concentric noisy rings (inner radius 0.3 labeled 1, outer 0.8 labeled
/// 0), half the samples per class, rescaled into [-1,1]^2 when the noise
/// pushes a point outside. Deterministic per seed.
Dataset make_rings_dataset(std::size_t n_samples, double noise, std::uint64_t seed);

void save_dataset_csv(const Dataset& ds, std::ostream& out);
Dataset load_dataset_csv(std::istream& in);

/// Fully connected MLP. weights[l] is layer_sizes[l] x layer_sizes[l+1],
/// row-major (input index major); scalars are kept as binary64 at rest and
/// converted to the backend at the start of a run. `backend_desc` records
/// the format the stored scalars were last rounded to.
struct MlpModel {
    std::vector<int> layer_sizes;
    std::uint64_t seed = 0;
    std::string backend_desc = "binary64";
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
};

/// Xavier-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero biases,
/// deterministic per seed, in binary64.
MlpModel init_model(const std::vector<int>& layer_sizes, std::uint64_t seed);

/// Rounds every stored scalar to the backend's storage format (binary64 is
/// the identity; hybrid stores binary32 since its products run in binary32).
MlpModel cast_model(const MlpModel& m, const NumericBackend& backend);

struct TrainRecord {
    std::string backend_desc;
    std::vector<double> losses;             // epochs + 1 entries, epoch 0 first
    std::vector<std::uint64_t> nar_epochs;  // epochs whose loss read back NaR
};

struct TrainResult {
    MlpModel model;
    TrainRecord record;
};

/// Full-batch gradient descent with backpropagation and MSE loss. Every
/// parameter computation (products, sums, the s*(1-s) sigmoid derivative,
/// the 1/N mean, the lr scaling) runs in the backend's arithmetic; the
/// recorded losses are binary64 readouts of the backend MSE. Deterministic
/// for a fixed (model, dataset, backend, epochs, lr). Hybrid backends are
/// inference-only and rejected here.
TrainResult train(const MlpModel& m, const Dataset& ds, const NumericBackend& backend,
                  std::uint64_t epochs, double lr);

/// One forward pass; the readout is binary64 (NaR surfaces as NaN).
std::vector<double> forward(const MlpModel& m, const std::array<double, 2>& x,
                            const NumericBackend& backend);

struct EvalReport {
    std::size_t total = 0;
    std::size_t correct = 0;
    std::size_t nar_outputs = 0;
    double accuracy = 0.0;
    std::array<std::size_t, 2> class_total{};    // [label]
    std::array<std::size_t, 2> class_correct{};
};

/// Classification accuracy (prediction >= 0.5 reads as class 1). NaR outputs
/// are surfaced in the report and scored as wrong.
EvalReport evaluate(const MlpModel& m, const Dataset& ds, const NumericBackend& backend);

void save_record_csv(const TrainRecord& rec, std::ostream& out);

void save_model_json(const MlpModel& m, std::ostream& out);
MlpModel load_model_json(std::istream& in);

/// Dynamic tripwire for backend purity: the posit backend counts every value
/// crossing to or from binary64. A training run needs exactly the boundary
/// conversions (model/dataset/constant materialization plus the per-epoch
/// loss readout and the final weight readout) and nothing inside
/// forward/backward converts, so the total is exactly predictable from the
/// shapes; exact_sigmoid's documented binary64 evaluation is counted
/// separately.
struct OpCounters {
    std::uint64_t double_conversions = 0;
    std::uint64_t exact_sigmoid_evals = 0;
};
OpCounters& op_counters();

}  // namespace posit::nn
