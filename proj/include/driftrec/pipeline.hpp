#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "driftrec/checkpoint.hpp"
#include "driftrec/config.hpp"
#include "driftrec/dataset.hpp"
#include "driftrec/forward_process.hpp"
#include "driftrec/gaussian_oracle.hpp"
#include "driftrec/metrics.hpp"
#include "driftrec/optimizer.hpp"
#include "driftrec/samplers.hpp"

namespace driftrec {

/// Produces training pairs. The batch for a step depends only on the source's
/// seed and the step index.
class PairSource {
 public:
  virtual ~PairSource() = default;
  virtual std::vector<TrainingPair> batch(std::uint64_t step, std::size_t size) const = 0;
  virtual Shape shape() const = 0;
};

/// Random resized crops of in-memory images, JPEG-degraded on the fly.
class ImagePairSource final : public PairSource {
 public:
  /// qf = -1 draws qf ~ U{0..100} per example.
  ImagePairSource(std::vector<ImageField> images, std::size_t patch, int qf, ChromaSubsampling subsampling,
                  std::uint64_t seed);
  std::vector<TrainingPair> batch(std::uint64_t step, std::size_t size) const override;
  Shape shape() const override { return {3, patch_, patch_}; }
  std::size_t image_count() const noexcept { return images_.size(); }

 private:
  std::vector<ImageField> images_;
  std::size_t patch_;
  int qf_;
  ChromaSubsampling subsampling_;
  Rng root_;
};

class GaussianPairSource final : public PairSource {
 public:
  GaussianPairSource(GaussianWorld world, std::uint64_t seed);
  std::vector<TrainingPair> batch(std::uint64_t step, std::size_t size) const override;
  Shape shape() const override { return world_.shape; }

 private:
  GaussianWorld world_;
  Rng root_;
};

struct TrainLogRow {
  std::size_t step = 0;
  double loss = 0.0;
  double smoothed = 0.0;
  double seconds = 0.0;
};

/// One network and optimizer. DriftRec mode minimizes the sigma-scaled DSM
/// loss; baseline mode regresses x0 from (y, y) at t = 1.
class Trainer {
 public:
  using ForwardHook = std::function<void(std::span<const double> t)>;

  Trainer(TrainMode mode, const SdeConfig& sde, NetSpec spec, TrainingConfig cfg, std::uint64_t seed);

  /// Continues from a checkpoint of the same mode and spec.
  void resume(const Checkpoint& ckpt);
  /// One optimizer step; returns the batch loss before the update. On a
  /// non-finite loss or gradient throws NumericalError and changes nothing.
  double step(const PairSource& source);
  /// Called with the time of every example on every network call.
  void set_forward_hook(ForwardHook hook) { hook_ = std::move(hook); }

  std::size_t steps_done() const noexcept { return static_cast<std::size_t>(params_.step_count); }
  double learning_rate(std::size_t step) const;
  const ScoreModelParams<float>& params() const noexcept { return params_; }
  Checkpoint checkpoint() const;
  const ScoreNet<float>& net() const noexcept { return net_; }

 private:
  TrainMode mode_;
  const SdeConfig& sde_;
  ScoreNet<float> net_;
  TrainingConfig cfg_;
  Rng root_;
  ScoreModelParams<float> params_;
  AdamW<float> adam_;
  ForwardHook hook_;
};

/// x + (mean_c(y) - mean_c(x)) per channel.
ImageField color_correct(ImageField x, const ImageField& y);

struct RestoreOptions {
  SamplerConfig sampler;
  std::size_t n_average = 1;
  bool color_correct = false;
};

/// Loaded checkpoint ready for inference with its EMA weights.
class Restorer {
 public:
  explicit Restorer(const Checkpoint& ckpt);

  TrainMode mode() const noexcept { return mode_; }
  const SdeConfig& sde() const noexcept { return *sde_; }
  const NetScoreModel& model() const noexcept { return model_; }

  /// DriftRec: average of n_average sampler runs (sample k uses seed child k),
  /// optionally colour-corrected, clamped. Baseline: R(y), clamped; the
  /// options are ignored. Sampler divergence propagates.
  ImageField restore(const ImageField& y, const RestoreOptions& opt, std::uint64_t seed) const;
  /// The individual samples behind restore(), before averaging.
  std::vector<ImageField> samples(const ImageField& y, const RestoreOptions& opt, std::uint64_t seed) const;

 private:
  TrainMode mode_;
  std::unique_ptr<SdeConfig> sde_;
  NetScoreModel model_;
};

/// One way of corrupting a clean evaluation image.
struct Corruption {
  int qf = 0;           // reported in the qf column
  std::string tag;      // appended to method names when non-empty
  std::function<ImageField(const ImageField& clean, Rng& rng)> apply;
};

Corruption jpeg_corruption(int qf, ChromaSubsampling subsampling = ChromaSubsampling::k420);
/// Double compression with shifts drawn uniformly from {0..4}.
Corruption double_jpeg_corruption(int qf1, int qf2, ChromaSubsampling subsampling = ChromaSubsampling::k420);

struct NamedImage {
  std::string name;
  ImageField image;
};

/// For each image and corruption: a "jpeg" row for the corrupted input, then a
/// row per restorer (named by its mode). Images are processed in parallel;
/// every row depends only on (seed, image index, corruption index).
MetricsReport evaluate(const std::vector<NamedImage>& images, const std::vector<Corruption>& corruptions,
                       const std::vector<const Restorer*>& restorers, const RestoreOptions& opt, std::uint64_t seed);

/// Test split of the dataset, optionally truncated.
std::vector<NamedImage> load_split(const DatasetIndex& index, Split split, std::size_t max_images = 0);

struct TrainRunResult {
  Checkpoint checkpoint;
  std::vector<TrainLogRow> log;
  bool stopped_by_time = false;
};

/// Full training run from a config: writes <output_dir>/config.ini,
/// train_log.csv (step, loss, smoothed), train_timing.csv (step, seconds),
/// periodic checkpoint_<step>.drckpt and final checkpoint.drckpt. On a
/// non-finite loss writes last_good.drckpt and rethrows. `resume` continues
/// from a checkpoint.
TrainRunResult train_experiment(const ExperimentConfig& cfg, const std::filesystem::path* resume = nullptr,
                                const std::function<void(const TrainLogRow&)>& progress = {});

/// Restores every test image at every configured qf and writes
/// <output_dir>/eval.csv and eval_summary.csv.
MetricsReport evaluate_experiment(const ExperimentConfig& cfg, const Checkpoint& model,
                                  const Checkpoint* baseline = nullptr);

}  // namespace driftrec
