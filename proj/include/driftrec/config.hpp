#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "driftrec/jpeg.hpp"
#include "driftrec/samplers.hpp"
#include "driftrec/score_net.hpp"
#include "driftrec/sde.hpp"

namespace driftrec {

/// DriftRec learns the score of the drifting process; the baseline regresses
/// x0 from y directly with the same network at t = 1.
enum class TrainMode { kDriftRec, kBaseline };
std::string_view to_string(TrainMode m) noexcept;
TrainMode parse_train_mode(std::string_view s);

struct TrainingConfig {
  double lr = 1e-4;
  std::size_t warmup_steps = 0;  // linear ramp from 0
  /// From this step on the rate is lr * lr_drop_factor (0: never).
  std::size_t lr_drop_step = 0;
  double lr_drop_factor = 0.1;
  std::size_t batch_size = 8;
  std::size_t steps = 1000;
  double ema_decay = 0.999;
  double weight_decay = 0.0;
  /// Fixed quality factor, or -1 for qf ~ U{0..100} per example.
  int qf = -1;
  ChromaSubsampling subsampling = ChromaSubsampling::k420;
  std::size_t log_every = 50;
  std::size_t checkpoint_every = 0;  // 0: only the final checkpoint
  /// Wall-clock limit in seconds (0: none). Training stops after the first
  /// step past the limit, so runs with a limit are not reproducible.
  double max_seconds = 0.0;

  void validate() const;
};

struct RestorationConfig {
  std::size_t n_average = 1;
  bool color_correct = false;
};

struct EvaluationConfig {
  std::vector<int> qfs = {5, 10, 20, 30};
  std::size_t max_images = 0;  // 0: whole test split
  bool include_baseline = true;
};

struct ExperimentConfig {
  std::filesystem::path dataset;
  std::filesystem::path output_dir = "run";
  std::size_t patch_size = 32;
  std::uint64_t seed = 0;
  TrainMode mode = TrainMode::kDriftRec;
  SdeParams sde = reference_params(SdeKind::OUVE);
  NetSpec net;
  TrainingConfig training;
  SamplerConfig sampler;
  RestorationConfig restoration;
  EvaluationConfig evaluation;

  /// Throws ConfigError.
  void validate() const;
};

/// Parses INI text. Sections: experiment, sde, net, training, sampler,
/// restoration, evaluation. Unknown sections or keys throw ConfigError.
ExperimentConfig parse_config(std::istream& is);
/// Relative dataset and output paths are taken relative to the config file.
/// Also checks that the dataset directory exists when one is named.
ExperimentConfig load_config(const std::filesystem::path& path);
/// Writes every field; parse_config(write_config(c)) == c field by field.
void write_config(std::ostream& os, const ExperimentConfig& cfg);
std::string config_to_string(const ExperimentConfig& cfg);

}  // namespace driftrec
