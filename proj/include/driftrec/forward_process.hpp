#pragma once

#include <cstdint>
#include <vector>

#include "driftrec/image.hpp"
#include "driftrec/rng.hpp"
#include "driftrec/score_model.hpp"
#include "driftrec/sde.hpp"

namespace driftrec {

/// Clean / corrupted image pair. Carries no record of how y was produced.
struct TrainingPair {
  ImageField clean;      // x0
  ImageField corrupted;  // y
};

struct PerturbedSample {
  ImageField x_t;
  ImageField z;
  double t = 0.0;
};

/// x_t = mu_t + sigma_t z with the given z.
PerturbedSample perturb(const TrainingPair& pair, double t, ImageField z, const SdeConfig& sde);
/// Draws z ~ N(0, I) and perturbs.
PerturbedSample sample_perturbation(const TrainingPair& pair, double t, const SdeConfig& sde, Rng& rng);

/// Score of the perturbation kernel: -(x_t - mu_t) / sigma_t^2.
ImageField analytic_score(const ImageField& x_t, const TrainingPair& pair, double t, const SdeConfig& sde);

/// One drawn training example for denoising score matching.
struct DsmExample {
  PerturbedSample sample;
  const ImageField* corrupted = nullptr;
  double sigma = 0.0;
};

/// Draws t ~ U[t_eps, T] and z for every pair. Pair i uses its own stream
/// derived from one key taken from `rng`, so the draws do not depend on
/// evaluation order.
std::vector<DsmExample> draw_dsm_examples(const std::vector<TrainingPair>& batch, const SdeConfig& sde, Rng& rng);

/// Per-element mean of ||S~ + z||^2 for one example.
double dsm_example_loss(const ImageField& scaled_output, const ImageField& z);
/// Per-element mean of ||S + z / sigma||^2 = ||S~ + z||^2 / sigma^2 (diagnostic only).
double dsm_example_loss_unscaled(const ImageField& scaled_output, const ImageField& z, double sigma);
/// d(batch loss)/d(S~) for one example of a batch of `batch_size`.
ImageField dsm_loss_gradient(const ImageField& scaled_output, const ImageField& z, std::size_t batch_size);

/// Mean over the batch of the per-element sigma-scaled DSM loss.
double dsm_loss(const ScoreModel& model, const std::vector<TrainingPair>& batch, const SdeConfig& sde, Rng& rng);
/// Same draws, unscaled objective (diagnostic).
double dsm_loss_unscaled(const ScoreModel& model, const std::vector<TrainingPair>& batch, const SdeConfig& sde,
                         Rng& rng);

/// Regression baseline: R(y) is the model evaluated on (y, y) at the dummy time t = 1.
ImageField regression_output(const ScoreModel& model, const ImageField& y);
double regression_example_loss(const ImageField& output, const ImageField& clean);
double regression_loss(const ScoreModel& model, const std::vector<TrainingPair>& batch);

inline constexpr double kRegressionTime = 1.0;

}  // namespace driftrec
