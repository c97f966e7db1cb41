#pragma once

#include <vector>

#include "driftrec/forward_process.hpp"
#include "driftrec/image.hpp"
#include "driftrec/rng.hpp"
#include "driftrec/score_model.hpp"
#include "driftrec/sde.hpp"

namespace driftrec {

/// x0 ~ N(m0, diag(prior_var)), y = x0 + n, n ~ N(0, obs_sigma^2 I), laid out as an image of `shape`.
struct GaussianWorld {
  Shape shape;
  std::vector<double> prior_mean;
  std::vector<double> prior_var;
  double obs_sigma = 1.0;

  std::size_t dim() const noexcept { return shape.size(); }
  /// Throws ConfigError.
  void validate() const;
};

inline constexpr std::size_t kMaxWorldDim = 16;

/// Every element shares the same prior mean and variance.
GaussianWorld homogeneous_world(Shape shape, double mean, double var, double obs_sigma);

struct DiagGaussian {
  std::vector<double> mean;
  std::vector<double> var;
};

/// Conjugate posterior of x0 given y.
DiagGaussian posterior(const GaussianWorld& world, const ImageField& y);
/// Law of x_t given y: N(w mu_post + (1 - w) y, w^2 var_post + sigma_t^2).
DiagGaussian marginal(const GaussianWorld& world, const ImageField& y, double t, const SdeConfig& sde);
/// Exact grad log p_t(x_t | y).
ImageField oracle_score(const ImageField& x_t, const ImageField& y, double t, const GaussianWorld& world,
                        const SdeConfig& sde);
/// log p_t(x_t | y).
double oracle_log_density(const ImageField& x_t, const ImageField& y, double t, const GaussianWorld& world,
                          const SdeConfig& sde);

/// Draws (x0, y) from the world.
TrainingPair sample_pair(const GaussianWorld& world, Rng& rng);

/// Lowest achievable sigma-scaled DSM loss (per element, t ~ U[t_eps, T]):
/// the average over t of mean_i w^2 v_i / (w^2 v_i + sigma_t^2), v the posterior variance.
double bayes_dsm_floor(const GaussianWorld& world, const SdeConfig& sde);

/// ScoreModel returning sigma_t * oracle_score.
class OracleScoreModel final : public ScoreModel {
 public:
  OracleScoreModel(GaussianWorld world, const SdeConfig& sde);
  ImageField scaled_score(const ImageField& x_t, const ImageField& y, double t) const override;
  const GaussianWorld& world() const noexcept { return world_; }

 private:
  GaussianWorld world_;
  const SdeConfig& sde_;
};

}  // namespace driftrec
