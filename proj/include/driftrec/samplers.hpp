#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "driftrec/image.hpp"
#include "driftrec/rng.hpp"
#include "driftrec/score_model.hpp"
#include "driftrec/sde.hpp"

namespace driftrec {

enum class SamplerKind { EulerMaruyama, EulerHeun, ProbabilityFlowODE };

std::string to_string(SamplerKind k);
/// Accepts "em", "heun", "ode" and the full names. Throws ConfigError.
SamplerKind parse_sampler_kind(std::string_view s);

struct SamplerConfig {
  SamplerKind kind = SamplerKind::EulerMaruyama;
  std::size_t n_steps = 100;
  double atol = 1e-3;
  double rtol = 1e-3;
  std::uint64_t seed = 0;
  bool clamp_output = true;      // clamp to [0, 1] once, after integration
  bool disable_noise = false;    // z = 0 for the initial state and every increment
  bool keep_trajectory = false;  // store the state at every accepted grid point

  /// Throws ConfigError.
  void validate() const;
};

struct SampleResult {
  ImageField x_hat;
  std::size_t nfe = 0;
  std::vector<ImageField> trajectory;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

/// x_T = y + sigma_T z.
ImageField init_reverse(const ImageField& y, const SdeConfig& sde, Rng& rng);
/// -f(x_t, y, t) + g(t)^2 * score, score being the unscaled score S.
ImageField reverse_drift(const ImageField& x_t, const ImageField& y, double t, const ImageField& score,
                         const SdeConfig& sde);

/// Reverse SDE on a uniform grid from T to t_eps, one model call per step.
SampleResult euler_maruyama(const ImageField& y, const ScoreModel& model, const SdeConfig& sde,
                            const SamplerConfig& cfg);
/// Stochastic Heun, two model calls per step.
SampleResult euler_heun(const ImageField& y, const ScoreModel& model, const SdeConfig& sde, const SamplerConfig& cfg);
/// Probability-flow ODE dx/dt = f - g^2 S / 2 with adaptive Dormand-Prince 5(4).
SampleResult probability_flow_ode(const ImageField& y, const ScoreModel& model, const SdeConfig& sde,
                                  const SamplerConfig& cfg);
/// Dispatches on cfg.kind.
SampleResult sample(const ImageField& y, const ScoreModel& model, const SdeConfig& sde, const SamplerConfig& cfg);

}  // namespace driftrec
