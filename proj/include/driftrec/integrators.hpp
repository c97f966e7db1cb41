#pragma once

// Fixed-step SDE and adaptive ODE integrators running backwards in time:
// a step from t to t - h applies x <- x + h * b(t, x) + g(t) * sqrt(h) * z.

#include <cstddef>
#include <functional>
#include <vector>

namespace driftrec::integrate {

using State = std::vector<double>;
/// Backward-time drift b(t, x), written into `out`.
using DriftFn = std::function<void(double t, const State& x, State& out)>;
using DiffusionFn = std::function<double(double t)>;
/// Fills `z` with the standard-normal increment for one step (zeros disables noise).
using NoiseFn = std::function<void(State& z)>;

/// Uniform grid t_i = t_start - i (t_start - t_end) / n, i = 0..n.
std::vector<double> uniform_grid(double t_start, double t_end, std::size_t n);

struct FixedStepResult {
  State x;
  std::size_t drift_evals = 0;
};

/// Throws DivergenceError naming the step once the state becomes non-finite.
FixedStepResult euler_maruyama(State x, double t_start, double t_end, std::size_t n_steps, const DriftFn& drift,
                               const DiffusionFn& g, const NoiseFn& noise);

/// Stochastic Heun: Euler predictor, trapezoidal corrector on drift and
/// diffusion, with the same Brownian increment in both stages.
FixedStepResult stochastic_heun(State x, double t_start, double t_end, std::size_t n_steps, const DriftFn& drift,
                                const DiffusionFn& g, const NoiseFn& noise);

struct OdeOptions {
  double atol = 1e-3;
  double rtol = 1e-3;
  double initial_step = 0.0;  // 0 -> (t_start - t_end) / 100
  double min_step = 1e-5;
  double max_step = 0.5;
  double safety = 0.9;
  std::size_t max_steps = 100000;
};

struct OdeResult {
  State x;
  std::size_t drift_evals = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Dormand-Prince 5(4) with FSAL for dx/d(-t) = b(t, x) from t_start down to t_end.
/// Throws NumericalError when the step would have to shrink below min_step.
OdeResult dormand_prince(State x, double t_start, double t_end, const DriftFn& drift, const OdeOptions& opt);

}  // namespace driftrec::integrate
