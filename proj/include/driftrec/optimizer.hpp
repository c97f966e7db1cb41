#pragma once

#include <cstdint>

#include "driftrec/rng.hpp"
#include "driftrec/score_net.hpp"

namespace driftrec {

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Adam with decoupled weight decay. Moment estimates live here; the step
/// counter lives in ScoreModelParams.
template <typename T>
class AdamW {
 public:
  explicit AdamW(const std::vector<TensorInfo>& layout, AdamWConfig cfg = {});

  /// Throws NumericalError (and leaves everything untouched) if any gradient
  /// is non-finite, DimensionError on layout mismatch.
  void step(ScoreModelParams<T>& params, const ParamSet<T>& grads, double lr, double weight_decay);

  const AdamWConfig& config() const noexcept { return cfg_; }
  const ParamSet<T>& first_moment() const noexcept { return m_; }
  const ParamSet<T>& second_moment() const noexcept { return v_; }
  /// Restores moments from a checkpoint.
  void set_state(ParamSet<T> m, ParamSet<T> v);

 private:
  AdamWConfig cfg_;
  ParamSet<T> m_, v_;
};

extern template class AdamW<float>;
extern template class AdamW<double>;

/// shadow <- decay * shadow + (1 - decay) * weights
template <typename T>
void ema_update(ScoreModelParams<T>& params, double decay);

/// Fresh weights with the shadow equal to them and step_count 0.
template <typename T>
ScoreModelParams<T> make_params(const ScoreNet<T>& net, Rng& rng);

}  // namespace driftrec
