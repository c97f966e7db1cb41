#pragma once

#include <cstddef>

#include "driftrec/image.hpp"
#include "driftrec/sde.hpp"

namespace driftrec {

/// Anything that estimates the sigma-scaled score S~(x_t, y, t) = sigma_t * grad log p_t(x_t | y).
/// The model only ever sees (x_t, y, t): no quality factor or other corruption metadata.
class ScoreModel {
 public:
  virtual ~ScoreModel() = default;
  virtual ImageField scaled_score(const ImageField& x_t, const ImageField& y, double t) const = 0;
};

/// S = S~ / sigma_t. The only place the two parameterizations are related.
ImageField unscale_score(ImageField scaled, double t, const SdeConfig& sde);
/// S~ = sigma_t * S.
ImageField scale_score(ImageField score, double t, const SdeConfig& sde);

/// Wraps a model and counts how many times it is evaluated.
class CountingScoreModel final : public ScoreModel {
 public:
  explicit CountingScoreModel(const ScoreModel& inner) : inner_(inner) {}

  ImageField scaled_score(const ImageField& x_t, const ImageField& y, double t) const override {
    ++calls_;
    return inner_.scaled_score(x_t, y, t);
  }
  std::size_t calls() const noexcept { return calls_; }

 private:
  const ScoreModel& inner_;
  mutable std::size_t calls_ = 0;
};

}  // namespace driftrec
