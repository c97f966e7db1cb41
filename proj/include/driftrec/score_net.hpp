#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "driftrec/image.hpp"
#include "driftrec/rng.hpp"
#include "driftrec/score_model.hpp"
#include "driftrec/tensor.hpp"

namespace driftrec {

/// Architecture hyper-parameters of the miniature U-Net.
struct NetSpec {
  std::size_t input_channels = 6;  // x_t stacked on y
  std::size_t base_width = 16;
  std::size_t depth = 3;            // resolution stages
  std::size_t time_embed_dim = 32;
  std::size_t groups = 4;           // group-norm groups

  std::size_t output_channels() const noexcept { return input_channels / 2; }
  std::size_t width(std::size_t stage) const noexcept { return base_width << stage; }
  /// Throws ConfigError.
  void validate() const;
  bool operator==(const NetSpec&) const = default;
};

struct TensorInfo {
  std::string name;
  std::vector<std::size_t> dims;
  std::size_t size() const noexcept;
};

/// Ordered set of named tensors sharing one layout.
template <typename T>
struct ParamSet {
  std::vector<TensorInfo> info;
  std::vector<std::vector<T>> values;

  std::size_t count() const noexcept { return info.size(); }
  std::size_t total_size() const noexcept;
  /// Throws RangeError for an unknown name.
  std::size_t index_of(std::string_view name) const;
  std::vector<T>& operator[](std::string_view name) { return values[index_of(name)]; }
  const std::vector<T>& operator[](std::string_view name) const { return values[index_of(name)]; }
  bool same_layout(const std::vector<TensorInfo>& other) const;
  bool all_finite() const;
  void fill(T v);

  template <typename U>
  ParamSet<U> cast() const {
    ParamSet<U> out;
    out.info = info;
    out.values.reserve(values.size());
    for (const auto& v : values) out.values.emplace_back(v.begin(), v.end());
    return out;
  }
};

/// Live weights, their EMA shadow and the optimizer step counter.
template <typename T>
struct ScoreModelParams {
  NetSpec spec;
  ParamSet<T> weights;
  ParamSet<T> ema_shadow;
  std::int64_t step_count = 0;
};

template <typename T>
struct TraceData;

/// Activations recorded by a forward pass; required by backward.
template <typename T>
struct NetTrace {
  std::shared_ptr<const TraceData<T>> data;
  bool valid() const noexcept { return static_cast<bool>(data); }
};

/// Residual encoder/decoder score network with group norm, SiLU, average
/// pooling, nearest upsampling and a sinusoidal time embedding projected into
/// every residual block. Input x_t and y (N x C x H x W each), output N x C x H x W.
template <typename T>
class ScoreNet {
 public:
  explicit ScoreNet(NetSpec spec);

  const NetSpec& spec() const noexcept { return spec_; }
  const std::vector<TensorInfo>& layout() const noexcept { return layout_; }
  std::size_t parameter_count() const noexcept;

  ParamSet<T> zeros() const;
  /// He fan-in initialization; the output convolution starts at zero.
  ParamSet<T> initialize(Rng& rng) const;

  /// Throws DimensionError on shape mismatches, RangeError on non-finite times.
  Tensor4<T> forward(const ParamSet<T>& w, const Tensor4<T>& x_t, const Tensor4<T>& y, std::span<const double> t,
                     NetTrace<T>* trace = nullptr) const;

  /// Gradients of <output, grad_output> for every tensor. Tensors named in
  /// `frozen` get exactly zero gradient. Throws std::logic_error without a trace.
  ParamSet<T> backward(const ParamSet<T>& w, const NetTrace<T>& trace, const Tensor4<T>& grad_output,
                       const std::set<std::string>& frozen = {}) const;

  /// Multiply-accumulate count of one forward pass on an h x w image.
  std::size_t forward_macs(std::size_t h, std::size_t w) const;

 private:
  NetSpec spec_;
  std::vector<TensorInfo> layout_;
};

extern template class ScoreNet<float>;
extern template class ScoreNet<double>;

/// Sinusoidal features of 1000 t: sin in the first half, cos in the second.
std::vector<double> time_features(double t, std::size_t dim);

/// ImageFields <-> one batch tensor.
template <typename T>
Tensor4<T> pack(const std::vector<const ImageField*>& fields);
template <typename T>
ImageField unpack(const Tensor4<T>& batch, std::size_t index);

/// ScoreModel adapter evaluating a network with fixed (usually EMA) weights.
class NetScoreModel final : public ScoreModel {
 public:
  NetScoreModel(NetSpec spec, ParamSet<float> weights);

  ImageField scaled_score(const ImageField& x_t, const ImageField& y, double t) const override;
  /// One network call for several states that share y and t.
  std::vector<ImageField> scaled_score_batch(const std::vector<const ImageField*>& x_t,
                                             const std::vector<const ImageField*>& y, double t) const;

  const ScoreNet<float>& net() const noexcept { return net_; }
  const ParamSet<float>& weights() const noexcept { return weights_; }

 private:
  ScoreNet<float> net_;
  ParamSet<float> weights_;
};

}  // namespace driftrec
