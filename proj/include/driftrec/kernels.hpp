#pragma once

// Data-parallel building blocks of the score network. Every loop that is
// parallelized assigns each output element to exactly one thread and
// accumulates in a fixed order, so results do not depend on the thread count.
// A plain serial version of every kernel lives in kernels_reference.hpp and is
// used by the tests as the ground truth.

#include <cstddef>
#include <span>
#include <vector>

#include "driftrec/tensor.hpp"

namespace driftrec::kernels {

/// Same-padded, stride-1 convolution with a k x k kernel (k odd).
/// weight: [cout][cin][k][k], bias: [cout].
template <typename T>
void conv2d_forward(const Tensor4<T>& in, std::span<const T> weight, std::span<const T> bias, std::size_t cout,
                    std::size_t k, Tensor4<T>& out);

/// Gradients of conv2d_forward. `grad_in` may be null when the input gradient is not needed.
/// grad_weight and grad_bias are overwritten.
template <typename T>
void conv2d_backward(const Tensor4<T>& in, std::span<const T> weight, const Tensor4<T>& grad_out, std::size_t k,
                     Tensor4<T>* grad_in, std::span<T> grad_weight, std::span<T> grad_bias);

/// Per-sample group normalization. mean/rstd receive n * groups statistics.
template <typename T>
void group_norm_forward(const Tensor4<T>& in, std::span<const T> gamma, std::span<const T> beta, std::size_t groups,
                        T eps, Tensor4<T>& out, std::vector<T>& mean, std::vector<T>& rstd);

template <typename T>
void group_norm_backward(const Tensor4<T>& in, std::span<const T> gamma, std::size_t groups,
                         const std::vector<T>& mean, const std::vector<T>& rstd, const Tensor4<T>& grad_out,
                         Tensor4<T>& grad_in, std::span<T> grad_gamma, std::span<T> grad_beta);

/// x * sigmoid(x), elementwise.
template <typename T>
void silu_forward(std::span<const T> in, std::span<T> out);
template <typename T>
void silu_backward(std::span<const T> in, std::span<const T> grad_out, std::span<T> grad_in);

/// 2x2 average pooling; odd trailing rows/columns form partial windows averaged over their valid pixels.
template <typename T>
void avg_pool2_forward(const Tensor4<T>& in, Tensor4<T>& out);
template <typename T>
void avg_pool2_backward(const Tensor4<T>& grad_out, Tensor4<T>& grad_in);

/// Nearest-neighbour upsampling by 2, cropped to (out_h, out_w).
template <typename T>
void upsample2_forward(const Tensor4<T>& in, std::size_t out_h, std::size_t out_w, Tensor4<T>& out);
template <typename T>
void upsample2_backward(const Tensor4<T>& grad_out, Tensor4<T>& grad_in);

/// out[n][o] = bias[o] + sum_i weight[o][i] * in[n][i]
template <typename T>
void dense_forward(const Matrix<T>& in, std::span<const T> weight, std::span<const T> bias, std::size_t out_features,
                   Matrix<T>& out);
template <typename T>
void dense_backward(const Matrix<T>& in, std::span<const T> weight, const Matrix<T>& grad_out, Matrix<T>* grad_in,
                    std::span<T> grad_weight, std::span<T> grad_bias);

/// h[n][c][:] += e[n][c]
template <typename T>
void add_channel_bias(Tensor4<T>& h, const Matrix<T>& e);
/// ge[n][c] = sum over the plane of g[n][c]
template <typename T>
void channel_sums(const Tensor4<T>& g, Matrix<T>& ge);

}  // namespace driftrec::kernels
