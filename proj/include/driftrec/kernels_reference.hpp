#pragma once

// Serial, loop-per-definition versions of the kernels in kernels.hpp. Kept
// for testing and benchmarking only.

#include <cstddef>
#include <span>
#include <vector>

#include "driftrec/tensor.hpp"

namespace driftrec::kernels::reference {

template <typename T>
void conv2d_forward(const Tensor4<T>& in, std::span<const T> weight, std::span<const T> bias, std::size_t cout,
                    std::size_t k, Tensor4<T>& out);
template <typename T>
void conv2d_backward(const Tensor4<T>& in, std::span<const T> weight, const Tensor4<T>& grad_out, std::size_t k,
                     Tensor4<T>* grad_in, std::span<T> grad_weight, std::span<T> grad_bias);
template <typename T>
void group_norm_forward(const Tensor4<T>& in, std::span<const T> gamma, std::span<const T> beta, std::size_t groups,
                        T eps, Tensor4<T>& out, std::vector<T>& mean, std::vector<T>& rstd);
template <typename T>
void group_norm_backward(const Tensor4<T>& in, std::span<const T> gamma, std::size_t groups,
                         const std::vector<T>& mean, const std::vector<T>& rstd, const Tensor4<T>& grad_out,
                         Tensor4<T>& grad_in, std::span<T> grad_gamma, std::span<T> grad_beta);
template <typename T>
void avg_pool2_forward(const Tensor4<T>& in, Tensor4<T>& out);
template <typename T>
void avg_pool2_backward(const Tensor4<T>& grad_out, Tensor4<T>& grad_in);
template <typename T>
void upsample2_forward(const Tensor4<T>& in, std::size_t out_h, std::size_t out_w, Tensor4<T>& out);
template <typename T>
void upsample2_backward(const Tensor4<T>& grad_out, Tensor4<T>& grad_in);

}  // namespace driftrec::kernels::reference
