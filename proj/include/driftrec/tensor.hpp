#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace driftrec {

/// Dense N x C x H x W batch, row-major.
template <typename T>
struct Tensor4 {
  std::size_t n = 0, c = 0, h = 0, w = 0;
  std::vector<T> data;

  Tensor4() = default;
  Tensor4(std::size_t n_, std::size_t c_, std::size_t h_, std::size_t w_, T fill = T(0))
      : n(n_), c(c_), h(h_), w(w_), data(n_ * c_ * h_ * w_, fill) {}

  std::size_t size() const noexcept { return data.size(); }
  std::size_t plane() const noexcept { return h * w; }
  bool same_shape(const Tensor4& o) const noexcept { return n == o.n && c == o.c && h == o.h && w == o.w; }

  T* ptr(std::size_t in, std::size_t ic) noexcept { return data.data() + (in * c + ic) * h * w; }
  const T* ptr(std::size_t in, std::size_t ic) const noexcept { return data.data() + (in * c + ic) * h * w; }
  T& at(std::size_t in, std::size_t ic, std::size_t y, std::size_t x) noexcept { return ptr(in, ic)[y * w + x]; }
  T at(std::size_t in, std::size_t ic, std::size_t y, std::size_t x) const noexcept { return ptr(in, ic)[y * w + x]; }
};

/// Row-major N x F matrix of per-sample feature vectors.
template <typename T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill = T(0)) : rows(r), cols(c), data(r * c, fill) {}

  T* row(std::size_t r) noexcept { return data.data() + r * cols; }
  const T* row(std::size_t r) const noexcept { return data.data() + r * cols; }
};

}  // namespace driftrec
