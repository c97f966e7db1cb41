#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace driftrec {

struct Shape {
  std::size_t channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;

  std::size_t size() const noexcept { return channels * height * width; }
  bool operator==(const Shape&) const = default;
};

/// C x H x W field of doubles, row-major per channel. Used for clean images,
/// corrupted images, process states and score fields alike.
class ImageField {
 public:
  ImageField() = default;
  explicit ImageField(Shape shape, double fill = 0.0);
  ImageField(std::size_t channels, std::size_t height, std::size_t width, double fill = 0.0);
  ImageField(Shape shape, std::vector<double> values);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t channels() const noexcept { return shape_.channels; }
  std::size_t height() const noexcept { return shape_.height; }
  std::size_t width() const noexcept { return shape_.width; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t c, std::size_t y, std::size_t x) {
    return data_[(c * shape_.height + y) * shape_.width + x];
  }
  double operator()(std::size_t c, std::size_t y, std::size_t x) const {
    return data_[(c * shape_.height + y) * shape_.width + x];
  }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }
  std::span<double> channel(std::size_t c);
  std::span<const double> channel(std::size_t c) const;

  std::vector<double>& storage() noexcept { return data_; }
  const std::vector<double>& storage() const noexcept { return data_; }

  bool operator==(const ImageField&) const = default;

 private:
  Shape shape_{};
  std::vector<double> data_;
};

/// Throws DimensionError naming `what` when shapes differ.
void require_same_shape(const ImageField& a, const ImageField& b, std::string_view what);

ImageField clamp01(ImageField img);
bool all_finite(const ImageField& img);

/// a + s * b
ImageField axpy(const ImageField& a, double s, const ImageField& b);
/// Copy of `img` with the window [x0, x0+w) x [y0, y0+h) kept.
ImageField crop(const ImageField& img, std::size_t x0, std::size_t y0, std::size_t w, std::size_t h);
/// Stacks the channels of a on top of those of b.
ImageField concat_channels(const ImageField& a, const ImageField& b);
double channel_mean(const ImageField& img, std::size_t c);

}  // namespace driftrec
