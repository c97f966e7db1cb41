#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "driftrec/image.hpp"
#include "driftrec/rng.hpp"

namespace driftrec {

enum class Split { kTrain, kVal, kTest };
std::string_view to_string(Split s) noexcept;

struct ImageRecord {
  std::filesystem::path path;
  Split split = Split::kTrain;
};

/// Image files of a directory (sorted by name) with a seeded 80/5/15 split.
class DatasetIndex {
 public:
  DatasetIndex() = default;
  DatasetIndex(std::vector<std::filesystem::path> files, std::uint64_t seed);
  /// Lists *.ppm and *.drt files. Throws IoError if the directory is missing or empty.
  static DatasetIndex scan(const std::filesystem::path& dir, std::uint64_t seed);

  const std::vector<ImageRecord>& records() const noexcept { return records_; }
  std::vector<ImageRecord> subset(Split s) const;
  std::size_t count(Split s) const;

 private:
  std::vector<ImageRecord> records_;
};

/// Split sizes for n images: floor(0.05 n) validation, floor(0.15 n) test, rest training.
struct SplitSizes {
  std::size_t train, val, test;
};
SplitSizes split_sizes(std::size_t n);

/// Square crop with side s * min(H, W), s ~ U[min_scale, max_scale], at a uniform
/// position, resized bilinearly to patch x patch.
ImageField random_resized_crop(const ImageField& img, std::size_t patch, Rng& rng, double min_scale = 0.5,
                               double max_scale = 1.0);
/// Bilinear resize with pixel-centre alignment.
ImageField resize_bilinear(const ImageField& img, std::size_t out_h, std::size_t out_w);

/// Reads the record, forces 3 channels and applies random_resized_crop.
ImageField load_patch(const ImageRecord& record, std::size_t patch, Rng& rng);

/// Procedural RGB test image: gradients, smooth textures and soft-edged shapes,
/// quantized to 8 bit.
ImageField synth_image(std::size_t size, Rng& rng);
/// Writes img_000.ppm ... into dir. Image i depends only on (seed, i).
std::vector<std::filesystem::path> make_corpus(const std::filesystem::path& dir, std::size_t count,
                                               std::size_t size, std::uint64_t seed);

}  // namespace driftrec
