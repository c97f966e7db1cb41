#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "driftrec/image.hpp"
#include "driftrec/rng.hpp"

namespace driftrec {

enum class ChromaSubsampling { k444, k420 };

std::string_view to_string(ChromaSubsampling s) noexcept;
/// Accepts "444", "4:4:4", "420", "4:2:0". Throws ConfigError otherwise.
ChromaSubsampling parse_chroma_subsampling(std::string_view text);

struct JpegConfig {
  int qf = 75;
  ChromaSubsampling subsampling = ChromaSubsampling::k420;
  /// Clamp and round to 8 bit between colour conversion, DCT and output.
  bool round_to_8bit = true;

  void validate() const;  // ConfigError unless 0 <= qf <= 100
};

struct DoubleJpegConfig {
  int qf1 = 30;
  int qf2 = 10;
  std::size_t shift_x = 0;
  std::size_t shift_y = 0;
  ChromaSubsampling subsampling = ChromaSubsampling::k420;

  void validate() const;  // qfs in [0, 100], shifts in [0, 4]
};

/// Quantization tables in natural (row-major) order.
struct QuantTables {
  std::array<int, 64> luma{};
  std::array<int, 64> chroma{};
};

extern const std::array<int, 64> kBaseLumaTable;
extern const std::array<int, 64> kBaseChromaTable;

/// IJG quality scaling. qf 0 is treated as 1.
int quality_scale(int qf);
QuantTables qf_to_tables(int qf);

/// RGB in [0,1] to YCbCr (BT.601 full range) in [0,1] units, i.e. the 8-bit
/// code values divided by 255. With `round_to_8bit` the codes are rounded.
ImageField rgb_to_ycbcr(const ImageField& rgb, bool round_to_8bit = true);
ImageField ycbcr_to_rgb(const ImageField& ycc, bool round_to_8bit = true);

/// Quantization round trip of a baseline JPEG codec without entropy coding.
/// Accepts 1-channel (luma only) or 3-channel RGB images of any size.
ImageField compress_decompress(const ImageField& img, const JpegConfig& cfg);

/// compress(qf1), crop away the first shift_x columns and shift_y rows, compress(qf2).
ImageField double_compress(const ImageField& img, const DoubleJpegConfig& cfg);

struct Degradation {
  ImageField y;
  int qf = 0;  // for logging only
};

/// qf ~ U{0..100}, y = compress_decompress(img, qf).
Degradation sample_degradation(const ImageField& img, Rng& rng,
                               ChromaSubsampling subsampling = ChromaSubsampling::k420);

}  // namespace driftrec
