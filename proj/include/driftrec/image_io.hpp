#pragma once

#include <filesystem>
#include <iosfwd>

#include "driftrec/image.hpp"

namespace driftrec {

/// Binary PPM (P6, maxval 255) or PGM (P5) for 1-channel images. Values are
/// clamped to [0,1] and rounded to 8 bit on write.
void write_ppm(const std::filesystem::path& path, const ImageField& img);
void write_ppm(std::ostream& os, const ImageField& img);
/// Reads P6 or P5 with maxval <= 255. Throws IoError on malformed input.
ImageField read_ppm(const std::filesystem::path& path);
ImageField read_ppm(std::istream& is);

/// Raw tensor: magic "DRTENSOR", u32 channels, height, width, then
/// row-major little-endian float32 values. Lossless for float-representable data.
void write_tensor(const std::filesystem::path& path, const ImageField& img);
ImageField read_tensor(const std::filesystem::path& path);

/// Dispatches on extension: .ppm/.pgm or .drt.
ImageField read_image(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const ImageField& img);

/// Rounds every value to the nearest multiple of 1/255 after clamping.
ImageField quantize8(const ImageField& img);

}  // namespace driftrec
