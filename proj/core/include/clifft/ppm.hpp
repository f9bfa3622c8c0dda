#pragma once
// Binary PPM (P6, maxval 255) reader and writer with bit-exact round trips.

#include <string>
#include <vector>

namespace clifft {

/// 8-bit RGB raster, row-major, 3 bytes per pixel (r, g, b).
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> data;  // size = 3 * width * height

  unsigned char& at(int x, int y, int channel) {
    return data[3 * (size_t(y) * width + x) + channel];
  }
  unsigned char at(int x, int y, int channel) const {
    return data[3 * (size_t(y) * width + x) + channel];
  }
};

/// Parse a binary PPM (magic "P6", maxval 255). '#' comments are allowed in
/// the header. Throws std::runtime_error on malformed input or I/O failure.
RgbImage read_ppm(const std::string& path);

/// Write in canonical form — "P6\n<w> <h>\n255\n" followed by the raw
/// samples — so write(read(file)) reproduces canonical files byte for byte.
void write_ppm(const std::string& path, const RgbImage& img);

}  // namespace clifft
