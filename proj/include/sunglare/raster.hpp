#ifndef SUNGLARE_RASTER_HPP
#define SUNGLARE_RASTER_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sunglare {

// Row-major 8-bit single-channel raster.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
};

// Row-major 8-bit RGB raster (3 bytes per pixel).
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  RgbImage() = default;
  RgbImage(int w, int h, std::uint8_t r = 0, std::uint8_t g = 0, std::uint8_t b = 0);

  bool empty() const { return width == 0 || height == 0; }
  const std::uint8_t* px(int x, int y) const {
    return &pixels[(static_cast<size_t>(y) * width + x) * 3];
  }
  std::uint8_t* px(int x, int y) { return &pixels[(static_cast<size_t>(y) * width + x) * 3]; }
  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

// Binary PGM (P5) / PPM (P6), maxval 255. These portable lossless formats
// keep fixtures diffable and cached rasters bit-identical across runs.
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
GrayImage decode_pgm(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_ppm(const RgbImage& img);
RgbImage decode_ppm(const std::vector<std::uint8_t>& bytes);

void write_pgm(const std::filesystem::path& path, const GrayImage& img);
GrayImage read_pgm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const RgbImage& img);
RgbImage read_ppm(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace sunglare

#endif  // SUNGLARE_RASTER_HPP
