#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qrb/qa_maps.hpp"

namespace qrb {

/// Pixel (i, j) is column i and row j, row 0 at the top (largest imaginary
/// part). Its centre is
///   center + (2i+1-nx)/(2nx) * width + i * (ny-2j-1)/(2ny) * height,
/// so a grid centred at 0 maps mirrored pixels to exact negatives.
struct GridSpec {
  cplx center{0.0, 0.0};
  double width = 4.0;
  double height = 4.0;
  int nx = 256;
  int ny = 256;

  void validate() const;  // Error(kInvalidParameter)
  cplx pixel(int i, int j) const;
  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
};

/// Escape step per pixel, or kSentinel for bounded and undetermined orbits.
inline constexpr int kSentinel = -1;

struct EscapeField {
  GridSpec grid;
  std::vector<int> values;  // row-major, top row first

  int at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.nx + i]; }
};

struct DilatationField {
  GridSpec grid;
  std::vector<double> values;  // |mu_n|, NaN where the H-orbit hits 0

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.nx + i]; }
};

/// threads <= 0 uses the hardware concurrency. Output does not depend on it.
EscapeField render_escape(const QAMap& m, const GridSpec& g, int max_iter, int threads = 0);
DilatationField render_dilatation(const QAMap& m, const GridSpec& g, int n, int threads = 0);

using Rgb = std::array<std::uint8_t, 3>;

/// Escape steps coloured on a log(1 + step) scale; sentinel is black.
struct Palette {
  int max_iter = 256;
  Rgb color(int step) const;
};

std::string encode_ppm(const EscapeField& field, const Palette& palette);
/// Greyscale ramp of |mu| in [0, 1]; NaN is black.
std::string encode_ppm(const DilatationField& field);

void emit_ppm(const EscapeField& field, const Palette& palette, const std::filesystem::path& path);
void emit_ppm(const DilatationField& field, const std::filesystem::path& path);

/// Writes bytes to path, throwing Error(kIo) with the path on failure.
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace qrb
