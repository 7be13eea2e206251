#include "qrb/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <thread>

#include "qrb/dilatation_dynamics.hpp"
#include "qrb/error.hpp"

namespace qrb {

void GridSpec::validate() const {
  if (nx < 1 || ny < 1) throw Error(ErrorCode::kInvalidParameter, "grid needs nx, ny >= 1");
  if (!(width > 0.0) || !(height > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "grid width and height must be positive");
  }
}

cplx GridSpec::pixel(int i, int j) const {
  const double dx = static_cast<double>(2 * i + 1 - nx) / (2.0 * nx) * width;
  const double dy = static_cast<double>(ny - 2 * j - 1) / (2.0 * ny) * height;
  return center + cplx{dx, dy};
}

namespace {

// Splits rows into contiguous bands; each pixel is written by exactly one
// worker at its own index.
template <typename Fn>
void for_each_row(int rows, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(rows, 1));
  if (workers == 1) {
    for (int j = 0; j < rows; ++j) fn(j);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int j = w; j < rows; j += workers) fn(j);
    });
  }
}

}  // namespace

EscapeField render_escape(const QAMap& m, const GridSpec& g, int max_iter, int threads) {
  g.validate();
  EscapeField field{g, std::vector<int>(g.size(), kSentinel)};
  for_each_row(g.ny, threads, [&](int j) {
    for (int i = 0; i < g.nx; ++i) {
      const OrbitResult r = orbit(m, g.pixel(i, j), max_iter);
      field.values[static_cast<std::size_t>(j) * g.nx + i] =
          r.status == OrbitStatus::kEscaped ? r.steps : kSentinel;
    }
  });
  return field;
}

DilatationField render_dilatation(const QAMap& m, const GridSpec& g, int n, int threads) {
  g.validate();
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "n must be at least 1");
  DilatationField field{g, std::vector<double>(g.size(), 0.0)};
  for_each_row(g.ny, threads, [&](int j) {
    for (int i = 0; i < g.nx; ++i) {
      double value = std::numeric_limits<double>::quiet_NaN();
      try {
        value = std::abs(mu_iterate_general(m, g.pixel(i, j), n));
      } catch (const Error&) {
      }
      field.values[static_cast<std::size_t>(j) * g.nx + i] = value;
    }
  });
  return field;
}

Rgb Palette::color(int step) const {
  if (step < 0) return {0, 0, 0};
  const double t =
      std::clamp(std::log1p(static_cast<double>(step)) / std::log1p(std::max(max_iter, 1)), 0.0, 1.0);
  auto channel = [](double v) {
    return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(v, 0.0, 1.0)));
  };
  // dark blue -> orange -> pale yellow
  return {channel(1.6 * t), channel(1.3 * t * t + 0.1 * t), channel(0.5 * (1.0 - t) + 0.6 * t * t * t)};
}

namespace {

std::string ppm_header(const GridSpec& g) {
  return "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
}

}  // namespace

std::string encode_ppm(const EscapeField& field, const Palette& palette) {
  std::string bytes = ppm_header(field.grid);
  bytes.reserve(bytes.size() + 3 * field.values.size());
  for (const int step : field.values) {
    const Rgb rgb = palette.color(step);
    bytes.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  }
  return bytes;
}

std::string encode_ppm(const DilatationField& field) {
  std::string bytes = ppm_header(field.grid);
  bytes.reserve(bytes.size() + 3 * field.values.size());
  for (const double v : field.values) {
    const auto level = std::isnan(v)
                           ? std::uint8_t{0}
                           : static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(v, 0.0, 1.0)));
    bytes.append(3, static_cast<char>(level));
  }
  return bytes;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

void emit_ppm(const EscapeField& field, const Palette& palette, const std::filesystem::path& path) {
  write_file(path, encode_ppm(field, palette));
}

void emit_ppm(const DilatationField& field, const std::filesystem::path& path) {
  write_file(path, encode_ppm(field));
}

}  // namespace qrb
