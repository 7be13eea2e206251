#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "qrb/bottcher.hpp"
#include "qrb/render.hpp"

namespace qrb {

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Parses `key = value` lines. '#' starts a comment; blank lines are ignored.
KeyValues parse_key_values(std::string_view text);
/// Throws Error(kConfig) if the file cannot be read.
KeyValues load_key_values(const std::filesystem::path& path);

/// Settings shared by the CLI subcommands and the verify runner.
struct RunConfig {
  double K = 2.0;
  double theta = kPi / 6;
  double c_re = 1.0;
  double c_im = 0.0;
  cplx center{0.0, 0.0};
  double width = 4.0;
  double height = 4.0;
  int nx = 256;
  int ny = 256;
  int max_iter = 256;
  int n = 8;
  std::string out;
  double sigma = 0.0;  // 0 selects SolverConfig::defaults_for
  double tol = 1e-12;
  int k_max = 64;
  double alpha = 1.5;
  int threads = 0;
  int samples = 64;

  /// Overlays recognised keys onto *this. Unknown keys and unparsable values
  /// throw Error(kConfig).
  void apply(const KeyValues& kv);

  /// Throws Error(kConfig) if K < 1 or the values do not form a valid map.
  QAMap map() const;
  SolverConfig solver(const QAMap& m) const;
  GridSpec grid() const;
};

}  // namespace qrb
