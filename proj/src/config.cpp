#include "qrb/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qrb/error.hpp"

namespace qrb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, const std::string& value) {
  char* stop = nullptr;
  const double v = std::strtod(value.c_str(), &stop);
  if (value.empty() || stop != value.c_str() + value.size()) {
    throw Error(ErrorCode::kConfig, "key '" + std::string(key) + "': '" + value + "' is not a number");
  }
  return v;
}

int parse_int(std::string_view key, const std::string& value) {
  char* stop = nullptr;
  const long v = std::strtol(value.c_str(), &stop, 10);
  if (value.empty() || stop != value.c_str() + value.size()) {
    throw Error(ErrorCode::kConfig, "key '" + std::string(key) + "': '" + value + "' is not an integer");
  }
  return static_cast<int>(v);
}

cplx parse_complex(std::string_view key, const std::string& value) {
  const auto comma = value.find(',');
  if (comma == std::string::npos) {
    return {parse_double(key, std::string(trim(value))), 0.0};
  }
  return {parse_double(key, std::string(trim(std::string_view(value).substr(0, comma)))),
          parse_double(key, std::string(trim(std::string_view(value).substr(comma + 1))))};
}

}  // namespace

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": empty key");
    }
    kv[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  }
  return kv;
}

KeyValues load_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str());
}

void RunConfig::apply(const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "K") K = parse_double(key, value);
    else if (key == "theta") theta = parse_double(key, value);
    else if (key == "c_re") c_re = parse_double(key, value);
    else if (key == "c_im") c_im = parse_double(key, value);
    else if (key == "center") center = parse_complex(key, value);
    else if (key == "width") width = parse_double(key, value);
    else if (key == "height") height = parse_double(key, value);
    else if (key == "nx") nx = parse_int(key, value);
    else if (key == "ny") ny = parse_int(key, value);
    else if (key == "max_iter") max_iter = parse_int(key, value);
    else if (key == "n") n = parse_int(key, value);
    else if (key == "out") out = value;
    else if (key == "sigma") sigma = parse_double(key, value);
    else if (key == "tol") tol = parse_double(key, value);
    else if (key == "k_max") k_max = parse_int(key, value);
    else if (key == "alpha") alpha = parse_double(key, value);
    else if (key == "threads") threads = parse_int(key, value);
    else if (key == "samples") samples = parse_int(key, value);
    else throw Error(ErrorCode::kConfig, "unknown config key '" + key + "'");
  }
}

QAMap RunConfig::map() const {
  try {
    const NormalizedStretch ns = normalize_omega(K, theta);
    if (ns.scale != 1.0) {
      throw Error(ErrorCode::kConfig, "K must be at least 1; normalize the stretch first");
    }
    return QAMap(ns.params, cplx{c_re, c_im});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    throw Error(ErrorCode::kConfig, e.what());
  }
}

SolverConfig RunConfig::solver(const QAMap& m) const {
  SolverConfig cfg = SolverConfig::defaults_for(m);
  if (sigma != 0.0) cfg.sigma = sigma;
  cfg.tol = tol;
  cfg.k_max = k_max;
  cfg.alpha = alpha;
  try {
    cfg.validate(m);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  return cfg;
}

GridSpec RunConfig::grid() const {
  GridSpec g{center, width, height, nx, ny};
  try {
    g.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  return g;
}

}  // namespace qrb
