// qrb: escape-time and dilatation rendering, Böttcher residual tables, fixed
// rays and verification suites for f(z) = h_{K,theta}(z)^2 + c.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "qrb/bottcher.hpp"
#include "qrb/config.hpp"
#include "qrb/csv.hpp"
#include "qrb/dilatation_dynamics.hpp"
#include "qrb/error.hpp"
#include "qrb/render.hpp"
#include "qrb/verify.hpp"

namespace {

struct Overrides {
  std::optional<double> K, theta, c_re, c_im, width, height;
  std::optional<std::string> center, out, config;
  std::optional<int> nx, ny, max_iter, n, threads;
  std::optional<double> sigma, tol;
};

void add_common_options(CLI::App& app, Overrides& o) {
  app.add_option("--K", o.K, "stretch factor K >= 1");
  app.add_option("--theta", o.theta, "stretch direction in radians");
  app.add_option("--c-re", o.c_re, "real part of c");
  app.add_option("--c-im", o.c_im, "imaginary part of c");
  app.add_option("--center", o.center, "grid centre as re,im");
  app.add_option("--width", o.width, "grid width");
  app.add_option("--height", o.height, "grid height");
  app.add_option("--nx", o.nx, "pixels per row");
  app.add_option("--ny", o.ny, "rows");
  app.add_option("--max-iter", o.max_iter, "orbit iteration budget");
  app.add_option("--n", o.n, "iterate index for dilatation output");
  app.add_option("--out", o.out, "output path (.ppm or .csv)");
  app.add_option("--config", o.config, "key = value configuration file");
  app.add_option("--sigma", o.sigma, "half-plane threshold (log scale)");
  app.add_option("--tol", o.tol, "Böttcher convergence tolerance");
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

qrb::RunConfig resolve(const Overrides& o) {
  qrb::RunConfig cfg;
  if (o.config) cfg.apply(qrb::load_key_values(*o.config));
  qrb::KeyValues kv;
  auto put = [&kv](const char* key, const auto& value) {
    if (!value) return;
    if constexpr (std::is_same_v<std::decay_t<decltype(*value)>, std::string>) {
      kv[key] = *value;
    } else {
      char buf[40];
      if constexpr (std::is_integral_v<std::decay_t<decltype(*value)>>) {
        std::snprintf(buf, sizeof buf, "%d", *value);
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", *value);
      }
      kv[key] = buf;
    }
  };
  put("K", o.K);
  put("theta", o.theta);
  put("c_re", o.c_re);
  put("c_im", o.c_im);
  put("center", o.center);
  put("width", o.width);
  put("height", o.height);
  put("nx", o.nx);
  put("ny", o.ny);
  put("max_iter", o.max_iter);
  put("n", o.n);
  put("out", o.out);
  put("sigma", o.sigma);
  put("tol", o.tol);
  put("threads", o.threads);
  cfg.apply(kv);
  return cfg;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void write_table(const qrb::Table& table, const std::string& out) {
  if (out.empty()) {
    std::cout << qrb::format_csv(table);
  } else {
    qrb::emit_csv(table, out);
    std::cerr << "wrote " << out << " (" << table.rows.size() << " rows)\n";
  }
}

int cmd_escape(const qrb::RunConfig& cfg) {
  const qrb::QAMap m = cfg.map();
  const qrb::EscapeField field = qrb::render_escape(m, cfg.grid(), cfg.max_iter, cfg.threads);
  const std::string out = cfg.out.empty() ? "escape.ppm" : cfg.out;
  if (ends_with(out, ".csv")) {
    qrb::Table t{{"i", "j", "re", "im", "step"}, {}};
    for (int j = 0; j < field.grid.ny; ++j) {
      for (int i = 0; i < field.grid.nx; ++i) {
        const qrb::cplx z = field.grid.pixel(i, j);
        t.rows.push_back({double(i), double(j), z.real(), z.imag(), double(field.at(i, j))});
      }
    }
    qrb::emit_csv(t, out);
  } else {
    qrb::emit_ppm(field, qrb::Palette{cfg.max_iter}, out);
  }
  std::cerr << "wrote " << out << '\n';
  return 0;
}

int cmd_dilatation(const qrb::RunConfig& cfg) {
  const qrb::QAMap m = cfg.map();
  const qrb::DilatationField field = qrb::render_dilatation(m, cfg.grid(), cfg.n, cfg.threads);
  const std::string out = cfg.out.empty() ? "dilatation.ppm" : cfg.out;
  if (ends_with(out, ".csv")) {
    qrb::Table t{{"i", "j", "re", "im", "mu_abs"}, {}};
    for (int j = 0; j < field.grid.ny; ++j) {
      for (int i = 0; i < field.grid.nx; ++i) {
        const qrb::cplx z = field.grid.pixel(i, j);
        t.rows.push_back({double(i), double(j), z.real(), z.imag(), field.at(i, j)});
      }
    }
    qrb::emit_csv(t, out);
  } else {
    qrb::emit_ppm(field, out);
  }
  std::cerr << "wrote " << out << '\n';
  return 0;
}

int cmd_bottcher(const qrb::RunConfig& cfg) {
  const qrb::QAMap m = cfg.map();
  const auto b = qrb::BottcherCoordinate::build(m, cfg.solver(m));
  std::cerr << "sigma = " << b.config().sigma << ", k_used = " << b.k_used() << '\n';
  qrb::Table t{{"angle", "re", "im", "psi_re", "psi_im", "residual"}, {}};
  const double radius = 2.0 * b.inner_radius();
  for (int j = 0; j < cfg.samples; ++j) {
    const double angle = 2.0 * qrb::kPi * (j + 0.5) / cfg.samples;
    const qrb::cplx z = std::polar(radius, angle);
    const qrb::cplx w = b.psi(z);
    t.rows.push_back({angle, z.real(), z.imag(), w.real(), w.imag(), b.conjugacy_residual(z)});
  }
  write_table(t, cfg.out);
  return 0;
}

int cmd_fixed_ray(const qrb::RunConfig& cfg) {
  const qrb::StretchParams p = cfg.map().stretch();
  const auto roots = qrb::fixed_rays(p);
  const qrb::FixedRay ray = qrb::fixed_ray(p);
  std::cerr << roots.size() << " fixed ray(s); selected phi = " << ray.phi << '\n';
  qrb::Table t{{"K", "theta", "phi", "selected", "cos_phi", "cos_bound", "trace_sq"}, {}};
  for (const double phi : roots) {
    const qrb::FixedRay r{phi};
    t.rows.push_back({p.K(), p.theta(), phi, phi == ray.phi ? 1.0 : 0.0, std::cos(phi),
                      qrb::cos_phi_lower_bound(p.K()), qrb::trace_sq(p, r)});
  }
  write_table(t, cfg.out);
  const auto mus = qrb::mu_fixed_ray_sequence(p, ray, std::max(cfg.n, 1));
  std::cerr << "|mu_" << mus.size() << "| = " << std::abs(mus.back())
            << ", distortion lower bound = " << qrb::distortion_from_mu(mus.back()) << '\n';
  return 0;
}

int cmd_trace_sweep(const qrb::RunConfig& cfg) {
  qrb::Table t{{"K", "theta", "phi", "trace_sq", "cos_bound"}, {}};
  for (int a = 0; a <= 90; ++a) {
    const double K = 1.0 + 0.1 * a;
    for (int b = 0; b <= 60; ++b) {
      const double theta = -1.5 + 0.05 * b;
      const qrb::StretchParams p(K, theta);
      const qrb::FixedRay ray = qrb::fixed_ray(p);
      t.rows.push_back({K, p.theta(), ray.phi, qrb::trace_sq(p, ray), qrb::cos_phi_lower_bound(K)});
    }
  }
  write_table(t, cfg.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Böttcher coordinates and dilatation dynamics for h(z)^2 + c"};
  app.require_subcommand(1);
  Overrides o;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const qrb::RunConfig&);
  };
  const Command commands[] = {
      {"escape", "render the escape-time field", cmd_escape},
      {"dilatation", "render |mu_n| of the iterates of H", cmd_dilatation},
      {"bottcher", "tabulate psi and conjugacy residuals on |z| = 2e^sigma", cmd_bottcher},
      {"fixed-ray", "fixed rays of H, trace and distortion growth", cmd_fixed_ray},
      {"trace-sweep", "tr(A)^2 and the cos bound over the (K, theta) grid", cmd_trace_sweep},
  };
  int (*selected)(const qrb::RunConfig&) = nullptr;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common_options(*sub, o);
    sub->callback([&selected, run = c.run] { selected = run; });
  }
  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite; exit 0 iff all pass");
  add_common_options(*verify, o);
  bool run_verify = false;
  verify->callback([&run_verify] { run_verify = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const qrb::RunConfig cfg = resolve(o);
    if (run_verify) return qrb::run_verify(cfg, std::cout);
    return selected(cfg);
  } catch (const qrb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == qrb::ErrorCode::kConfig ? 2 : 1;
  }
}
