#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrb/affine_maps.hpp"
#include "qrb/bottcher.hpp"
#include "qrb/dilatation_dynamics.hpp"
#include "qrb/error.hpp"
#include "qrb/extension.hpp"
#include "qrb/log_coords.hpp"
#include "qrb/qa_maps.hpp"
#include "qrb/render.hpp"

namespace py = pybind11;
using namespace qrb;

namespace {

GridSpec make_grid(cplx center, double width, double height, int nx, int ny) {
  GridSpec g;
  g.center = center;
  g.width = width;
  g.height = height;
  g.nx = nx;
  g.ny = ny;
  return g;
}

template <typename T>
py::array_t<T> as_image(const std::vector<T>& values, const GridSpec& g) {
  py::array_t<T> out({g.ny, g.nx});
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_qrb, m) {
  m.doc() = "Böttcher coordinates and dilatation dynamics for h(z)^2 + c";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<StretchParams>(m, "StretchParams")
      .def(py::init<double, double>(), py::arg("K"), py::arg("theta") = 0.0)
      .def_property_readonly("K", &StretchParams::K)
      .def_property_readonly("theta", &StretchParams::theta)
      .def("__repr__", [](const StretchParams& p) {
        return "StretchParams(K=" + py::repr(py::float_(p.K())).cast<std::string>() +
               ", theta=" + py::repr(py::float_(p.theta())).cast<std::string>() + ")";
      });

  m.def("apply_stretch", &apply_stretch, py::arg("p"), py::arg("z"));
  m.def("inverse_stretch", &inverse_stretch, py::arg("p"), py::arg("z"));
  m.def("stretch_dilatation", &stretch_dilatation, py::arg("p"));
  m.def("normalize_omega", [](double K, double theta) {
    const auto n = normalize_omega(K, theta);
    return py::make_tuple(n.params, n.scale);
  }, py::arg("K"), py::arg("theta"));

  py::class_<QAMap>(m, "QAMap")
      .def(py::init<double, double, cplx>(), py::arg("K"), py::arg("theta") = 0.0, py::arg("c") = cplx{})
      .def(py::init<StretchParams, cplx>(), py::arg("stretch"), py::arg("c") = cplx{})
      .def_property_readonly("stretch", &QAMap::stretch)
      .def_property_readonly("c", &QAMap::c)
      .def("f", &QAMap::f)
      .def("H", &QAMap::H)
      .def("escape_radius", &QAMap::escape_radius);

  py::enum_<OrbitStatus>(m, "OrbitStatus")
      .value("Escaped", OrbitStatus::kEscaped)
      .value("Bounded", OrbitStatus::kBounded)
      .value("Undetermined", OrbitStatus::kUndetermined);
  py::enum_<Connectivity>(m, "Connectivity")
      .value("Connected", Connectivity::kConnected)
      .value("InfinitelyManyComponents", Connectivity::kInfinitelyManyComponents)
      .value("Undetermined", Connectivity::kUndetermined);
  py::enum_<ExtensionDomain>(m, "ExtensionDomain")
      .value("WholeEscapingSet", ExtensionDomain::kWholeEscapingSet)
      .value("StopsBeforeBranch", ExtensionDomain::kStopsBeforeBranch);

  m.def("orbit", [](const QAMap& map, cplx z, int max_iter) {
    const auto r = orbit(map, z, max_iter);
    return py::make_tuple(r.status, r.steps, r.final_point);
  }, py::arg("m"), py::arg("z"), py::arg("max_iter"));
  m.def("classify_N", &classify_N, py::arg("m"), py::arg("max_iter"));

  m.def("phi", &phi, py::arg("p"), py::arg("X"));
  m.def("xi", &xi, py::arg("p"), py::arg("X"));
  m.def("rho", &rho, py::arg("c"), py::arg("X"));
  m.def("f_tilde", &f_tilde, py::arg("m"), py::arg("X"));

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_static("defaults_for", &SolverConfig::defaults_for)
      .def_readwrite("sigma", &SolverConfig::sigma)
      .def_readwrite("tol", &SolverConfig::tol)
      .def_readwrite("k_max", &SolverConfig::k_max)
      .def_readwrite("alpha", &SolverConfig::alpha);

  m.def("F_k", &F_k, py::arg("m"), py::arg("cfg"), py::arg("X"), py::arg("k"));
  m.def("successive_differences", &successive_differences, py::arg("m"), py::arg("cfg"), py::arg("count"));

  py::class_<BottcherCoordinate>(m, "BottcherCoordinate")
      .def_static("build", py::overload_cast<const QAMap&, const SolverConfig&>(&BottcherCoordinate::build),
                  py::arg("m"), py::arg("cfg"))
      .def_static("build", py::overload_cast<const QAMap&>(&BottcherCoordinate::build), py::arg("m"))
      .def_property_readonly("k_used", &BottcherCoordinate::k_used)
      .def_property_readonly("inner_radius", &BottcherCoordinate::inner_radius)
      .def_property_readonly("map", &BottcherCoordinate::map)
      .def_property_readonly("config", &BottcherCoordinate::config)
      .def("psi", &BottcherCoordinate::psi)
      .def("psi_inverse", &BottcherCoordinate::psi_inverse)
      .def("conjugacy_residual", &BottcherCoordinate::conjugacy_residual);

  m.def("psi_dilatation_estimate", &psi_dilatation_estimate, py::arg("b"), py::arg("z"), py::arg("step"));
  m.def("extend_psi", &extend_psi, py::arg("b"), py::arg("z"), py::arg("max_pullbacks") = 1000);
  m.def("extension_domain_probe", py::overload_cast<const QAMap&, int>(&extension_domain_probe), py::arg("m"),
        py::arg("max_iter") = 10000);

  m.def("fixed_rays", &fixed_rays, py::arg("p"));
  m.def("fixed_ray", [](const StretchParams& p) { return fixed_ray(p).phi; }, py::arg("p"));
  m.def("trace_sq", [](const StretchParams& p, double phi) { return trace_sq(p, FixedRay{phi}); }, py::arg("p"),
        py::arg("phi"));
  m.def("cos_phi_lower_bound", &cos_phi_lower_bound, py::arg("K"));
  m.def("mu_fixed_ray", py::overload_cast<const StretchParams&, int>(&mu_fixed_ray), py::arg("p"), py::arg("n"));
  m.def("mu_iterate_general", &mu_iterate_general, py::arg("m"), py::arg("z"), py::arg("n"));
  m.def("distortion_growth", &distortion_growth, py::arg("p"), py::arg("n"));
  m.def("log_distortion_sequence", [](const StretchParams& p, int n) {
    return log_distortion_sequence(p, fixed_ray(p), n);
  }, py::arg("p"), py::arg("n"));

  m.def("render_escape", [](const QAMap& map, cplx center, double width, double height, int nx, int ny,
                            int max_iter, int threads) {
    const GridSpec g = make_grid(center, width, height, nx, ny);
    EscapeField field;
    {
      py::gil_scoped_release release;
      field = render_escape(map, g, max_iter, threads);
    }
    return as_image(field.values, g);
  }, py::arg("m"), py::arg("center") = cplx{}, py::arg("width") = 4.0, py::arg("height") = 4.0,
     py::arg("nx") = 256, py::arg("ny") = 256, py::arg("max_iter") = 256, py::arg("threads") = 0);

  m.def("render_dilatation", [](const QAMap& map, cplx center, double width, double height, int nx, int ny, int n,
                                int threads) {
    const GridSpec g = make_grid(center, width, height, nx, ny);
    DilatationField field;
    {
      py::gil_scoped_release release;
      field = render_dilatation(map, g, n, threads);
    }
    return as_image(field.values, g);
  }, py::arg("m"), py::arg("center") = cplx{}, py::arg("width") = 4.0, py::arg("height") = 4.0,
     py::arg("nx") = 256, py::arg("ny") = 256, py::arg("n") = 8, py::arg("threads") = 0);

  m.attr("SENTINEL") = kSentinel;
}
