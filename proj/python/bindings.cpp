// Copyright 2026 The entrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "cli.hpp"
#include "entrack/boundaries.hpp"
#include "entrack/error.hpp"
#include "entrack/numerics.hpp"
#include "entrack/rmt.hpp"
#include "entrack/scenarios.hpp"
#include "entrack/spectral.hpp"

namespace py = pybind11;
using namespace entrack;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Spectrum spectrum_from(const std::vector<double>& values) {
  return make_spectrum(values, values.size(), values.size());
}

py::dict point_dict(const TrajectoryPoint& p) {
  py::dict d;
  d["label"] = p.label;
  d["sequence"] = p.sequence;
  d["alpha"] = p.alpha;
  d["beta"] = p.beta;
  d["lambda0"] = p.lambda0;
  d["entropy"] = p.entropy;
  d["gap"] = p.gap;
  py::dict r;
  for (const auto& [deg, v] : p.renyi) r[py::float_(deg)] = v;
  d["renyi"] = r;
  d["spectrum"] = to_array(p.spectrum);
  return d;
}

py::dict trajectory_dict(const Trajectory& t) {
  py::dict d;
  d["scenario"] = t.scenario;
  py::dict cfg;
  for (const auto& [k, v] : t.config) cfg[py::str(k)] = v;
  d["config"] = cfg;
  d["seeds"] = t.seeds;
  py::list pts;
  for (const auto& p : t.points) pts.append(point_dict(p));
  d["points"] = pts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement trajectories of quantum algorithms";
  m.attr("__version__") = ENTRACK_VERSION;

  // Translators run newest first, so the base class goes in first.
  const auto& base = py::register_exception<Error>(m, "EntrackError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());

  // Spectra of states and density matrices.
  m.def(
      "reduced_spectrum",
      [](std::vector<cplx> amplitudes, std::vector<int> subsystem) {
        int n = 0;
        while ((std::size_t{1} << n) < amplitudes.size()) ++n;
        const StateVector psi = StateVector::from_amplitudes(std::move(amplitudes));
        const Bipartition part = Bipartition::make(n, std::move(subsystem));
        return to_array(spectrum(partial_trace(psi, part)).values);
      },
      py::arg("amplitudes"), py::arg("subsystem"),
      "Descending eigenvalues of the reduced density matrix of the smaller side.");
  m.def(
      "eigvalsh",
      [](py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> a) {
        if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw InvalidInput("eigvalsh needs a square matrix");
        const auto n = static_cast<std::size_t>(a.shape(0));
        ComplexMatrix mat(n, n);
        std::copy(a.data(), a.data() + n * n, mat.data().begin());
        return to_array(eigvalsh(mat));
      },
      py::arg("matrix"));
  m.def("von_neumann", [](const std::vector<double>& v) { return von_neumann(spectrum_from(v)); },
        py::arg("eigenvalues"));
  m.def("renyi", [](const std::vector<double>& v, double d) { return renyi(spectrum_from(v), d); },
        py::arg("eigenvalues"), py::arg("degree"));
  m.def("ent_gap", [](const std::vector<double>& v) { return ent_gap(spectrum_from(v)); },
        py::arg("eigenvalues"));
  m.def("tight_contained",
        py::overload_cast<double, double, std::size_t, double>(&tight_contained),
        py::arg("lambda0"), py::arg("entropy"), py::arg("alpha"), py::arg("tol") = 1e-9);

  // Boundaries.
  namespace b = boundaries;
  m.def("f1", &b::f1, py::arg("lambda0"));
  m.def("f2", &b::f2, py::arg("lambda0"));
  m.def("f3", &b::f3, py::arg("lambda0"), py::arg("alpha"));
  m.def("exact_upper", &b::exact_upper, py::arg("lambda0"), py::arg("alpha"));
  m.def("flexible_E", &b::flexible_E, py::arg("lambda0"), py::arg("alpha"), py::arg("beta"));
  m.def("e_half", &b::e_half, py::arg("alpha"), py::arg("beta"));
  m.def("page_entropy", &b::page_entropy, py::arg("alpha"), py::arg("beta"));
  m.def("f_shor", &b::f_shor, py::arg("x"));
  m.def("g1", &b::g1, py::arg("lambda0"));
  m.def("g3", &b::g3, py::arg("lambda0"), py::arg("alpha"));
  m.def("flexible_gap", &b::flexible_gap, py::arg("lambda0"), py::arg("alpha"), py::arg("beta"));
  m.def("g_shor", &b::g_shor, py::arg("x"));
  m.def("renyi_flexible", &b::renyi_flexible, py::arg("lambda0"), py::arg("alpha"), py::arg("degree"));
  m.def("mpd_density", &b::mpd_density, py::arg("x"), py::arg("sigma"), py::arg("ratio"));
  m.def("mpd_edges", [](double sigma, double ratio) {
    const auto e = b::mpd_edges(sigma, ratio);
    return py::make_tuple(e.lower, e.upper);
  }, py::arg("sigma"), py::arg("ratio"));
  m.def("table_coefficient", &table_coefficient, py::arg("degree"));
  m.def(
      "sample_curve",
      [](const std::string& name, double alpha, double beta, double sigma, int degree, int points) {
        const auto c = b::parse_curve_name(name);
        if (!c) throw InvalidInput("unknown curve '" + name + "'");
        const b::CurveParams params{alpha, beta, sigma, degree};
        const auto curve = b::sample_curve(*c, params, b::default_grid(*c, params, points));
        std::vector<double> xs, ys;
        for (const auto& [x, y] : curve.samples) xs.push_back(x), ys.push_back(y);
        return py::make_tuple(to_array(xs), to_array(ys));
      },
      py::arg("name"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("sigma") = 1.0,
      py::arg("degree") = 2, py::arg("points") = 200);

  // Random matrices.
  m.def("sample_random_rho",
        [](std::size_t alpha, std::size_t beta, std::uint64_t seed, double gamma) {
          return to_array(rmt::sample_random_rho(alpha, beta, seed, gamma).values);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("seed"), py::arg("gamma") = 0.0);
  m.def("sample_wishart",
        [](std::size_t alpha, std::size_t beta, double gamma, double sigma, std::size_t samples,
           std::uint64_t seed, unsigned threads) {
          py::list out;
          for (const auto& s : rmt::sample_wishart({alpha, beta, gamma, sigma, samples, seed},
                                                   rmt::WishartMethod::Auto, threads))
            out.append(to_array(s.values));
          return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma") = 0.0, py::arg("sigma") = 1.0,
        py::arg("samples") = 1, py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("page_mc",
        [](std::size_t alpha, std::size_t beta, std::size_t samples, std::uint64_t seed,
           unsigned threads) {
          const auto e = rmt::page_mc(alpha, beta, samples, seed, threads);
          return py::make_tuple(e.mean, e.std_error);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("samples"), py::arg("seed"),
        py::arg("threads") = 1);

  // Scenarios.
  m.def("omega", &omega, py::arg("x"));
  m.def("grover_iterations", &grover_iterations, py::arg("n"), py::arg("marked"));
  m.def("prime_trajectory", [](int n, bool qft) { return trajectory_dict(prime_trajectory(n, qft)); },
        py::arg("n"), py::arg("qft") = false);
  m.def(
      "shor",
      [](std::uint64_t N, std::uint64_t a, std::uint64_t seed) {
        const ShorResult r = shor_trajectory({N, a, seed});
        py::dict d = trajectory_dict(r.trajectory);
        d["success"] = r.success;
        d["factors"] = r.factors;
        d["bits"] = r.bits;
        d["order"] = r.order ? py::cast(*r.order) : py::none();
        d["failure"] = r.failure;
        return d;
      },
      py::arg("N"), py::arg("a"), py::arg("seed"));
  m.def(
      "grover_ec",
      [](const std::filesystem::path& instance, std::uint64_t seed) {
        const GroverResult r = grover_ec_trajectory(ECInstance::load(instance), seed);
        py::dict d = trajectory_dict(r.trajectory);
        d["iterations"] = r.iterations;
        d["success_probability"] = r.success_probability;
        return d;
      },
      py::arg("instance"), py::arg("seed"));
  m.def(
      "adiabatic",
      [](const std::filesystem::path& instance, int partitions, std::uint64_t seed, double s_step,
         unsigned threads) {
        return trajectory_dict(
            adiabatic_trajectory(ECInstance::load(instance), {s_step, partitions, seed, threads}));
      },
      py::arg("instance"), py::arg("partitions") = 3, py::arg("seed") = 0,
      py::arg("s_step") = 0.1, py::arg("threads") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (code, stdout, stderr).");
}
