/*
 * Copyright 2026 The latgauss Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latgauss/advisor.h"
#include "latgauss/basis_io.h"
#include "latgauss/bounds.h"
#include "latgauss/error.h"
#include "latgauss/gauss_mass.h"
#include "latgauss/lattice.h"
#include "latgauss/sweep.h"
#include "latgauss/verify.h"

namespace py = pybind11;

namespace latgauss {
namespace {

MassOptions WithBudget(std::uint64_t budget) {
  MassOptions options;
  options.enumeration.budget = budget;
  return options;
}

EnumerationOptions EnumBudget(std::uint64_t budget) {
  EnumerationOptions options;
  options.budget = budget;
  return options;
}

}  // namespace
}  // namespace latgauss

PYBIND11_MODULE(_latgauss, m) {
  using namespace latgauss;
  m.doc() = "Lattice Gaussian masses, tail bounds and their verification";

  static py::exception<Error> error_type(m, "LatgaussError",
                                         PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object instance = type(e.what());
      instance.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  const std::uint64_t kBudget = kDefaultEnumerationBudget;

  py::class_<LatticeBasis>(m, "LatticeBasis")
      .def(py::init<Eigen::MatrixXd>(), py::arg("rows"))
      .def_static("identity", &LatticeBasis::Identity, py::arg("n"))
      .def_static("parse", &ParseBasis, py::arg("text"))
      .def_static("read", &ReadBasisFile, py::arg("path"))
      .def_property_readonly("vectors", &LatticeBasis::vectors)
      .def_property_readonly("rank", &LatticeBasis::rank)
      .def_property_readonly("ambient_dim", &LatticeBasis::ambient_dim)
      .def_property_readonly("det", &LatticeBasis::det)
      .def("__repr__", [](const LatticeBasis& b) {
        return "LatticeBasis(rank=" + std::to_string(b.rank()) +
               ", dim=" + std::to_string(b.ambient_dim()) + ")";
      });

  py::class_<GramSchmidt>(m, "GramSchmidt")
      .def_readonly("orthogonal_vectors", &GramSchmidt::orthogonal_vectors)
      .def_readonly("mu", &GramSchmidt::mu)
      .def_readonly("squared_norms", &GramSchmidt::squared_norms);

  m.def("gram_schmidt", &ComputeGramSchmidt, py::arg("basis"));
  m.def("dual_basis", &DualBasis, py::arg("basis"));
  m.def(
      "enumerate_in_ball",
      [](const LatticeBasis& b, const Eigen::VectorXd& center, double radius,
         std::uint64_t budget) {
        std::vector<Eigen::VectorXd> out;
        for (auto& p : EnumerateInBall(b, center, radius, EnumBudget(budget))) {
          out.push_back(std::move(p.vector));
        }
        return out;
      },
      py::arg("basis"), py::arg("center"), py::arg("radius"),
      py::arg("budget") = kBudget,
      "Lattice vectors within the closed ball, sorted by norm then "
      "lexicographically.");
  m.def(
      "successive_minima",
      [](const LatticeBasis& b, std::uint64_t budget) {
        return ComputeSuccessiveMinima(b, EnumBudget(budget)).values;
      },
      py::arg("basis"), py::arg("budget") = kBudget);
  m.def(
      "dist_to_lattice",
      [](const LatticeBasis& b, const Eigen::VectorXd& x, std::uint64_t budget) {
        ClosestVector cv = DistToLattice(b, x, EnumBudget(budget));
        return py::make_tuple(cv.distance, cv.closest.vector);
      },
      py::arg("basis"), py::arg("x"), py::arg("budget") = kBudget,
      "Returns (distance, closest lattice vector).");

  py::class_<MassResult>(m, "MassResult")
      .def_readonly("value", &MassResult::value)
      .def_readonly("tail_bound", &MassResult::tail_bound)
      .def_readonly("radius", &MassResult::radius)
      .def_readonly("points_used", &MassResult::points_used);
  py::class_<ComplexMass>(m, "ComplexMass")
      .def_readonly("real_part", &ComplexMass::real_part)
      .def_readonly("imag_part", &ComplexMass::imag_part)
      .def_readonly("tail_bound", &ComplexMass::tail_bound);
  py::class_<PoissonCheck>(m, "PoissonCheck")
      .def_readonly("lhs", &PoissonCheck::lhs)
      .def_readonly("rhs", &PoissonCheck::rhs)
      .def_readonly("agreement", &PoissonCheck::agreement);

  m.def("rho_point", [](double s, const Eigen::VectorXd& x) {
    return RhoPoint(GaussianParam(s), x);
  }, py::arg("s"), py::arg("x"));
  m.def(
      "coset_mass",
      [](const LatticeBasis& b, const Eigen::VectorXd& t, double s, double tol,
         std::uint64_t budget) {
        return CosetMass(b, t, GaussianParam(s), tol, WithBudget(budget));
      },
      py::arg("basis"), py::arg("t"), py::arg("s"), py::arg("tol") = 1e-9,
      py::arg("budget") = kBudget);
  m.def(
      "excluded_mass",
      [](const LatticeBasis& b, const Eigen::VectorXd& t, double s,
         double threshold, double tol, std::uint64_t budget) {
        return ExcludedMass(b, t, GaussianParam(s), threshold, tol,
                            WithBudget(budget));
      },
      py::arg("basis"), py::arg("t"), py::arg("s"), py::arg("threshold"),
      py::arg("tol") = 1e-9, py::arg("budget") = kBudget);
  m.def(
      "poisson_check",
      [](const LatticeBasis& b, const Eigen::VectorXd& t, double s, double tol,
         std::uint64_t budget) {
        return CheckPoisson(b, t, GaussianParam(s), tol, WithBudget(budget));
      },
      py::arg("basis"), py::arg("t"), py::arg("s"), py::arg("tol") = 1e-9,
      py::arg("budget") = kBudget);

  m.def("classic_bound_log", &ClassicBoundLog, py::arg("c"), py::arg("n"));
  m.def("epsilon_log", &EpsilonLog, py::arg("k"), py::arg("n"));
  m.def("improved_bound_log", &ImprovedBoundLog, py::arg("c"), py::arg("k"),
        py::arg("n"));
  m.def(
      "sandwich_bounds_log",
      [](double r_x, double s, int n) {
        const SandwichLog b = SandwichBoundsLog(r_x, s, n);
        return py::make_tuple(b.lower_log, b.upper_log);
      },
      py::arg("r_x"), py::arg("s"), py::arg("n"));
  m.def(
      "improved_sandwich_log",
      [](double c, double k, int n) {
        const BoundReport r = ImprovedSandwichLog(c, k, n);
        return py::make_tuple(r.log_value, r.regime_ok);
      },
      py::arg("c"), py::arg("k"), py::arg("n"),
      "Returns (log bound, regime_ok).");
  m.def("unified_form_log", &UnifiedFormLog, py::arg("c"), py::arg("n"),
        py::arg("s"), py::arg("r_x"));
  m.def("improvement_ratio_log", &ImprovementRatioLog, py::arg("c"),
        py::arg("n"));

  py::class_<AdviceResult>(m, "AdviceResult")
      .def_readonly("c_min", &AdviceResult::c_min)
      .def_readonly("achieved_log2_bound", &AdviceResult::achieved_log2_bound)
      .def_readonly("gain_log2", &AdviceResult::gain_log2)
      .def_readonly("regime_ok", &AdviceResult::regime_ok);
  m.def("advise", &Advise, py::arg("n"), py::arg("target_log2"),
        py::arg("k") = kImprovedSandwichMinK);

  m.def(
      "bounds_sweep_csv",
      [](const std::vector<int>& n_values, double c_start, double c_stop,
         double c_step, double k, std::optional<LatticeBasis> lattice,
         double s, int precision) {
        SweepSpec spec;
        spec.n_values = n_values;
        spec.c_start = c_start;
        spec.c_stop = c_stop;
        spec.c_step = c_step;
        spec.k = k;
        spec.include_true_ratio = lattice.has_value();
        spec.lattice = std::move(lattice);
        spec.s = s;
        std::ostringstream out;
        WriteSweepCsv(BoundsSweep(spec), precision, out);
        return out.str();
      },
      py::arg("n_values"), py::arg("c_start") = 1.0, py::arg("c_stop") = 3.0,
      py::arg("c_step") = 0.5, py::arg("k") = kImprovedSandwichMinK,
      py::arg("lattice") = py::none(), py::arg("s") = 1.0,
      py::arg("precision") = 15,
      "Bounds sweep as CSV text; a lattice adds measured true ratios.");

  m.def(
      "random_lattice",
      [](int n, std::uint64_t seed, const std::string& style) {
        return RandomLattice(n, seed, ParseLatticeStyle(style));
      },
      py::arg("n"), py::arg("seed"), py::arg("style") = "unimodular_mix");
  m.def(
      "run_suite_jsonl",
      [](const std::optional<std::string>& config_json, bool negative_control) {
        SuiteConfig config =
            config_json ? ParseSuiteConfig(*config_json) : DefaultSuiteConfig();
        config.negative_control = config.negative_control || negative_control;
        std::ostringstream out;
        WriteReport(RunSuite(config), out);
        return out.str();
      },
      py::arg("config_json") = py::none(), py::arg("negative_control") = false,
      "Runs the verification suite and returns the JSON-lines report.");
}
