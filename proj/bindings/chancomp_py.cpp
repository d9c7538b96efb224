// Copyright 2026 chancomp contributors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "chancomp/clifford.hpp"
#include "chancomp/diamond.hpp"
#include "chancomp/dynamics.hpp"
#include "chancomp/groups.hpp"
#include "chancomp/io.hpp"

namespace py = pybind11;
using namespace chancomp;

PYBIND11_MODULE(_chancomp, m) {
  m.doc() = "Certified Lipschitz complexity of finite-dimensional quantum channels";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CptpError>(m, "CptpError", PyExc_ValueError);
  py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  // ---- channels -----------------------------------------------------------
  py::class_<QuantumChannel>(m, "QuantumChannel")
      .def_static("from_kraus", &QuantumChannel::from_kraus, py::arg("kraus"))
      .def_static("from_superop", &QuantumChannel::from_superop, py::arg("superop"))
      .def_static("identity", &QuantumChannel::identity_channel, py::arg("dim"))
      .def_property_readonly("dim", &QuantumChannel::dim)
      .def_property_readonly("kraus", &QuantumChannel::kraus)
      .def_property_readonly("superop", &QuantumChannel::superop)
      .def_property_readonly("choi", &QuantumChannel::choi)
      .def("apply", &QuantumChannel::apply, py::arg("x"), py::arg("dual") = false)
      .def("__repr__", [](const QuantumChannel& c) {
        return "<QuantumChannel dim=" + std::to_string(c.dim()) + ">";
      });

  py::enum_<CombineKind>(m, "CombineKind")
      .value("Compose", CombineKind::Compose)
      .value("Mix", CombineKind::Mix)
      .value("Tensor", CombineKind::Tensor);
  m.def("combine", &combine, py::arg("kind"), py::arg("channels"),
        py::arg("weights") = std::vector<double>{});
  m.def("unitary_mixture", &unitary_mixture, py::arg("unitaries"), py::arg("mu"));

  m.def("identity", &identity, py::arg("dim"));
  m.def("pauli_x", &pauli_x);
  m.def("pauli_y", &pauli_y);
  m.def("pauli_z", &pauli_z);
  m.def("kron", &kron, py::arg("a"), py::arg("b"));

  // ---- resources ----------------------------------------------------------
  py::class_<ResourceSet> rs(m, "ResourceSet");
  py::enum_<ResourceSet::Kind>(rs, "Kind")
      .value("Discrete", ResourceSet::Kind::Discrete)
      .value("Continuous", ResourceSet::Kind::Continuous);
  rs.def(py::init([](ResourceSet::Kind kind, int dim, std::vector<ComplexMatrix> elements) {
          ResourceSet r;
          r.kind = kind;
          r.dim = dim;
          r.elements = std::move(elements);
          r.validate();
          return r;
        }),
        py::arg("kind"), py::arg("dim"), py::arg("elements"))
      .def_readonly("kind", &ResourceSet::kind)
      .def_readonly("dim", &ResourceSet::dim)
      .def_readonly("elements", &ResourceSet::elements)
      .def_readonly("symmetrized", &ResourceSet::symmetrized);
  m.def("symmetrize", &symmetrize, py::arg("resource"));
  m.def("join_resources", &join_resources, py::arg("parts"));
  m.def("amplify_resource", &amplify_resource, py::arg("resource"), py::arg("ancilla_dim"));

  py::enum_<NormVariant>(m, "NormVariant")
      .value("Inf", NormVariant::Inf)
      .value("L2", NormVariant::L2)
      .value("Gradient", NormVariant::Gradient);

  py::class_<LipschitzStructure>(m, "LipschitzStructure")
      .def_readonly("commutant_basis", &LipschitzStructure::commutant_basis)
      .def_readonly("mean_zero_basis", &LipschitzStructure::mean_zero_basis)
      .def_readonly("active_count", &LipschitzStructure::active_count)
      .def_readonly("lambda_gap", &LipschitzStructure::lambda_gap)
      .def_property_readonly("dim", &LipschitzStructure::dim)
      .def_property_readonly("mean_zero_dim", &LipschitzStructure::mean_zero_dim)
      .def_property_readonly("efix", [](const LipschitzStructure& l) { return l.efix(); });
  m.def("build_structure", &build_structure, py::arg("resource"));
  m.def("lipschitz_norm", &lipschitz_norm, py::arg("x"), py::arg("structure"),
        py::arg("variant") = NormVariant::Inf);
  m.def("mean_zero_project", &mean_zero_project, py::arg("x"), py::arg("structure"));

  // ---- estimation ---------------------------------------------------------
  py::class_<Certificate>(m, "Certificate")
      .def_readonly("name", &Certificate::name)
      .def_readonly("value", &Certificate::value);

  py::class_<ComplexityEstimate>(m, "ComplexityEstimate")
      .def_readonly("lower", &ComplexityEstimate::lower)
      .def_readonly("upper", &ComplexityEstimate::upper)
      .def_readonly("witness", &ComplexityEstimate::witness)
      .def_readonly("certificates", &ComplexityEstimate::certificates)
      .def_readonly("iterations", &ComplexityEstimate::iterations)
      .def_readonly("seed", &ComplexityEstimate::seed)
      .def_readonly("warnings", &ComplexityEstimate::warnings)
      .def("__repr__", [](const ComplexityEstimate& e) {
        return "<ComplexityEstimate [" + std::to_string(e.lower) + ", " +
               std::to_string(e.upper) + "]>";
      });

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("seed", &SolveOptions::seed)
      .def_readwrite("restarts", &SolveOptions::restarts)
      .def_readwrite("ascent_iters", &SolveOptions::ascent_iters)
      .def_readwrite("step0", &SolveOptions::step0)
      .def_readwrite("tol", &SolveOptions::tol)
      .def_readwrite("lower_target", &SolveOptions::lower_target)
      .def_readwrite("use_diamond_certificate", &SolveOptions::use_diamond_certificate)
      .def_readwrite("ancilla_levels", &SolveOptions::ancilla_levels)
      .def_readwrite("extra_starts", &SolveOptions::extra_starts);

  m.def("complexity_estimate", &complexity_estimate, py::arg("channel"), py::arg("structure"),
        py::arg("options") = SolveOptions{});
  m.def("expected_length", &expected_length, py::arg("structure"),
        py::arg("options") = SolveOptions{});
  m.def("cb_complexity_estimate", &cb_complexity_estimate, py::arg("channel"),
        py::arg("structure"), py::arg("options") = SolveOptions{});

  py::class_<IntervalResult>(m, "IntervalResult")
      .def_readonly("lower", &IntervalResult::lower)
      .def_readonly("upper", &IntervalResult::upper);
  m.def("inf_to_inf_norm", &inf_to_inf_norm, py::arg("superop"),
        py::arg("options") = SolveOptions{});
  m.def("wasserstein_norm", &wasserstein_norm, py::arg("rho"), py::arg("structure"),
        py::arg("options") = SolveOptions{});

  py::class_<IndexResult>(m, "IndexResult")
      .def_readonly("lower", &IndexResult::lower)
      .def_readonly("upper", &IndexResult::upper)
      .def_readonly("upper_certified", &IndexResult::upper_certified);
  m.def("subalgebra_index", &subalgebra_index, py::arg("structure"),
        py::arg("options") = SolveOptions{});

  py::class_<EntropyTransportReport>(m, "EntropyTransportReport")
      .def_readonly("relative_entropy", &EntropyTransportReport::relative_entropy)
      .def_readonly("wasserstein_lower", &EntropyTransportReport::wasserstein_lower)
      .def_readonly("wasserstein_upper", &EntropyTransportReport::wasserstein_upper)
      .def_readonly("transport_rhs", &EntropyTransportReport::transport_rhs)
      .def_readonly("holds", &EntropyTransportReport::holds)
      .def_readonly("empirical_lambda", &EntropyTransportReport::empirical_lambda);
  m.def("entropy_transport_check", &entropy_transport_check, py::arg("rho"),
        py::arg("structure"), py::arg("mlsi_lambda"), py::arg("options") = SolveOptions{});

  // ---- diamond norm -------------------------------------------------------
  py::class_<DiamondResult>(m, "DiamondResult")
      .def_readonly("value", &DiamondResult::value)
      .def_readonly("lower", &DiamondResult::lower)
      .def_readonly("upper", &DiamondResult::upper)
      .def_readonly("gap", &DiamondResult::gap)
      .def_readonly("iterations", &DiamondResult::iterations);
  m.def("diamond_norm_superop", &diamond_norm_superop, py::arg("superop"));
  m.def("diamond_distance", &diamond_distance, py::arg("a"), py::arg("b"));

  // ---- dynamics -----------------------------------------------------------
  py::class_<SemigroupFamily> sf(m, "SemigroupFamily");
  py::enum_<SemigroupFamily::Kind>(sf, "Kind")
      .value("Discrete", SemigroupFamily::Kind::Discrete)
      .value("Lindblad", SemigroupFamily::Kind::Lindblad);
  sf.def_readonly("kind", &SemigroupFamily::kind)
      .def_readonly("dim", &SemigroupFamily::dim)
      .def_readonly("generator", &SemigroupFamily::generator)
      .def_readonly("structure", &SemigroupFamily::structure);
  m.def("make_semigroup", &make_semigroup, py::arg("kind"), py::arg("resource"),
        py::arg("mu") = std::vector<double>{});
  m.def("evolve", &evolve, py::arg("semigroup"), py::arg("t"));

  py::enum_<ReturnNorm>(m, "ReturnNorm")
      .value("Diamond", ReturnNorm::Diamond)
      .value("InfInfUpper", ReturnNorm::InfInfUpper);
  m.def("return_time", &return_time, py::arg("semigroup"), py::arg("eps"),
        py::arg("norm") = ReturnNorm::Diamond);

  py::class_<TrajectoryPoint>(m, "TrajectoryPoint")
      .def_readonly("time", &TrajectoryPoint::time)
      .def_readonly("estimate", &TrajectoryPoint::estimate)
      .def_readonly("regime", &TrajectoryPoint::regime);
  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("points", &TrajectoryRecord::points)
      .def_readonly("return_time_half", &TrajectoryRecord::return_time_half)
      .def_readonly("plateau", &TrajectoryRecord::plateau);
  m.def("complexity_trajectory", &complexity_trajectory, py::arg("semigroup"), py::arg("grid"),
        py::arg("options") = SolveOptions{});
  m.def("default_time_grid", &default_time_grid, py::arg("semigroup"));

  // ---- groups -------------------------------------------------------------
  py::class_<GroupTable>(m, "GroupTable")
      .def_readonly("dim", &GroupTable::dim)
      .def_readonly("elements", &GroupTable::elements)
      .def_readonly("word_length", &GroupTable::word_length)
      .def_readonly("diameter", &GroupTable::diameter);
  m.def("group_closure", &group_closure, py::arg("generators"), py::arg("max_order") = 512);
  py::class_<LengthStats>(m, "LengthStats")
      .def_readonly("mean", &LengthStats::mean)
      .def_readonly("diameter", &LengthStats::diameter)
      .def_readonly("counts", &LengthStats::counts);
  m.def("length_statistics", &length_statistics, py::arg("table"));
  m.def("mean_word_length", &mean_word_length, py::arg("resource"), py::arg("max_order") = 512);
  py::class_<CommutativeLengthCheck>(m, "CommutativeLengthCheck")
      .def_readonly("order", &CommutativeLengthCheck::order)
      .def_readonly("mean_length", &CommutativeLengthCheck::mean_length)
      .def_readonly("diameter", &CommutativeLengthCheck::diameter)
      .def_readonly("estimate", &CommutativeLengthCheck::estimate)
      .def_readonly("width", &CommutativeLengthCheck::width);
  m.def("verify_expected_length_commutative", &verify_expected_length_commutative,
        py::arg("generator_perms"), py::arg("options") = SolveOptions{});

  // ---- local structure on qubits -----------------------------------------
  py::class_<PauliResource>(m, "PauliResource")
      .def_readonly("n", &PauliResource::n)
      .def_readonly("set", &PauliResource::set);
  m.def("pauli_resources", &pauli_resources, py::arg("n"));
  m.def("site_expectation", &site_expectation, py::arg("x"), py::arg("n"), py::arg("site"));
  m.def("l_norm", &l_norm, py::arg("x"), py::arg("n"));
  py::class_<NormEquivalenceReport>(m, "NormEquivalenceReport")
      .def_readonly("samples", &NormEquivalenceReport::samples)
      .def_readonly("skipped", &NormEquivalenceReport::skipped)
      .def_readonly("min_ratio", &NormEquivalenceReport::min_ratio)
      .def_readonly("max_ratio", &NormEquivalenceReport::max_ratio)
      .def_readonly("holds", &NormEquivalenceReport::holds);
  m.def("norm_equivalence_check", &norm_equivalence_check, py::arg("samples"), py::arg("n"),
        py::arg("seed") = 7);

  // ---- io -----------------------------------------------------------------
  m.def("load_channel", &load_channel, py::arg("path"));
  m.def("save_channel", &save_channel, py::arg("path"), py::arg("channel"));
  m.def("load_resource", &load_resource, py::arg("path"));
  m.def("save_resource", &save_resource, py::arg("path"), py::arg("resource"));
  m.def("save_estimate", &save_estimate, py::arg("path"), py::arg("estimate"));
}
