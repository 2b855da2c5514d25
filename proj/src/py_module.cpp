#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghzhs/errors.hpp"
#include "ghzhs/hsdecomp.hpp"
#include "ghzhs/interferometer.hpp"
#include "ghzhs/locality.hpp"
#include "ghzhs/qstate.hpp"
#include "ghzhs/rng.hpp"

namespace py = pybind11;
using namespace ghzhs;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-qubit states in the Pauli (Hilbert-Schmidt) decomposition, the GHZ "
              "three-arm interferometer, and locality verification";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<PureState>(m, "PureState")
        .def(py::init<int, Eigen::VectorXcd>(), py::arg("n_parties"), py::arg("amplitudes"))
        .def_property_readonly("n_parties", &PureState::n_parties)
        .def_property_readonly("amplitudes", &PureState::amplitudes);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<int, Eigen::MatrixXcd>(), py::arg("n_parties"), py::arg("entries"))
        .def_property_readonly("n_parties", &DensityMatrix::n_parties)
        .def_property_readonly("entries", &DensityMatrix::entries)
        .def("purity", &DensityMatrix::purity);

    py::class_<LocalUnitary>(m, "LocalUnitary")
        .def(py::init<int, Eigen::Matrix2cd>(), py::arg("party"), py::arg("matrix"))
        .def_property_readonly("party", &LocalUnitary::party)
        .def_property_readonly("matrix", &LocalUnitary::matrix);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init<std::vector<int>>(), py::arg("labels"))
        .def_static("from_string", &PauliString::from_string, py::arg("text"))
        .def_static("from_index", &PauliString::from_index, py::arg("n_parties"),
                    py::arg("index"))
        .def_property_readonly("labels", &PauliString::labels)
        .def_property_readonly("n_parties", &PauliString::n_parties)
        .def("weight", &PauliString::weight)
        .def("index", &PauliString::index)
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString& s) { return "PauliString('" + s.str() + "')"; });

    py::class_<CoefficientTensor>(m, "CoefficientTensor")
        .def(py::init<int, std::vector<double>>(), py::arg("n_parties"), py::arg("coefficients"))
        .def_property_readonly("n_parties", &CoefficientTensor::n_parties)
        .def_property_readonly("coefficients", &CoefficientTensor::coefficients)
        .def("coefficient",
             [](const CoefficientTensor& c, const std::string& s) {
                 return c.coefficient(PauliString::from_string(s));
             },
             py::arg("pauli_string"))
        .def("unit", &CoefficientTensor::unit)
        .def("purity_sum", &CoefficientTensor::purity_sum)
        .def("r", &CoefficientTensor::r)
        .def("s", &CoefficientTensor::s)
        .def("p", &CoefficientTensor::p)
        .def("q_ab", &CoefficientTensor::q_ab)
        .def("o_ac", &CoefficientTensor::o_ac)
        .def("t_bc", &CoefficientTensor::t_bc)
        .def("R", &CoefficientTensor::R, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

    py::class_<RotationMatrix>(m, "RotationMatrix")
        .def(py::init<Eigen::Matrix3d>(), py::arg("matrix"))
        .def_static("identity", &RotationMatrix::identity)
        .def_property_readonly("matrix", &RotationMatrix::matrix);

    py::class_<PhaseSettings>(m, "PhaseSettings")
        .def(py::init<double, double, double>(), py::arg("phi1"), py::arg("phi2"),
             py::arg("phi3"))
        .def_readonly("phi1", &PhaseSettings::phi1)
        .def_readonly("phi2", &PhaseSettings::phi2)
        .def_readonly("phi3", &PhaseSettings::phi3)
        .def("sum", &PhaseSettings::sum);

    py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
        .def_property_readonly("probabilities",
                               [](const OutcomeDistribution& d) {
                                   return std::vector<double>(d.probabilities().begin(),
                                                              d.probabilities().end());
                               })
        .def("probability", &OutcomeDistribution::probability, py::arg("outcome"))
        .def("correlation", &OutcomeDistribution::correlation);

    py::class_<GhszReport>(m, "GhszReport")
        .def_readonly("settings", &GhszReport::settings)
        .def_readonly("correlations", &GhszReport::correlations)
        .def_readonly("product", &GhszReport::product)
        .def_readonly("local_realist_fourth", &GhszReport::local_realist_fourth)
        .def_readonly("max_lhv_constraints", &GhszReport::max_lhv_constraints)
        .def_readonly("contradiction", &GhszReport::contradiction);

    py::class_<BlockDeviation>(m, "BlockDeviation")
        .def_readonly("block", &BlockDeviation::block)
        .def_readonly("max_abs_deviation", &BlockDeviation::max_abs_deviation);

    py::class_<LocalityReport>(m, "LocalityReport")
        .def_readonly("acted_party", &LocalityReport::acted_party)
        .def_readonly("tolerance", &LocalityReport::tolerance)
        .def_readonly("unchanged_blocks", &LocalityReport::unchanged_blocks)
        .def_readonly("changed_blocks", &LocalityReport::changed_blocks)
        .def_readonly("marginal_deviation", &LocalityReport::marginal_deviation)
        .def_readonly("passed", &LocalityReport::pass)
        .def("worst_unchanged", &LocalityReport::worst_unchanged)
        .def("worst_changed", &LocalityReport::worst_changed);

    py::class_<LocalitySweepReport>(m, "LocalitySweepReport")
        .def_readonly("acted_party", &LocalitySweepReport::acted_party)
        .def_readonly("n_trials", &LocalitySweepReport::n_trials)
        .def_readonly("seed", &LocalitySweepReport::seed)
        .def_readonly("tolerance", &LocalitySweepReport::tolerance)
        .def_readonly("worst_unchanged_deviation",
                      &LocalitySweepReport::worst_unchanged_deviation)
        .def_readonly("worst_marginal_deviation",
                      &LocalitySweepReport::worst_marginal_deviation)
        .def_readonly("worst_changed_deviation", &LocalitySweepReport::worst_changed_deviation)
        .def_readonly("passed", &LocalitySweepReport::pass);

    m.def("ghz_pure", &ghz_pure);
    m.def("ghz_density", &ghz_density);
    m.def("pure_to_density", &pure_to_density, py::arg("state"));
    m.def("apply_local_unitary", &apply_local_unitary, py::arg("rho"), py::arg("u"));
    m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("keep"));
    m.def("random_density", &random_density, py::arg("seed"), py::arg("n_parties"),
          py::arg("rank"));

    m.def("pauli_string_matrix", &pauli_string_matrix, py::arg("s"));
    m.def("decompose", py::overload_cast<const DensityMatrix&>(&decompose), py::arg("rho"));
    m.def("decompose", py::overload_cast<int, const Eigen::MatrixXcd&>(&decompose),
          py::arg("n_parties"), py::arg("hermitian"));
    m.def("reconstruct", &reconstruct, py::arg("coeffs"));
    m.def("reconstruct_density", &reconstruct_density, py::arg("coeffs"));
    m.def("su2_to_so3", &su2_to_so3, py::arg("u"));
    m.def("rotate_frame", &rotate_frame, py::arg("coeffs"), py::arg("rotations"));
    m.def("transform_under_local_unitary", &transform_under_local_unitary, py::arg("coeffs"),
          py::arg("u"));

    m.def("beam_splitter_unitary", &beam_splitter_unitary, py::arg("phi"));
    m.def("evolve_ghz", &evolve_ghz, py::arg("settings"));
    m.def("correlation", &correlation, py::arg("settings"));
    m.def("ghsz_contradiction_report", &ghsz_contradiction_report);
    m.def("sample_outcomes", &sample_outcomes, py::arg("settings"), py::arg("count"),
          py::arg("seed"));
    m.def("outcome_label", &outcome_label, py::arg("outcome"));

    m.def("verify_locality", &verify_locality, py::arg("rho"), py::arg("u"), py::arg("tol"));
    m.def("locality_sweep", &locality_sweep, py::arg("rho"), py::arg("party"),
          py::arg("n_trials"), py::arg("seed"), py::arg("tol"),
          py::arg("identity_only") = false);
}
