#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locc/asymmetry.hpp"
#include "locc/constructions.hpp"
#include "locc/detector.hpp"
#include "locc/setio.hpp"
#include "locc/witness.hpp"

namespace py = pybind11;
using namespace locc;

PYBIND11_MODULE(_loccdetect, m) {
  m.doc() = "local-distinguishability certificate toolkit";

  py::enum_<Verdict>(m, "Verdict")
      .value("CertifiedLoccIndistinguishable", Verdict::CertifiedLoccIndistinguishable)
      .value("Inconclusive", Verdict::Inconclusive);

  py::enum_<Party>(m, "Party").value("Alice", Party::Alice).value("Bob", Party::Bob);
  py::enum_<XiVariant>(m, "XiVariant")
      .value("ExtraOnce", XiVariant::ExtraOnce)
      .value("FullProduct", XiVariant::FullProduct);

  py::class_<WeylStructure>(m, "WeylStructure")
      .def(py::init<>())
      .def_readwrite("factors", &WeylStructure::factors)
      .def("total_dim", &WeylStructure::total_dim)
      .def("phase_order", &WeylStructure::phase_order);

  py::class_<WeylLabel>(m, "WeylLabel")
      .def(py::init<>())
      .def_readwrite("exps", &WeylLabel::exps)
      .def("is_identity", &WeylLabel::is_identity)
      .def("__eq__", [](const WeylLabel& a, const WeylLabel& b) { return a == b; })
      .def("__lt__", [](const WeylLabel& a, const WeylLabel& b) { return a < b; })
      .def("__hash__", [](const WeylLabel& l) {
        std::size_t h = 0;
        for (const auto& [s, t] : l.exps) h = h * 1000003 + s * 131 + t;
        return h;
      });

  py::class_<MesSet>(m, "MesSet")
      .def(py::init<>())
      .def_readwrite("structure", &MesSet::structure)
      .def_readwrite("labels", &MesSet::labels)
      .def_readwrite("matrices", &MesSet::matrices)
      .def_readwrite("name", &MesSet::name)
      .def("label_backed", &MesSet::label_backed)
      .def("__len__", &MesSet::size);

  py::class_<CriterionReport>(m, "CriterionReport")
      .def_readonly("set_size", &CriterionReport::set_size)
      .def_readonly("dim", &CriterionReport::dim)
      .def_readonly("kernel", &CriterionReport::kernel)
      .def_readonly("difference", &CriterionReport::difference)
      .def_readonly("verdict", &CriterionReport::verdict);

  py::class_<OrthogonalityCheck>(m, "OrthogonalityCheck")
      .def_readonly("orthogonal", &OrthogonalityCheck::orthogonal)
      .def_readonly("max_violation", &OrthogonalityCheck::max_violation);

  m.def("qudit_structure", &qudit_structure);
  m.def("qubits_structure", &qubits_structure);
  m.def("qudit_label", &qudit_label);
  m.def("identity_label", &identity_label);
  m.def("label_to_string", &label_to_string);
  m.def("check_orthogonality", &check_orthogonality, py::arg("set"), py::arg("tol") = 1e-10);
  m.def("lemma_verdict", &lemma_verdict, py::arg("set"), py::arg("with_gamma_table") = false);
  m.def("verdict_to_string", &verdict_to_string);
  m.def("kernel_set", &kernel_set);
  m.def("difference_set", &difference_set);
  m.def("gamma_complex", [](const MesSet& set, const WeylLabel& u) {
    return gamma(set, u).to_complex();
  });

  m.def("gamma_d_set", &gamma_d_set);
  m.def("gamma_e_set", &gamma_e_set);
  m.def("named_example", &named_example);
  m.def("build_unitary", &build_unitary);
  m.def("mes_vector", &mes_vector);
  m.def("xi_members", [](unsigned d, XiVariant v) { return xi_set(d, v).members; },
        py::arg("d"), py::arg("variant") = XiVariant::ExtraOnce);

  py::class_<KminRow>(m, "KminRow")
      .def_readonly("dim", &KminRow::dim)
      .def_readonly("kmin", &KminRow::kmin)
      .def_readonly("rule", &KminRow::rule)
      .def_readonly("theorem", &KminRow::theorem);
  m.def("kmin_table", &kmin_table);

  py::class_<DetectorState>(m, "DetectorState")
      .def_readonly("t_matrix", &DetectorState::t_matrix)
      .def_readonly("d", &DetectorState::d)
      .def_readonly("d_aux", &DetectorState::d_aux)
      .def("lambda1", &DetectorState::lambda1)
      .def("trace_norm_sq", &DetectorState::trace_norm_sq);
  m.def("build_detector_theorem2", &build_detector_theorem2);
  m.def("theorem2_analytic_bound", &theorem2_analytic_bound);
  m.def("nielsen_transfer_possible", &nielsen_transfer_possible);
  m.def("twirl", &twirl);
  py::class_<AsymmetricBoundResult>(m, "AsymmetricBoundResult")
      .def_readonly("bound", &AsymmetricBoundResult::bound)
      .def_readonly("lambda1_numeric", &AsymmetricBoundResult::lambda1_numeric)
      .def_readonly("twirl_deviation", &AsymmetricBoundResult::twirl_deviation);
  m.def("asymmetric_bound", &asymmetric_bound);

  py::class_<ProductStateSet>(m, "ProductStateSet")
      .def_readonly("dim", &ProductStateSet::dim)
      .def_readonly("pairs", &ProductStateSet::pairs)
      .def_readonly("extension", &ProductStateSet::extension);
  m.def("theorem1_product_set", &theorem1_product_set);

  py::class_<FirstMoveReport>(m, "FirstMoveReport")
      .def_readonly("solution_dim", &FirstMoveReport::solution_dim)
      .def_readonly("nontrivial_exists", &FirstMoveReport::nontrivial_exists)
      .def_readonly("witness", &FirstMoveReport::witness)
      .def_readonly("witness_epsilon", &FirstMoveReport::witness_epsilon);
  m.def("first_move_report",
        py::overload_cast<const ProductStateSet&, Party>(&first_move_report));
  m.def("first_move_report_mes",
        py::overload_cast<const MesSet&, Party>(&first_move_report));
  m.def("locally_indistinguishable_by_symmetry", &locally_indistinguishable_by_symmetry);

  py::class_<ContradictionLedger>(m, "ContradictionLedger")
      .def_readonly("d", &ContradictionLedger::d)
      .def_readonly("xi_size", &ContradictionLedger::xi_size)
      .def_readonly("xi_size_full", &ContradictionLedger::xi_size_full)
      .def_readonly("trace_H_2d", &ContradictionLedger::trace_H_2d)
      .def_readonly("sigma", &ContradictionLedger::sigma)
      .def_readonly("consistent", &ContradictionLedger::consistent);
  m.def("contradiction_ledger", &contradiction_ledger);
  m.def("dominance_check", &dominance_check);

  py::class_<RankObstructionTrace>(m, "RankObstructionTrace")
      .def_readonly("p", &RankObstructionTrace::p)
      .def_readonly("contradiction_index", &RankObstructionTrace::contradiction_index)
      .def_readonly("modulus_offsets", &RankObstructionTrace::modulus_offsets)
      .def_readonly("zero_offsets", &RankObstructionTrace::zero_offsets)
      .def_readonly("colliding_offset", &RankObstructionTrace::colliding_offset)
      .def_readonly("first_collision_step", &RankObstructionTrace::first_collision_step)
      .def_readonly("contradiction", &RankObstructionTrace::contradiction);
  m.def("rank_obstruction", &rank_obstruction);

  py::class_<FalsifierReport>(m, "FalsifierReport")
      .def_readonly("p", &FalsifierReport::p)
      .def_readonly("samples", &FalsifierReport::samples)
      .def_readonly("seed", &FalsifierReport::seed)
      .def_readonly("min_residual", &FalsifierReport::min_residual)
      .def_readonly("collapsed", &FalsifierReport::collapsed)
      .def_readonly("feasible_found", &FalsifierReport::feasible_found);
  m.def("rank2_falsifier", &rank2_falsifier);

  m.def("parse_set_json", &parse_set_json);
  m.def("set_to_json", &set_to_json);
  m.def("load_set_file", &load_set_file);
}
