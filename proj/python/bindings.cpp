#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "privnet/bounds.hpp"
#include "privnet/commands.hpp"
#include "privnet/error.hpp"
#include "privnet/figures.hpp"
#include "privnet/linalg.hpp"
#include "privnet/measures.hpp"
#include "privnet/scheme.hpp"
#include "privnet/states.hpp"
#include "privnet/verify.hpp"

namespace py = pybind11;
using namespace privnet;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw Error(ErrorCode::StructureMismatch, "expected a square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  std::vector<Complex> data(a.data(), a.data() + n * n);
  return CMatrix(n, std::move(data));
}

ComplexArray to_array(const CMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  ComplexArray out({n, n});
  const auto d = m.data();
  std::copy(d.begin(), d.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_privnet, m) {
  m.doc() = "Private states, repeater-rate bounds and memory-overhead planning";

  // Messages read "Code: detail", e.g. "DomainError: swap-pbit needs d_s >= 2".
  py::register_exception<Error>(m, "PrivnetError", PyExc_ValueError);

  // linear algebra
  m.def("trace_norm", [](const ComplexArray& a) { return trace_norm(to_matrix(a)); });
  m.def("singular_values", [](const ComplexArray& a) { return singular_values(to_matrix(a)); });
  m.def("eigvalsh", [](const ComplexArray& a) { return herm_eigenvalues(to_matrix(a)); });
  m.def(
      "partial_transpose",
      [](const ComplexArray& a, std::vector<std::size_t> dims, std::vector<std::size_t> factors) {
        return to_array(partial_transpose(to_matrix(a), TensorStructure(std::move(dims)), factors));
      },
      py::arg("matrix"), py::arg("dims"), py::arg("factors"));
  m.def(
      "partial_trace",
      [](const ComplexArray& a, std::vector<std::size_t> dims, std::vector<std::size_t> keep) {
        return to_array(partial_trace(to_matrix(a), TensorStructure(std::move(dims)), keep));
      },
      py::arg("matrix"), py::arg("dims"), py::arg("keep"));
  m.def("von_neumann_entropy", [](const ComplexArray& a) { return von_neumann_entropy(to_matrix(a)); });
  m.def("binary_entropy", &binary_entropy);

  // states
  py::class_<KeyShieldState>(m, "KeyShieldState")
      .def(py::init([](const ComplexArray& a, std::size_t dk, std::size_t ds) {
             return KeyShieldState(to_matrix(a), dk, ds);
           }),
           py::arg("matrix"), py::arg("key_dim"), py::arg("shield_dim"))
      .def_property_readonly("matrix", [](const KeyShieldState& s) { return to_array(s.matrix()); })
      .def_property_readonly("key_dim", &KeyShieldState::key_dim)
      .def_property_readonly("shield_dim", &KeyShieldState::shield_dim)
      .def_property_readonly("is_private", [](const KeyShieldState& s) { return s.flags().private_by_construction; })
      .def("partial_transpose_bob", [](const KeyShieldState& s) { return to_array(s.partial_transpose_bob()); })
      .def("block", [](const KeyShieldState& s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return to_array(block(s, i, j, k, l));
      });
  m.def("swap_pbit", &swap_pbit, py::arg("shield_dim"));
  m.def("max_entangled", &max_entangled, py::arg("d"));
  m.def(
      "random_private_state",
      [](std::size_t dk, std::size_t ds, std::uint64_t seed) { return random_private_state(dk, ds, seed); },
      py::arg("key_dim"), py::arg("shield_dim"), py::arg("seed"));
  m.def("key_attack", &key_attack);
  m.def("attacked_distance", [](const KeyShieldState& s) {
    const auto d = attacked_distance(s);
    return py::make_tuple(d.global, d.blockform);
  });
  m.def("hashing_bound_private", &hashing_bound_private);
  m.def("coherent_information", &coherent_information_key_shield);
  m.def("log_negativity", &log_negativity);

  // bounds
  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("name", &BoundResult::name)
      .def_readonly("value", &BoundResult::value)
      .def_readonly("domain_ok", &BoundResult::domain_ok)
      .def_readonly("domain_note", &BoundResult::domain_note)
      .def_readonly("formula", &BoundResult::formula)
      .def("__repr__", [](const BoundResult& b) {
        return "BoundResult(" + b.name + ", " + std::to_string(b.value) + (b.domain_ok ? ")" : ", out of domain)");
      });
  m.def("thm1_overhead_fraction", &thm1_overhead_fraction, py::arg("d_k"), py::arg("theta"));
  m.def("thm2_overhead_fraction", &thm2_overhead_fraction, py::arg("theta"), py::arg("log_dh"));
  m.def("obs2_repeater_bound", &obs2_repeater_bound, py::arg("eps"));
  m.def("obs2_repeater_bound_linear", &obs2_repeater_bound_linear, py::arg("eps"));
  m.def("lemma1_min_shield", &lemma1_min_shield, py::arg("d_k"), py::arg("eps"));
  m.def("thm3_overhead_fraction", &thm3_overhead_fraction, py::arg("d_k"), py::arg("eps"));
  m.def("thm3_gap", &thm3_gap, py::arg("d_k"), py::arg("eps"));
  m.def("prop1_repeater_bound", &prop1_repeater_bound, py::arg("eps"), py::arg("d_s"));
  m.def("thm4_eta", &thm4_eta, py::arg("eps"));
  m.def("thm4_overhead_fraction", &thm4_overhead_fraction, py::arg("eps"));
  m.def("thm4_gap", &thm4_gap, py::arg("eps"), py::arg("d_s"));
  m.def("lemma2_min_shield", &lemma2_min_shield, py::arg("d_k"), py::arg("eps"));
  m.def("cor2_distance_floor", &cor2_distance_floor, py::arg("d_k"), py::arg("d_s"));
  m.def("prop2_repeater_bound", &prop2_repeater_bound, py::arg("eps"), py::arg("d_k"), py::arg("d_s"));
  m.def("thm5_eta", &thm5_eta, py::arg("d_k"), py::arg("eps"));
  m.def("thm5_overhead_fraction", &thm5_overhead_fraction, py::arg("d_k"), py::arg("eps"));
  m.def("thm5_gap", &thm5_gap, py::arg("d_k"), py::arg("d_s"), py::arg("eps"));
  m.def("min_ds_for_eps", &min_ds_for_eps, py::arg("d_k"), py::arg("eps"));

  // schemes, figures, verification, planning (JSON text; parsed on the Python side)
  m.def(
      "scheme_json",
      [](const std::string& spec, int delta, const std::string& mode) {
        return cmd_scheme(spec, delta, parse_mode(mode)).dump();
      },
      py::arg("spec"), py::arg("delta") = 1, py::arg("mode") = "two-way");
  m.def(
      "plan_json",
      [](double gap, int dk, const std::string& family) { return cmd_plan(gap, dk, family).dump(); },
      py::arg("gap"), py::arg("d_k") = 2, py::arg("family") = "pbit-omega");
  m.def(
      "verify_json",
      [](std::uint64_t seed, std::size_t trials, std::vector<std::string> checks) {
        py::gil_scoped_release release;
        return cmd_verify(seed, trials, checks).report.dump();
      },
      py::arg("seed") = 42, py::arg("trials") = 50, py::arg("checks") = std::vector<std::string>{});
  m.def("check_names", &check_names);
  m.def(
      "figure_csv", [](int id) { return to_csv(make_figure(id)); }, py::arg("figure_id"));
}
