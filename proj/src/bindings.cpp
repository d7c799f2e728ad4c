#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greedylab/acceptance.hpp"
#include "greedylab/chebyshev.hpp"
#include "greedylab/classes.hpp"
#include "greedylab/democracy.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/weights.hpp"

namespace py = pybind11;
using namespace greedylab;

namespace {

SparseVector vector_from_pairs(
    const std::vector<std::pair<Index, double>>& pairs) {
  SparseVector x;
  for (const auto& [i, c] : pairs) x.set(i, c);
  return x;
}

std::vector<std::pair<Index, double>> vector_to_pairs(const SparseVector& x) {
  std::vector<std::pair<Index, double>> out;
  for (const auto& [i, c] : x.entries()) out.emplace_back(i, c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical laboratory for greedy-type approximation";

  py::class_<SparseVector>(m, "SparseVector")
      .def(py::init<>())
      .def(py::init(&vector_from_pairs), py::arg("pairs"))
      .def("set", &SparseVector::set)
      .def("coeff", &SparseVector::coeff)
      .def("support", &SparseVector::support)
      .def("support_size", &SparseVector::support_size)
      .def("max_index", &SparseVector::max_index)
      .def("pairs", &vector_to_pairs)
      .def("partial_sum", &SparseVector::partial_sum)
      .def("__len__", &SparseVector::support_size)
      .def("__repr__", [](const SparseVector& x) {
        std::string s = "SparseVector([";
        bool first = true;
        for (const auto& [i, c] : x.entries()) {
          if (!first) s += ", ";
          s += "[" + std::to_string(i) + ", " + std::to_string(c) + "]";
          first = false;
        }
        return s + "])";
      });

  py::class_<SignedSet>(m, "SignedSet")
      .def(py::init<std::vector<Index>, std::vector<int>>(), py::arg("indices"),
           py::arg("signs"))
      .def_static("plus", &SignedSet::plus)
      .def_static("alternating", &SignedSet::alternating)
      .def_readonly("indices", &SignedSet::indices)
      .def_readonly("signs", &SignedSet::signs)
      .def("indicator", &SignedSet::indicator);

  py::class_<SequenceSpace>(m, "SequenceSpace")
      .def_static("parse", &SequenceSpace::parse)
      .def_static("lp", &SequenceSpace::lp)
      .def_static("summing", &SequenceSpace::summing)
      .def_static("difference", &SequenceSpace::difference)
      .def_static("schreier", &SequenceSpace::schreier)
      .def_static("mixnorm", &SequenceSpace::mixnorm)
      .def_property_readonly("name", &SequenceSpace::name)
      .def_property_readonly("unconditional", &SequenceSpace::unconditional)
      .def_property_readonly("kappa", &SequenceSpace::kappa)
      .def_property_readonly("basis_constant", &SequenceSpace::basis_constant)
      .def_property_readonly("p_convexity", &SequenceSpace::p_convexity)
      .def("norm",
           py::overload_cast<const SparseVector&>(&SequenceSpace::norm,
                                                  py::const_));

  py::class_<Weight>(m, "Weight")
      .def_static("parse", &Weight::parse)
      .def_static("power", &Weight::power)
      .def_static("sqrtlog", &Weight::sqrtlog)
      .def_static("log", &Weight::logw)
      .def_static("table", &Weight::table)
      .def_property_readonly("name", &Weight::name)
      .def("__call__", &Weight::operator());

  py::class_<DilationReport>(m, "DilationReport")
      .def_readonly("M", &DilationReport::M)
      .def_readonly("phi_hat", &DilationReport::phi_hat)
      .def_readonly("Phi_hat", &DilationReport::Phi_hat)
      .def_readonly("k_max", &DilationReport::k_max);

  py::class_<IndexReport>(m, "IndexReport")
      .def_readonly("i_hat", &IndexReport::i_hat)
      .def_readonly("I_hat", &IndexReport::I_hat)
      .def_readonly("M_max", &IndexReport::M_max)
      .def_readonly("k_max", &IndexReport::k_max);

  py::class_<ErrorValue>(m, "ErrorValue")
      .def_readonly("value", &ErrorValue::value)
      .def_readonly("truncated", &ErrorValue::truncated)
      .def("__float__", [](const ErrorValue& v) { return v.value; });

  py::class_<ChebyshevSolution>(m, "ChebyshevSolution")
      .def_readonly("support", &ChebyshevSolution::support)
      .def_readonly("coefficients", &ChebyshevSolution::coefficients)
      .def_readonly("residual", &ChebyshevSolution::residual)
      .def_readonly("certified", &ChebyshevSolution::certified);

  py::enum_<ErrorKind>(m, "ErrorKind")
      .value("A", ErrorKind::BestTerm)
      .value("G", ErrorKind::Greedy)
      .value("CG", ErrorKind::Chebyshev)
      .value("PG", ErrorKind::PartialSum);

  py::enum_<Side>(m, "Side").value("Left", Side::Left).value("Right", Side::Right);
  py::enum_<SignMode>(m, "SignMode")
      .value("Signed", SignMode::Signed)
      .value("Unsigned", SignMode::Unsigned);

  py::class_<DemocracyReport>(m, "DemocracyReport")
      .def_readonly("m", &DemocracyReport::m)
      .def_readonly("u", &DemocracyReport::u)
      .def_readonly("horizon", &DemocracyReport::horizon)
      .def_readonly("value", &DemocracyReport::value)
      .def_readonly("witness", &DemocracyReport::witness)
      .def_readonly("exhaustive", &DemocracyReport::exhaustive);

  py::class_<ExperimentRow>(m, "ExperimentRow")
      .def_readonly("preset", &ExperimentRow::preset)
      .def_readonly("j", &ExperimentRow::j)
      .def_readonly("k", &ExperimentRow::k)
      .def_readonly("u", &ExperimentRow::u)
      .def_readonly("eta", &ExperimentRow::eta)
      .def_readonly("num", &ExperimentRow::num)
      .def_readonly("den", &ExperimentRow::den)
      .def_readonly("ratio", &ExperimentRow::ratio)
      .def_readonly("bound", &ExperimentRow::bound)
      .def_readonly("flags", &ExperimentRow::flags);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("passed", &CriterionResult::passed)
      .def_readonly("detail", &CriterionResult::detail);

  // Norm-level operations.
  m.def("sigma_error", &sigma_error, py::arg("space"), py::arg("x"),
        py::arg("m"), py::arg("window") = 4, py::arg("budget") = 2000000);
  m.def(
      "gamma_error",
      [](const SequenceSpace& sp, const SparseVector& x, std::size_t m,
         std::size_t cap) { return gamma_error(sp, x, m, cap); },
      py::arg("space"), py::arg("x"), py::arg("m"), py::arg("cap") = 10000);
  m.def(
      "theta_error",
      [](const SequenceSpace& sp, const SparseVector& x, std::size_t m,
         std::size_t cap) { return theta_error(sp, x, m, cap); },
      py::arg("space"), py::arg("x"), py::arg("m"), py::arg("cap") = 10000);
  m.def("beta_error", &beta_error, py::arg("space"), py::arg("x"), py::arg("m"));
  m.def("chebyshev_project", &chebyshev_project, py::arg("space"), py::arg("x"),
        py::arg("support"));
  m.def("eta_p", &eta_p, py::arg("u"), py::arg("p"));
  m.def("a_p", &a_p, py::arg("p"));

  // Weights.
  m.def("summing_weight", &summing_weight);
  m.def("dilation_bounds", &dilation_bounds, py::arg("w"), py::arg("M"),
        py::arg("k_max"));
  m.def("dilation_indices", &dilation_indices, py::arg("w"), py::arg("M_max"),
        py::arg("k_max"));
  m.def("check_doubling", &check_doubling, py::arg("w"), py::arg("n_max"));

  // Democracy.
  m.def("h_right", &h_right, py::arg("space"), py::arg("m"), py::arg("horizon"),
        py::arg("budget") = 2000000, py::arg("mode") = SignMode::Signed);
  m.def("h_left", &h_left, py::arg("space"), py::arg("m"), py::arg("horizon"),
        py::arg("budget") = 2000000, py::arg("mode") = SignMode::Signed);
  m.def("h_restricted", &h_restricted, py::arg("space"), py::arg("m"),
        py::arg("u"), py::arg("side"), py::arg("horizon"),
        py::arg("budget") = 2000000, py::arg("mode") = SignMode::Signed);
  m.def("characteristic_psi", &characteristic_psi, py::arg("space"),
        py::arg("m"), py::arg("horizon"));

  // Classes and experiments.
  m.def(
      "class_norm",
      [](const SequenceSpace& sp, const SparseVector& x, const Weight& w,
         double q, ErrorKind kind, Index window, std::size_t cap) {
        return class_norm(sp, x, ClassParams{w, q, kind}, window, cap);
      },
      py::arg("space"), py::arg("x"), py::arg("weight"), py::arg("q"),
      py::arg("kind"), py::arg("window") = 4, py::arg("cap") = 10000);
  m.def("remark_ratio", &remark_ratio, py::arg("space"), py::arg("w"),
        py::arg("q"), py::arg("m_range"));
  m.def("imp1_experiment", &imp1_experiment, py::arg("space"), py::arg("w"),
        py::arg("q"), py::arg("j_max"), py::arg("cap") = 10000,
        py::arg("window") = 4);
  m.def("kppg_experiment", &kppg_experiment, py::arg("space"), py::arg("w"),
        py::arg("q"), py::arg("j_max"), py::arg("cap") = 10000);

  // Acceptance battery.
  m.def("run_acceptance", &run_acceptance, py::arg("seed"));
  m.def("random_sample", &random_sample, py::arg("seed"), py::arg("count"),
        py::arg("max_support"), py::arg("horizon"));

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
}
