#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mfl/cli.hpp"
#include "mfl/quadratic_ideal.hpp"
#include "mfl/report.hpp"
#include "mfl/tableaux.hpp"
#include "mfl/theorem_sets.hpp"

namespace py = pybind11;
using namespace mfl;

namespace {

std::vector<std::string> strings(const std::vector<Permutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

py::dict outcome_dict(const ClassificationOutcome& c) {
  std::vector<std::string> gens, mons;
  for (const auto& r : c.surviving_binomials) gens.push_back(r.to_string());
  for (const auto& m : c.surviving_monomials) mons.push_back(m.to_string());
  py::dict d;
  d["verdict"] = to_string(c.verdict);
  d["generators"] = gens;
  d["monomials"] = mons;
  d["degree2_rank"] = c.degree2_rank;
  return d;
}

Tableau ssyt_from(int n, const std::vector<std::vector<int>>& columns) {
  std::vector<IndexSet> cols;
  for (const auto& c : columns) cols.push_back(IndexSet::from_members(n, c));
  return Tableau(std::move(cols), TableauKind::ssyt);
}

}  // namespace

PYBIND11_MODULE(_mfl, m) {
  py::register_exception<CapabilityError>(m, "CapabilityError");

  m.def("classify", [](int n, int ell, const std::string& w, bool all_pairs) {
    return outcome_dict(classify(n, ell, Permutation::parse(w), all_pairs ? PairMode::all_pairs : PairMode::spanning));
  }, py::arg("n"), py::arg("ell"), py::arg("w"), py::arg("all_pairs") = false);

  m.def("classify_combinatorial", [](int n, int ell, const std::string& w) {
    const auto r = classify_combinatorial(n, ell, Permutation::parse(w));
    std::vector<std::string> tags;
    for (auto t : r.witness_tags) tags.push_back(to_string(t));
    py::dict d;
    d["class"] = to_string(r.combinatorial_class);
    d["in_P"] = r.in_P;
    d["witness_tags"] = tags;
    return d;
  });

  m.def("quadratic_relations", [](int n, int ell) {
    std::vector<std::string> out;
    for (const auto& r : quadratic_relations(BlockDiagonalMF(n, ell))) out.push_back(r.to_string());
    return out;
  });

  m.def("z_family", [](int n) { return strings(z_family(n)); });
  m.def("z_count", &z_count);
  m.def("in_P", [](const std::string& w, int ell) { return in_P(Permutation::parse(w), ell); });
  m.def("is_312_free", [](const std::string& w) { return is_312_free(Permutation::parse(w)); });
  m.def("build_T", [](int n, int ell) {
    std::vector<std::string> out;
    for (const auto& [w, tags] : build_T(n, ell)) out.push_back(w.to_string());
    return out;
  });

  m.def("count_table", [](int n_min, int n_max, const std::string& mode, int jobs) {
    if (mode != "oracle" && mode != "combinatorial") throw std::invalid_argument("mode is oracle or combinatorial");
    const auto rows = count_table(n_min, n_max, mode == "oracle" ? CountMode::oracle : CountMode::combinatorial, jobs);
    py::list out;
    for (const auto& r : rows) {
      py::dict d;
      d["n"] = r.n;
      d["ell"] = r.ell;
      d["binomial"] = r.binomial;
      d["zero"] = r.zero;
      d["nonbinomial"] = r.nonbinomial;
      out.append(d);
    }
    return out;
  }, py::arg("n_min"), py::arg("n_max"), py::arg("mode") = "oracle", py::arg("jobs") = 1);

  m.def("gamma", [](int n, int ell, const std::vector<std::vector<int>>& columns) {
    return gamma(ssyt_from(n, columns), ell).displays();
  });
  m.def("is_standard", [](int n, const std::vector<std::vector<int>>& columns, const std::string& w) {
    return is_standard(ssyt_from(n, columns), Permutation::parse(w));
  });
  m.def("verify_bijection", [](int n, int ell, const std::string& w) {
    const auto r = verify_bijection(n, ell, Permutation::parse(w));
    py::dict d;
    d["pass"] = r.pass;
    d["w_in_P"] = r.w_in_P;
    d["ssyt_count"] = r.ssyt_count;
    d["row_class_count"] = r.row_class_count;
    d["standard_count"] = r.standard_count;
    d["failures"] = r.failures;
    return d;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mfl"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
