// Copyright 2026 The Authors.
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

// Structured values cross the boundary as JSON text; the Python package
// decodes them.

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minorient/cli.h"
#include "minorient/error.h"
#include "minorient/io.h"

namespace py = pybind11;

namespace minorient {
namespace {

SearchOptions Options(int64_t budget, int workers) {
  SearchOptions opts;
  opts.budget = budget;
  opts.workers = workers;
  return opts;
}

LineMatroid Parse(const std::string& matroid_json) {
  try {
    return MatroidFromJson(Json::parse(matroid_json));
  } catch (const nlohmann::json::exception&) {
    throw Error("bad matroid json");
  }
}

GroupSpec::Element Elem(const GroupSpec& g, const std::string& text) {
  return g.ParseElement(text);
}

}  // namespace
}  // namespace minorient

PYBIND11_MODULE(_core, m) {
  using namespace minorient;
  m.doc() = "Orientability of rank-3 matroids built from permutations and abelian groups.";
  py::register_exception<Error>(m, "MinorientError", PyExc_ValueError);

  m.def("build_m_prime", [](int n) { return MatroidToJson(BuildMPrime(n)).dump(); },
        py::arg("n"));
  m.def(
      "build_m_sigma",
      [](int n, const std::string& perm) {
        return MatroidToJson(BuildMSigma(n, Permutation::Parse(perm, n))).dump();
      },
      py::arg("n"), py::arg("perm"));
  m.def(
      "build_group_matroid",
      [](const std::string& group, const std::string& g0, const std::string& g1) {
        const GroupSpec g = GroupSpec::Parse(group);
        return MatroidToJson(BuildGroupMatroid(g, Elem(g, g0), Elem(g, g1))).dump();
      },
      py::arg("group"), py::arg("g0"), py::arg("g1"));

  m.def(
      "criterion_sigma",
      [](const std::string& perm) { return CriterionSigma(Permutation::Parse(perm)).orientable; },
      py::arg("perm"));
  m.def(
      "criterion_group",
      [](const std::string& group, const std::string& g0, const std::string& g1) {
        const GroupSpec g = GroupSpec::Parse(group);
        const GroupCriterion c = CriterionGroup(g, Elem(g, g0), Elem(g, g1));
        return std::make_tuple(c.r, c.orientable);
      },
      py::arg("group"), py::arg("g0"), py::arg("g1"));

  m.def(
      "find_chirotope",
      [](const std::string& matroid_json, int64_t budget, int workers) {
        const LineMatroid lm = Parse(matroid_json);
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = FindChirotope(lm, Options(budget, workers));
        }
        return SearchResultToJson(r, lm).dump();
      },
      py::arg("matroid_json"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
  m.def(
      "certify_minimal",
      [](const std::string& matroid_json, int64_t budget, int workers) {
        const LineMatroid lm = Parse(matroid_json);
        MinimalityReport report;
        {
          py::gil_scoped_release release;
          report = CertifyMinimalNonOrientable(lm, Options(budget, workers));
        }
        return MinimalityReportToJson(report, lm).dump();
      },
      py::arg("matroid_json"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

  m.def(
      "verify_psi_prime",
      [](int p) {
        const EmbeddingInstance inst = PsiPrime(p);
        return EmbeddingReportToJson(inst, VerifyEmbedding(inst)).dump();
      },
      py::arg("p"));
  m.def(
      "verify_psi_subgroup",
      [](int order, int p, int t) {
        const EmbeddingInstance inst = PsiSubgroup(order, p, t);
        return EmbeddingReportToJson(inst, VerifyEmbedding(inst)).dump();
      },
      py::arg("m"), py::arg("p"), py::arg("t"));
  m.def(
      "complex_check",
      [](int n, double tol_zero, double tol_nonzero) {
        const ComplexCheckResult r = ComplexCheck(n, tol_zero, tol_nonzero);
        Json j;
        j["ok"] = r.ok;
        j["max_dependent_residual"] = r.max_dependent_residual;
        j["min_independent_det"] = r.min_independent_det;
        j["triples_scanned"] = r.triples_scanned;
        return j.dump();
      },
      py::arg("n"), py::arg("tol_zero") = 1e-9, py::arg("tol_nonzero") = 1e-6);
  m.def(
      "extension_feasible",
      [](int n, const std::map<int, int>& f) { return ExtensionFeasible(n, f); }, py::arg("n"),
      py::arg("f"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = RunCli(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
