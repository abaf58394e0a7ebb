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

#include "minorient/embed.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "minorient/error.h"
#include "minorient/families.h"

namespace minorient {
namespace {

LineMatroid CyclicGroupMatroid(int m) {
  return BuildGroupMatroid(GroupSpec({m}), {0}, {1});
}

ComplexPoint Normalized(ComplexPoint v) {
  const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
  for (auto& c : v) c /= norm;
  return v;
}

std::complex<double> Det(const ComplexPoint& u, const ComplexPoint& v, const ComplexPoint& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

}  // namespace

EmbeddingInstance PsiPrime(int p) {
  if (!IsPrime(p)) throw Error("not prime");
  if (p < 3) throw Error("Mac Lane needs p >= 3");
  const FieldSpec spec = FieldSpec::Make(p, 1);
  ElementMap map;
  for (int i = 0; i < p; ++i) {
    map.emplace(ElementA(i), MakePoint(spec, 0, i, 1));
    map.emplace(ElementB(i), MakePoint(spec, 1, i, 1));
  }
  map.emplace(ElementC(0), MakePoint(spec, 1, 0, 0));
  map.emplace(ElementC(1), MakePoint(spec, 1, 1, 0));
  return {CyclicGroupMatroid(p), std::move(map), spec};
}

EmbeddingInstance PsiSubgroup(int m, int p, int t) {
  if (m < 3) throw Error("m too small");
  const FieldSpec spec = FieldSpec::Make(p, t);
  if ((spec.order() - 1) % m != 0) throw Error("subgroup does not exist");
  const FieldElement g = ElementOfOrder(spec, m);
  const FieldElement zero = FieldElement::Zero(spec);
  const FieldElement one = FieldElement::One(spec);
  ElementMap map;
  FieldElement phi = one;
  for (int i = 0; i < m; ++i) {
    map.emplace(ElementA(i), ProjPoint(phi, zero, one));
    map.emplace(ElementB(i), ProjPoint(zero, -phi, one));
    phi = phi * g;
  }
  map.emplace(ElementC(0), ProjPoint(one, one, zero));
  map.emplace(ElementC(1), ProjPoint(one, g, zero));
  return {CyclicGroupMatroid(m), std::move(map), spec};
}

EmbeddingCheck VerifyEmbedding(const EmbeddingInstance& instance) {
  return IsEmbedding(instance.matroid, instance.map, instance.spec);
}

std::optional<std::string> Obstruction(const LineMatroid& m, int64_t q) {
  if (m.MaxFlatSize() > q + 1) return "line too long";
  if (m.size() > q * q + q + 1) return "ground set too large";
  return std::nullopt;
}

ComplexCheckResult ComplexCheckMap(const LineMatroid& m,
                                   const std::map<std::string, ComplexPoint>& map,
                                   double tol_zero, double tol_nonzero) {
  if (!(tol_zero < tol_nonzero)) throw Error("tolerance order");
  std::vector<ComplexPoint> pts;
  for (const auto& e : m.elements()) {
    auto it = map.find(e);
    if (it == map.end()) throw Error("map is not total");
    pts.push_back(Normalized(it->second));
  }
  ComplexCheckResult out;
  out.min_independent_det = std::numeric_limits<double>::infinity();
  const int n = m.size();
  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        ++out.triples_scanned;
        const double d = std::abs(Det(pts[i], pts[j], pts[k]));
        if (m.Dependent(i, j, k)) {
          out.max_dependent_residual = std::max(out.max_dependent_residual, d);
        } else {
          out.min_independent_det = std::min(out.min_independent_det, d);
        }
      }
    }
  }
  out.ok = out.max_dependent_residual < tol_zero && out.min_independent_det > tol_nonzero;
  return out;
}

ComplexCheckResult ComplexCheck(int n, double tol_zero, double tol_nonzero,
                                std::complex<double> c1_shift) {
  if (n < 3 || n > 24) throw Error("n out of range");
  if (!(tol_zero < tol_nonzero)) throw Error("tolerance order");
  const LineMatroid m = CyclicGroupMatroid(n);
  std::map<std::string, ComplexPoint> map;
  auto phi = [n](int i) { return std::polar(1.0, 2 * std::numbers::pi * i / n); };
  for (int i = 0; i < n; ++i) {
    map[ElementA(i)] = {phi(i), 0.0, 1.0};
    map[ElementB(i)] = {0.0, -phi(i), 1.0};
  }
  map[ElementC(0)] = {1.0, phi(0), 0.0};
  map[ElementC(1)] = {1.0, phi(1) + c1_shift, 0.0};
  return ComplexCheckMap(m, map, tol_zero, tol_nonzero);
}

}  // namespace minorient
