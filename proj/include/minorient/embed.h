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

// Embeddings of M(Z_m, 0, 1) into projective planes over finite fields, plus
// the cardinality obstructions and a numerical check over the complex field.

#ifndef MINORIENT_EMBED_H_
#define MINORIENT_EMBED_H_

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "minorient/gf.h"
#include "minorient/matroid.h"

namespace minorient {

struct EmbeddingInstance {
  LineMatroid matroid;
  ElementMap map;
  FieldSpec spec;
};

// M(Z_p, 0, 1) in PG(2, p): a_i -> [0,i,1], b_i -> [1,i,1], c_0 -> [1,0,0],
// c_1 -> [1,1,0]. Errors: "not prime", "Mac Lane needs p >= 3".
EmbeddingInstance PsiPrime(int p);

// M(Z_m, 0, 1) in PG(2, p^t) through the order-m subgroup generated by
// g = ElementOfOrder(GF(p^t), m): a_i -> [g^i,0,1], b_i -> [0,-g^i,1],
// c_0 -> [1,1,0], c_1 -> [1,g,0].
// Errors: "m too small", "subgroup does not exist".
EmbeddingInstance PsiSubgroup(int m, int p, int t);

EmbeddingCheck VerifyEmbedding(const EmbeddingInstance& instance);

// "line too long" if a line of `m` has more than q + 1 points, "ground set
// too large" if m has more than q^2 + q + 1 elements, otherwise nothing. An
// empty result does not establish embeddability.
std::optional<std::string> Obstruction(const LineMatroid& m, int64_t q);

using ComplexPoint = std::array<std::complex<double>, 3>;

struct ComplexCheckResult {
  bool ok = false;
  double max_dependent_residual = 0;
  double min_independent_det = 0;
  int64_t triples_scanned = 0;
};

// |det| of unit-normalized rows must stay below tol_zero on dependent triples
// and above tol_nonzero on independent ones. Errors: "map is not total".
ComplexCheckResult ComplexCheckMap(const LineMatroid& m,
                                   const std::map<std::string, ComplexPoint>& map,
                                   double tol_zero, double tol_nonzero);

// The subgroup map over C with phi(i) = exp(2 pi i * i / n). `c1_shift` is
// added to the second coordinate of c_1 (zero for the genuine map).
// Errors: "n out of range", "tolerance order".
ComplexCheckResult ComplexCheck(int n, double tol_zero = 1e-9, double tol_nonzero = 1e-6,
                                std::complex<double> c1_shift = 0.0);

}  // namespace minorient

#endif  // MINORIENT_EMBED_H_
