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

#include "minorient/projplane.h"

#include <type_traits>

#include "minorient/error.h"

namespace minorient {
namespace {

std::array<FieldElement, 3> Cross(const std::array<FieldElement, 3>& u,
                                  const std::array<FieldElement, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

bool IsZeroTriple(const std::array<FieldElement, 3>& u) {
  return u[0].is_zero() && u[1].is_zero() && u[2].is_zero();
}

}  // namespace

template <class Tag>
Homogeneous<Tag>::Homogeneous(const FieldElement& x, const FieldElement& y,
                              const FieldElement& z)
    : coords_{x, y, z} {
  if (!(x.spec() == y.spec()) || !(x.spec() == z.spec())) throw Error("field mismatch");
  int lead = 0;
  while (lead < 3 && coords_[lead].is_zero()) ++lead;
  if (lead == 3) throw Error("zero triple");
  const FieldElement scale = coords_[lead].Inverse();
  for (auto& c : coords_) c = c * scale;
}

template <class Tag>
std::string Homogeneous<Tag>::ToString() const {
  constexpr bool kIsPoint = std::is_same_v<Tag, PointTag>;
  std::string out = kIsPoint ? "[" : "<";
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out += ",";
    out += coords_[i].ToString();
  }
  out += kIsPoint ? "]" : ">";
  return out;
}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

ProjPoint MakePoint(const FieldSpec& spec, int x, int y, int z) {
  return ProjPoint(FieldElement::FromInt(spec, x), FieldElement::FromInt(spec, y),
                   FieldElement::FromInt(spec, z));
}

ProjLine MakeLine(const FieldSpec& spec, int a, int b, int c) {
  return ProjLine(FieldElement::FromInt(spec, a), FieldElement::FromInt(spec, b),
                  FieldElement::FromInt(spec, c));
}

Plane EnumeratePlane(const FieldSpec& spec) {
  if (spec.order() > kMaxPlaneOrder) throw Error("plane too large");
  const auto elems = FieldElement::All(spec);
  const auto zero = FieldElement::Zero(spec);
  const auto one = FieldElement::One(spec);
  Plane plane;
  const size_t total = elems.size() * elems.size() + elems.size() + 1;
  plane.points.reserve(total);
  plane.lines.reserve(total);
  auto emit = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    plane.points.emplace_back(a, b, c);
    plane.lines.emplace_back(a, b, c);
  };
  for (const auto& x : elems) {
    for (const auto& y : elems) emit(x, y, one);
  }
  for (const auto& x : elems) emit(x, one, zero);
  emit(one, zero, zero);
  return plane;
}

FieldElement Determinant(const std::array<FieldElement, 3>& r0,
                         const std::array<FieldElement, 3>& r1,
                         const std::array<FieldElement, 3>& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
         r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

bool Collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return Determinant(a.coords(), b.coords(), c.coords()).is_zero();
}

bool Incident(const ProjPoint& point, const ProjLine& line) {
  const auto& p = point.coords();
  const auto& l = line.coords();
  return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

ProjLine LineThrough(const ProjPoint& a, const ProjPoint& b) {
  const auto c = Cross(a.coords(), b.coords());
  if (IsZeroTriple(c)) throw Error("points coincide");
  return ProjLine(c[0], c[1], c[2]);
}

ProjPoint Meet(const ProjLine& a, const ProjLine& b) {
  const auto c = Cross(a.coords(), b.coords());
  if (IsZeroTriple(c)) throw Error("lines coincide");
  return ProjPoint(c[0], c[1], c[2]);
}

}  // namespace minorient
