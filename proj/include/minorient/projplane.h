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

// The Desarguesian projective plane over GF(q).

#ifndef MINORIENT_PROJPLANE_H_
#define MINORIENT_PROJPLANE_H_

#include <array>
#include <string>
#include <vector>

#include "minorient/gf.h"

namespace minorient {

struct PointTag {};
struct LineTag {};

// A homogeneous triple normalized so that its first nonzero entry is 1.
// Points and lines share the representation but are distinct types.
template <class Tag>
class Homogeneous {
 public:
  // Errors: "zero triple", "field mismatch".
  Homogeneous(const FieldElement& x, const FieldElement& y, const FieldElement& z);

  const std::array<FieldElement, 3>& coords() const { return coords_; }
  const FieldElement& operator[](int i) const { return coords_[i]; }
  const FieldSpec& spec() const { return coords_[0].spec(); }

  // "[x,y,z]" for points, "<a,b,c>" for lines.
  std::string ToString() const;

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::array<FieldElement, 3> coords_;
};

using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

extern template class Homogeneous<PointTag>;
extern template class Homogeneous<LineTag>;

// Convenience constructors from small integers (reduced into the prime field).
ProjPoint MakePoint(const FieldSpec& spec, int x, int y, int z);
ProjLine MakeLine(const FieldSpec& spec, int a, int b, int c);

struct Plane {
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
};

inline constexpr int64_t kMaxPlaneOrder = 32;

// All q^2+q+1 points and lines. Classes are listed affine-first: [x,y,1] in
// (x,y) order, then [x,1,0], then [1,0,0]; each is stored normalized.
// Errors: "plane too large" for q > 32.
Plane EnumeratePlane(const FieldSpec& spec);

FieldElement Determinant(const std::array<FieldElement, 3>& r0,
                         const std::array<FieldElement, 3>& r1,
                         const std::array<FieldElement, 3>& r2);

bool Collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool Incident(const ProjPoint& point, const ProjLine& line);

// Errors: "points coincide".
ProjLine LineThrough(const ProjPoint& a, const ProjPoint& b);
// Errors: "lines coincide".
ProjPoint Meet(const ProjLine& a, const ProjLine& b);

}  // namespace minorient

#endif  // MINORIENT_PROJPLANE_H_
