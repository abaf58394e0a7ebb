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

#include "minorient/gf.h"

#include <algorithm>
#include <sstream>

#include "minorient/error.h"

namespace minorient {
namespace {

constexpr int64_t kMaxFieldOrder = int64_t{1} << 30;

int Mod(int64_t v, int p) {
  int64_t r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of `num` modulo monic `den`, both constant term first.
// Returns false iff the remainder is nonzero.
bool DividesMonic(int p, std::vector<int> num, std::span<const int> den) {
  const int dd = static_cast<int>(den.size()) - 1;
  for (int deg = static_cast<int>(num.size()) - 1; deg >= dd; --deg) {
    const int lead = num[deg];
    if (lead == 0) continue;
    for (int k = 0; k <= dd; ++k) {
      num[deg - dd + k] = Mod(num[deg - dd + k] - int64_t{lead} * den[k], p);
    }
  }
  return std::all_of(num.begin(), num.begin() + dd, [](int c) { return c == 0; });
}

}  // namespace

bool IsPrime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool IsIrreduciblePoly(int p, std::span<const int> poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly[deg] != 1) return false;
  if (deg == 1) return true;
  std::vector<int> num(poly.begin(), poly.end());
  for (int d = 1; d <= deg / 2; ++d) {
    // Enumerate monic divisors of degree d via their lower coefficients.
    std::vector<int> div(d + 1, 0);
    div[d] = 1;
    int64_t count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (int64_t code = 0; code < count; ++code) {
      int64_t c = code;
      for (int k = 0; k < d; ++k) {
        div[k] = static_cast<int>(c % p);
        c /= p;
      }
      if (DividesMonic(p, num, div)) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::Make(int p, int t) {
  if (!IsPrime(p)) throw Error("not prime");
  if (t < 1 || t > kMaxExtensionDegree) throw Error("degree out of range");
  int64_t order = 1;
  for (int k = 0; k < t; ++k) {
    order *= p;
    if (order > kMaxFieldOrder) throw Error("field too large");
  }
  FieldSpec spec;
  spec.p_ = p;
  spec.t_ = t;
  spec.order_ = order;
  if (t == 1) {
    spec.modulus_[0] = 0;
    spec.modulus_[1] = 1;
    return spec;
  }
  // Lexicographic scan, constant term most significant.
  std::vector<int> poly(t + 1, 0);
  poly[t] = 1;
  for (int64_t code = 0; code < order; ++code) {
    int64_t c = code;
    for (int k = t - 1; k >= 0; --k) {
      poly[k] = static_cast<int>(c % p);
      c /= p;
    }
    if (IsIrreduciblePoly(p, poly)) {
      std::copy(poly.begin(), poly.end(), spec.modulus_.begin());
      return spec;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> FieldSpec::modulus() const {
  return {modulus_.begin(), modulus_.begin() + t_ + 1};
}

std::string FieldSpec::ToString() const {
  std::ostringstream out;
  out << "GF(" << p_;
  if (t_ > 1) out << "^" << t_;
  out << ")";
  return out.str();
}

FieldElement FieldElement::Zero(const FieldSpec& spec) { return FieldElement(spec); }

FieldElement FieldElement::One(const FieldSpec& spec) { return FromInt(spec, 1); }

FieldElement FieldElement::FromInt(const FieldSpec& spec, int64_t value) {
  FieldElement e(spec);
  e.coeffs_[0] = Mod(value, spec.p_);
  return e;
}

FieldElement FieldElement::FromIndex(const FieldSpec& spec, int64_t index) {
  if (index < 0 || index >= spec.order_) throw Error("element index out of range");
  FieldElement e(spec);
  for (int k = 0; k < spec.t_; ++k) {
    e.coeffs_[k] = static_cast<int>(index % spec.p_);
    index /= spec.p_;
  }
  return e;
}

FieldElement FieldElement::Generator(const FieldSpec& spec) {
  if (spec.t_ == 1) return Zero(spec);
  FieldElement e(spec);
  e.coeffs_[1] = 1;
  return e;
}

FieldElement FieldElement::FromCoeffs(const FieldSpec& spec,
                                      std::span<const int> coeffs) {
  if (static_cast<int>(coeffs.size()) > spec.t_) throw Error("too many coefficients");
  FieldElement e(spec);
  for (size_t k = 0; k < coeffs.size(); ++k) e.coeffs_[k] = Mod(coeffs[k], spec.p_);
  return e;
}

std::vector<FieldElement> FieldElement::All(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(spec.order_));
  for (int64_t i = 0; i < spec.order_; ++i) out.push_back(FromIndex(spec, i));
  return out;
}

int64_t FieldElement::index() const {
  int64_t idx = 0;
  for (int k = spec_.t_ - 1; k >= 0; --k) idx = idx * spec_.p_ + coeffs_[k];
  return idx;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int c) { return c == 0; });
}

void FieldElement::CheckSameField(const FieldElement& other) const {
  if (!(spec_ == other.spec_)) throw Error("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  CheckSameField(other);
  FieldElement r(spec_);
  for (int k = 0; k < spec_.t_; ++k) r.coeffs_[k] = (coeffs_[k] + other.coeffs_[k]) % spec_.p_;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(spec_);
  for (int k = 0; k < spec_.t_; ++k) r.coeffs_[k] = Mod(-coeffs_[k], spec_.p_);
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  CheckSameField(other);
  const int t = spec_.t_;
  const int p = spec_.p_;
  std::array<int64_t, 2 * kMaxExtensionDegree> prod{};
  for (int i = 0; i < t; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < t; ++j) prod[i + j] += int64_t{coeffs_[i]} * other.coeffs_[j];
  }
  for (auto& c : prod) c %= p;
  // Reduce by the monic modulus from the top down.
  for (int deg = 2 * t - 2; deg >= t; --deg) {
    const int64_t lead = prod[deg] % p;
    if (lead == 0) continue;
    for (int k = 0; k <= t; ++k) {
      prod[deg - t + k] = (prod[deg - t + k] - lead * spec_.modulus_[k]) % p;
    }
  }
  FieldElement r(spec_);
  for (int k = 0; k < t; ++k) r.coeffs_[k] = Mod(prod[k], p);
  return r;
}

FieldElement FieldElement::Pow(int64_t exponent) const {
  if (exponent < 0) return Inverse().Pow(-exponent);
  FieldElement result = One(spec_);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::Inverse() const {
  if (is_zero()) throw Error("zero has no inverse");
  return Pow(spec_.order_ - 2);
}

std::string FieldElement::ToString() const {
  if (spec_.t_ == 1) return std::to_string(coeffs_[0]);
  std::string out;
  for (int deg = spec_.t_ - 1; deg >= 0; --deg) {
    const int c = coeffs_[deg];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (deg == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "w";
    if (deg > 1) out += "^" + std::to_string(deg);
  }
  return out.empty() ? "0" : out;
}

int64_t MultiplicativeOrder(const FieldElement& x) {
  if (x.is_zero()) throw Error("zero has no order");
  FieldElement acc = x;
  int64_t k = 1;
  while (!acc.is_one()) {
    acc = acc * x;
    ++k;
  }
  return k;
}

FieldElement ElementOfOrder(const FieldSpec& spec, int64_t m) {
  if (m < 1 || (spec.order() - 1) % m != 0) throw Error("order unavailable");
  for (int64_t i = 1; i < spec.order(); ++i) {
    FieldElement e = FieldElement::FromIndex(spec, i);
    if (MultiplicativeOrder(e) == m) return e;
  }
  throw std::logic_error("multiplicative group is not cyclic");
}

}  // namespace minorient
