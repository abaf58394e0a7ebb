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

// Exact arithmetic in GF(p^t).
//
// Elements are polynomial residues modulo a fixed monic irreducible of
// degree t over Z_p, stored constant term first. The modulus is always the
// lexicographically smallest monic irreducible (comparing coefficients from
// the constant term upward), so every computation is reproducible.

#ifndef MINORIENT_GF_H_
#define MINORIENT_GF_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace minorient {

inline constexpr int kMaxExtensionDegree = 8;

bool IsPrime(int64_t n);

// Irreducibility of a monic polynomial over Z_p by trial division with every
// monic polynomial of degree 1..deg/2. `poly` is constant term first.
bool IsIrreduciblePoly(int p, std::span<const int> poly);

class FieldSpec {
 public:
  // Errors: "not prime", "degree out of range", "field too large".
  static FieldSpec Make(int p, int t);

  int p() const { return p_; }
  int t() const { return t_; }
  // p^t.
  int64_t order() const { return order_; }
  // Monic modulus, constant term first; size t + 1.
  std::vector<int> modulus() const;
  bool is_prime_field() const { return t_ == 1; }

  std::string ToString() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.t_ == b.t_ && a.modulus_ == b.modulus_;
  }

 private:
  friend class FieldElement;
  FieldSpec() = default;

  int p_ = 0;
  int t_ = 0;
  int64_t order_ = 0;
  std::array<int, kMaxExtensionDegree + 1> modulus_{};
};

class FieldElement {
 public:
  static FieldElement Zero(const FieldSpec& spec);
  static FieldElement One(const FieldSpec& spec);
  // Image of an integer in the prime subfield.
  static FieldElement FromInt(const FieldSpec& spec, int64_t value);
  // Canonical enumeration: index = c_0 + c_1 p + c_2 p^2 + ...
  static FieldElement FromIndex(const FieldSpec& spec, int64_t index);
  // Residue of x (the generator w). In a prime field this is 0.
  static FieldElement Generator(const FieldSpec& spec);
  static FieldElement FromCoeffs(const FieldSpec& spec,
                                 std::span<const int> coeffs);
  // All q elements in canonical order.
  static std::vector<FieldElement> All(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::span<const int> coeffs() const { return {coeffs_.data(), size_t(spec_.t_)}; }
  int64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& other) const;
  // Errors: "zero has no inverse".
  FieldElement Inverse() const;
  FieldElement Pow(int64_t exponent) const;

  // Decimal for prime fields; polynomial in "w" otherwise, e.g. "2w^2+w+1".
  std::string ToString() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  explicit FieldElement(const FieldSpec& spec) : spec_(spec) {}
  void CheckSameField(const FieldElement& other) const;

  FieldSpec spec_;
  std::array<int, kMaxExtensionDegree> coeffs_{};
};

// Smallest k >= 1 with x^k = 1. Errors: "zero has no order".
int64_t MultiplicativeOrder(const FieldElement& x);

// First element in canonical order whose multiplicative order is exactly m.
// Errors: "order unavailable" when m does not divide q - 1.
FieldElement ElementOfOrder(const FieldSpec& spec, int64_t m);

}  // namespace minorient

#endif  // MINORIENT_GF_H_
