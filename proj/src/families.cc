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

#include "minorient/families.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "minorient/error.h"

namespace minorient {
namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int ParseInt(std::string_view s, const char* error) {
  const std::string t = Trim(s);
  if (t.empty()) throw Error(error);
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw Error(error);
  }
  if (pos != t.size()) throw Error(error);
  return v;
}

std::string GroupSuffix(const GroupSpec& group, const GroupSpec::Element& g) {
  return group.ElementName(g);
}

}  // namespace

std::string ElementA(int i) { return "a_" + std::to_string(i); }
std::string ElementB(int i) { return "b_" + std::to_string(i); }
std::string ElementC(int i) { return "c_" + std::to_string(i); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[v]) throw Error("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::Parse(std::string_view cycles, int n) {
  std::vector<std::vector<int>> parsed;
  size_t pos = 0;
  int max_point = 0;
  while (pos < cycles.size()) {
    const char ch = cycles[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') throw Error("bad cycle notation");
    const size_t close = cycles.find(')', pos);
    if (close == std::string_view::npos) throw Error("bad cycle notation");
    std::vector<int> cycle;
    std::istringstream body{std::string(cycles.substr(pos + 1, close - pos - 1))};
    std::string token;
    while (body >> token) {
      // Tolerate comma separators: "(1,2,3)".
      std::replace(token.begin(), token.end(), ',', ' ');
      std::istringstream parts(token);
      std::string piece;
      while (parts >> piece) {
        const int v = ParseInt(piece, "bad cycle notation");
        if (v < 1) throw Error("bad cycle notation");
        cycle.push_back(v);
        max_point = std::max(max_point, v);
      }
    }
    parsed.push_back(std::move(cycle));
    pos = close + 1;
  }
  if (n == 0) n = max_point;
  if (max_point > n) throw Error("not a permutation");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : parsed) {
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (used[cycle[k]]) throw Error("not a permutation");
      used[cycle[k]] = true;
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[(*this)(i)-1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::IsDerangement() const {
  for (int i = 1; i <= n(); ++i) {
    if ((*this)(i) == i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::Cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n() + 1, false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = (*this)(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::CycleLengths() const {
  std::vector<int> lengths;
  for (const auto& c : Cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::ToCycleString() const {
  std::string out;
  for (const auto& c : Cycles()) {
    if (c.size() < 2) continue;
    out += "(";
    for (size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += " ";
      out += std::to_string(c[k]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> Derangements(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    bool fixed = false;
    for (int i = 0; i < n; ++i) fixed |= images[i] == i + 1;
    if (!fixed) out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

CycleGraph SigmaGraph(const Permutation& sigma) {
  if (!sigma.IsDerangement()) throw Error("sigma not a derangement");
  const int n = sigma.n();
  CycleGraph g;
  for (int i = 1; i <= n; ++i) g.vertices.push_back(ElementA(i));
  for (int i = 1; i <= n; ++i) g.vertices.push_back(ElementB(i));
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({ElementA(i), ElementB(i)});
    g.edges.push_back({ElementA(i), ElementB(sigma(i))});
  }
  // Walk a_i -> b_sigma(i) -> a_{sigma(i)} -> b_{sigma(i)} ... which
  // alternates the c_1-edge and the c_0-edge at every vertex.
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<std::string> cycle;
    for (int i = start; !seen[i]; i = sigma(i)) {
      seen[i] = true;
      cycle.push_back(ElementA(i));
      cycle.push_back(ElementB(sigma(i)));
    }
    g.cycle_lengths.push_back(static_cast<int>(cycle.size()));
    g.cycles.push_back(std::move(cycle));
  }
  std::sort(g.cycle_lengths.begin(), g.cycle_lengths.end());
  return g;
}

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error("bad group");
  for (int d : orders_) {
    if (d < 2) throw Error("bad group");
  }
}

GroupSpec GroupSpec::Parse(std::string_view text) {
  std::vector<int> orders;
  std::string t = Trim(text);
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t next = t.find_first_of("xX*", pos);
    if (next == std::string::npos) next = t.size();
    std::string factor = Trim(std::string_view(t).substr(pos, next - pos));
    if (factor.size() < 2 || (factor[0] != 'Z' && factor[0] != 'z')) throw Error("bad group");
    orders.push_back(ParseInt(std::string_view(factor).substr(1), "bad group"));
    pos = next + 1;
  }
  return GroupSpec(std::move(orders));
}

int64_t GroupSpec::order() const {
  int64_t o = 1;
  for (int d : orders_) o *= d;
  return o;
}

std::string GroupSpec::ToString() const {
  std::string out;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i > 0) out += "x";
    out += "Z" + std::to_string(orders_[i]);
  }
  return out;
}

std::vector<GroupSpec::Element> GroupSpec::Elements() const {
  std::vector<Element> out;
  Element g(orders_.size(), 0);
  for (int64_t k = 0; k < order(); ++k) {
    out.push_back(g);
    for (int f = static_cast<int>(orders_.size()) - 1; f >= 0; --f) {
      if (++g[f] < orders_[f]) break;
      g[f] = 0;
    }
  }
  return out;
}

int64_t GroupSpec::IndexOf(const Element& g) const {
  int64_t idx = 0;
  for (size_t f = 0; f < orders_.size(); ++f) idx = idx * orders_[f] + g[f];
  return idx;
}

GroupSpec::Element GroupSpec::Add(const Element& g, const Element& h) const {
  Element r(orders_.size());
  for (size_t f = 0; f < orders_.size(); ++f) r[f] = (g[f] + h[f]) % orders_[f];
  return r;
}

GroupSpec::Element GroupSpec::Neg(const Element& g) const {
  Element r(orders_.size());
  for (size_t f = 0; f < orders_.size(); ++f) r[f] = (orders_[f] - g[f]) % orders_[f];
  return r;
}

int64_t GroupSpec::OrderOf(const Element& g) const {
  int64_t r = 1;
  for (size_t f = 0; f < orders_.size(); ++f) {
    const int64_t o = orders_[f] / std::gcd(orders_[f], g[f]);
    r = std::lcm(r, o);
  }
  return r;
}

std::string GroupSpec::ElementName(const Element& g) const {
  if (orders_.size() == 1) return std::to_string(g[0]);
  std::string out = "(";
  for (size_t f = 0; f < g.size(); ++f) {
    if (f > 0) out += ",";
    out += std::to_string(g[f]);
  }
  return out + ")";
}

GroupSpec::Element GroupSpec::ParseElement(std::string_view text) const {
  std::string t = Trim(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  Element g;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t next = t.find(',', pos);
    if (next == std::string::npos) next = t.size();
    g.push_back(ParseInt(std::string_view(t).substr(pos, next - pos), "bad group element"));
    pos = next + 1;
  }
  if (g.size() != orders_.size()) throw Error("bad group element");
  for (size_t f = 0; f < g.size(); ++f) {
    if (g[f] < 0 || g[f] >= orders_[f]) throw Error("bad group element");
  }
  return g;
}

LineMatroid BuildMPrime(int n) {
  if (n < 2) throw Error("n too small");
  std::vector<std::string> elements;
  std::vector<std::string> a, b;
  for (int i = 1; i <= n; ++i) a.push_back(ElementA(i));
  for (int i = 1; i <= n; ++i) b.push_back(ElementB(i));
  elements.insert(elements.end(), a.begin(), a.end());
  elements.insert(elements.end(), b.begin(), b.end());
  elements.push_back(ElementC(0));
  std::vector<std::vector<std::string>> flats;
  // For n = 2 the pencils are two-point lines and stay implicit.
  if (n >= 3) flats = {a, b};
  for (int i = 1; i <= n; ++i) flats.push_back({ElementA(i), ElementB(i), ElementC(0)});
  return LineMatroid::Checked(std::move(elements), std::move(flats));
}

LineMatroid BuildMSigma(int n, const Permutation& sigma) {
  if (n < 2) throw Error("n too small");
  if (sigma.n() != n) throw Error("size mismatch");
  if (!sigma.IsDerangement()) throw Error("sigma not a derangement");
  const LineMatroid base = BuildMPrime(n);
  std::vector<std::string> elements = base.elements();
  elements.push_back(ElementC(1));
  std::vector<std::vector<std::string>> flats = base.flats();
  for (int i = 1; i <= n; ++i) {
    flats.push_back({ElementA(i), ElementB(sigma(i)), ElementC(1)});
  }
  return LineMatroid::Checked(std::move(elements), std::move(flats));
}

LineMatroid BuildGroupMatroid(const GroupSpec& group, const GroupSpec::Element& g0,
                              const GroupSpec::Element& g1) {
  if (g0.size() != group.orders().size() || g1.size() != group.orders().size()) {
    throw Error("bad group element");
  }
  if (g0 == g1) throw Error("need two distinct group elements");
  const auto elems = group.Elements();
  std::vector<std::string> a, b;
  for (const auto& g : elems) a.push_back("a_" + GroupSuffix(group, g));
  for (const auto& g : elems) b.push_back("b_" + GroupSuffix(group, g));
  const std::string c0 = "c_" + GroupSuffix(group, g0);
  const std::string c1 = "c_" + GroupSuffix(group, g1);
  std::vector<std::string> elements = a;
  elements.insert(elements.end(), b.begin(), b.end());
  elements.push_back(c0);
  elements.push_back(c1);
  std::vector<std::vector<std::string>> flats;
  if (elems.size() >= 3) flats = {a, b};
  for (const auto& [shift, c] : {std::pair{g0, c0}, std::pair{g1, c1}}) {
    for (const auto& g : elems) {
      flats.push_back({"a_" + GroupSuffix(group, g),
                       "b_" + GroupSuffix(group, group.Add(g, shift)), c});
    }
  }
  return LineMatroid::Checked(std::move(elements), std::move(flats));
}

GroupTranslation GroupToSigma(const GroupSpec& group, const GroupSpec::Element& g0,
                              const GroupSpec::Element& g1) {
  if (g0 == g1) throw Error("need two distinct group elements");
  const auto alpha = group.Elements();
  const int n = static_cast<int>(alpha.size());
  // beta^{-1}(h) = alpha^{-1}(h - g0).
  auto beta_inv = [&](const GroupSpec::Element& h) {
    return static_cast<int>(group.IndexOf(group.Add(h, group.Neg(g0)))) + 1;
  };
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = beta_inv(group.Add(alpha[i - 1], g1));
  GroupTranslation out{n, Permutation(std::move(images)), {}};
  for (int i = 1; i <= n; ++i) {
    out.renaming[ElementA(i)] = "a_" + GroupSuffix(group, alpha[i - 1]);
    out.renaming[ElementB(i)] = "b_" + GroupSuffix(group, group.Add(alpha[i - 1], g0));
  }
  out.renaming[ElementC(0)] = "c_" + GroupSuffix(group, g0);
  out.renaming[ElementC(1)] = "c_" + GroupSuffix(group, g1);
  return out;
}

Permutation TauRelabel(int n, const Permutation& sigma) {
  if (sigma.n() != n || n % 2 != 0) throw Error("tau requires an involution");
  for (int c : sigma.CycleLengths()) {
    if (c != 2) throw Error("tau requires an involution");
  }
  std::vector<int> tau(n, 0);
  std::vector<bool> remaining(n + 1, true);
  int k = 1;
  for (int i = 1; i <= n; ++i) {
    if (!remaining[i]) continue;
    tau[i - 1] = k;
    tau[sigma(i) - 1] = n + 1 - k;
    remaining[i] = remaining[sigma(i)] = false;
    ++k;
  }
  return Permutation(std::move(tau));
}

void CheckArrangement(const Arrangement& arrangement) {
  const auto& lines = arrangement.lines;
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& u = lines[i].coeffs;
    if (u[0] == 0 && u[1] == 0 && u[2] == 0) throw Error("degenerate arrangement");
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const auto& v = lines[j].coeffs;
      const bool proportional = u[1] * v[2] == u[2] * v[1] && u[2] * v[0] == u[0] * v[2] &&
                                u[0] * v[1] == u[1] * v[0];
      if (proportional) throw Error("degenerate arrangement");
    }
  }
}

Arrangement RealizeFourCycles(int n, const Permutation& sigma) {
  const Permutation tau = TauRelabel(n, sigma);
  const Permutation tau_inv = tau.Inverse();
  std::vector<std::array<int64_t, 3>> a(n + 1), b(n + 1);
  for (int i = 1; i <= n / 2; ++i) {
    a[tau_inv(i)] = {-i, -1, -i};             // y = -ix - i
    b[tau_inv(i)] = {-i, -1, i};              // y = -ix + i
    a[tau_inv(n - i + 1)] = {i, -1, i};       // y = ix + i
    b[tau_inv(n - i + 1)] = {i, -1, -i};      // y = ix - i
  }
  Arrangement arr;
  for (int i = 1; i <= n; ++i) arr.lines.push_back({ElementA(i), a[i]});
  for (int i = 1; i <= n; ++i) arr.lines.push_back({ElementB(i), b[i]});
  arr.lines.push_back({ElementC(0), {0, 0, 1}});
  arr.lines.push_back({ElementC(1), {1, 0, 0}});
  CheckArrangement(arr);
  return arr;
}

Arrangement RealizeF(int n, const Permutation& tau) {
  if (tau.n() != n || n < 1) throw Error("size mismatch");
  Arrangement arr;
  for (int i = 1; i <= n; ++i) arr.lines.push_back({ElementA(i), {tau(i), -1, 0}});
  for (int i = 1; i <= n; ++i) arr.lines.push_back({ElementB(i), {tau(i), -1, 1}});
  arr.lines.push_back({ElementC(0), {0, 0, 1}});
  CheckArrangement(arr);
  return arr;
}

}  // namespace minorient
