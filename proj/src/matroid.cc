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

#include "minorient/matroid.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "minorient/error.h"
#include "minorient/triples.h"

namespace minorient {
namespace {

std::string FlatString(const std::vector<std::string>& flat) {
  std::string out = "{";
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) out += ",";
    out += flat[i];
  }
  return out + "}";
}

std::vector<std::string> SortedNames(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return NaturalLess(a, b); });
  return names;
}

}  // namespace

bool NaturalLess(std::string_view a, std::string_view b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::string_view na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

LineMatroid::LineMatroid(std::vector<std::string> elements,
                         std::vector<std::vector<std::string>> flats)
    : elements_(std::move(elements)), flats_(std::move(flats)) {
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].empty() && structural_error_.empty()) {
      structural_error_ = "empty element name";
    }
    if (!index_.emplace(elements_[i], static_cast<int>(i)).second &&
        structural_error_.empty()) {
      structural_error_ = "duplicate element '" + elements_[i] + "'";
    }
  }
  const int n = size();
  dependent_.assign(n >= 3 ? static_cast<size_t>(Choose3(n)) : 0, false);
  for (const auto& flat : flats_) {
    std::vector<int> idx;
    for (const auto& name : flat) {
      auto it = index_.find(name);
      if (it == index_.end()) {
        if (structural_error_.empty()) {
          structural_error_ = "flat " + FlatString(flat) + " references unknown element '" +
                              name + "'";
        }
        continue;
      }
      idx.push_back(it->second);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (size_t x = 0; x < idx.size(); ++x) {
      for (size_t y = x + 1; y < idx.size(); ++y) {
        for (size_t z = y + 1; z < idx.size(); ++z) {
          dependent_[TripleRank(idx[x], idx[y], idx[z])] = true;
        }
      }
    }
    flat_idx_.push_back(std::move(idx));
  }
}

LineMatroid LineMatroid::Checked(std::vector<std::string> elements,
                                 std::vector<std::vector<std::string>> flats) {
  LineMatroid m(std::move(elements), std::move(flats));
  const auto v = m.Validate();
  if (!v.ok) throw Error("invalid matroid: " + v.diagnostic);
  return m;
}

std::optional<int> LineMatroid::IndexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ValidationResult LineMatroid::Validate() const {
  if (!structural_error_.empty()) return {false, structural_error_};
  for (size_t f = 0; f < flats_.size(); ++f) {
    if (flat_idx_[f].size() != flats_[f].size()) {
      return {false, "flat " + FlatString(flats_[f]) + " repeats an element"};
    }
    if (flats_[f].size() < 3) {
      return {false, "flat " + FlatString(flats_[f]) + " has fewer than 3 elements"};
    }
  }
  for (size_t f = 0; f < flat_idx_.size(); ++f) {
    for (size_t g = f + 1; g < flat_idx_.size(); ++g) {
      std::vector<int> common;
      std::set_intersection(flat_idx_[f].begin(), flat_idx_[f].end(), flat_idx_[g].begin(),
                            flat_idx_[g].end(), std::back_inserter(common));
      if (common.size() == flat_idx_[f].size() && common.size() == flat_idx_[g].size()) {
        return {false, "duplicate flat " + FlatString(flats_[f])};
      }
      if (common.size() >= 2) {
        return {false, "two flats share two elements: " + FlatString(flats_[f]) + " and " +
                           FlatString(flats_[g])};
      }
    }
  }
  if (std::find(dependent_.begin(), dependent_.end(), false) == dependent_.end()) {
    return {false, "rank < 3: every triple lies in one flat"};
  }
  return {};
}

bool LineMatroid::Dependent(int i, int j, int k) const {
  SortTriple(i, j, k);
  return dependent_[TripleRank(i, j, k)];
}

bool LineMatroid::Dependent(const std::array<std::string, 3>& triple) const {
  std::array<int, 3> idx{};
  for (int t = 0; t < 3; ++t) {
    auto found = IndexOf(triple[t]);
    if (!found) throw Error("bad triple");
    idx[t] = *found;
  }
  if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) throw Error("bad triple");
  return Dependent(idx[0], idx[1], idx[2]);
}

int LineMatroid::MaxFlatSize() const {
  // Two-point lines always exist in a simple matroid with >= 2 elements.
  int best = size() >= 2 ? 2 : size();
  for (const auto& f : flat_idx_) best = std::max(best, static_cast<int>(f.size()));
  return best;
}

bool LineMatroid::SameStructure(const LineMatroid& other) const {
  if (SortedNames(elements_) != SortedNames(other.elements_)) return false;
  std::set<std::vector<std::string>> mine, theirs;
  for (const auto& f : flats_) mine.insert(SortedNames(f));
  for (const auto& f : other.flats_) theirs.insert(SortedNames(f));
  return mine == theirs;
}

LineMatroid DeleteElement(const LineMatroid& m, std::string_view element) {
  if (!m.IndexOf(element)) throw Error("no such element");
  std::vector<std::string> elements;
  for (const auto& e : m.elements()) {
    if (e != element) elements.push_back(e);
  }
  std::vector<std::vector<std::string>> flats;
  for (const auto& f : m.flats()) {
    std::vector<std::string> kept;
    for (const auto& e : f) {
      if (e != element) kept.push_back(e);
    }
    if (kept.size() >= 3) flats.push_back(std::move(kept));
  }
  return LineMatroid::Checked(std::move(elements), std::move(flats));
}

LineMatroid Restrict(const LineMatroid& m, const std::vector<std::string>& subset) {
  std::unordered_set<std::string> keep;
  for (const auto& e : subset) {
    if (!m.IndexOf(e)) throw Error("no such element");
    keep.insert(e);
  }
  if (keep.size() < 3) throw Error("restriction below rank");
  std::vector<std::string> elements;
  for (const auto& e : m.elements()) {
    if (keep.count(e)) elements.push_back(e);
  }
  std::vector<std::vector<std::string>> flats;
  for (const auto& f : m.flats()) {
    std::vector<std::string> kept;
    for (const auto& e : f) {
      if (keep.count(e)) kept.push_back(e);
    }
    if (kept.size() >= 3) flats.push_back(std::move(kept));
  }
  LineMatroid r(std::move(elements), std::move(flats));
  if (!r.Validate().ok) throw Error("restriction below rank");
  return r;
}

LineMatroid Rename(const LineMatroid& m,
                   const std::map<std::string, std::string>& renaming) {
  auto map_name = [&](const std::string& e) {
    auto it = renaming.find(e);
    return it == renaming.end() ? e : it->second;
  };
  std::vector<std::string> elements;
  for (const auto& e : m.elements()) elements.push_back(map_name(e));
  std::vector<std::vector<std::string>> flats;
  for (const auto& f : m.flats()) {
    std::vector<std::string> g;
    for (const auto& e : f) g.push_back(map_name(e));
    flats.push_back(std::move(g));
  }
  return LineMatroid(std::move(elements), std::move(flats));
}

EmbeddingCheck IsEmbedding(const LineMatroid& m, const ElementMap& image,
                           const FieldSpec& spec) {
  EmbeddingCheck out;
  std::vector<const ProjPoint*> pts;
  pts.reserve(m.size());
  for (const auto& e : m.elements()) {
    auto it = image.find(e);
    if (it == image.end()) {
      out.diagnostic = "map is not total: missing '" + e + "'";
      return out;
    }
    if (!(it->second.spec() == spec)) {
      out.diagnostic = "field mismatch at '" + e + "'";
      return out;
    }
    pts.push_back(&it->second);
  }
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (*pts[i] == *pts[j]) {
        out.diagnostic = "not injective: '" + m.name(i) + "' and '" + m.name(j) +
                         "' share " + pts[i]->ToString();
        return out;
      }
    }
  }
  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        ++out.triples_scanned;
        const bool col = Collinear(*pts[i], *pts[j], *pts[k]);
        const bool dep = m.Dependent(i, j, k);
        if (col != dep) {
          out.violation = std::array<std::string, 3>{m.name(i), m.name(j), m.name(k)};
          out.diagnostic = std::string(col ? "collinear image of independent triple "
                                           : "non-collinear image of dependent triple ") +
                           "{" + m.name(i) + "," + m.name(j) + "," + m.name(k) + "}";
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace minorient
