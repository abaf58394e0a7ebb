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

#include "minorient/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "minorient/error.h"
#include "minorient/triples.h"

namespace minorient {
namespace {

std::vector<std::string> NaturalSorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end(),
            [](const std::string& a, const std::string& b) { return NaturalLess(a, b); });
  return v;
}

bool NaturalLessSeq(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const std::string& x, const std::string& y) { return NaturalLess(x, y); });
}

std::string TripleKey(int i, int j, int k) {
  return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

}  // namespace

Json MatroidToJson(const LineMatroid& m) {
  std::vector<std::vector<std::string>> flats;
  for (const auto& f : m.flats()) flats.push_back(NaturalSorted(f));
  std::sort(flats.begin(), flats.end(), NaturalLessSeq);
  Json j;
  j["elements"] = NaturalSorted(m.elements());
  j["flats"] = flats;
  return j;
}

LineMatroid MatroidFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("flats") ||
      !j["elements"].is_array() || !j["flats"].is_array()) {
    throw Error("bad matroid json");
  }
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> flats;
  try {
    elements = j["elements"].get<std::vector<std::string>>();
    flats = j["flats"].get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception&) {
    throw Error("bad matroid json");
  }
  return LineMatroid::Checked(std::move(elements), std::move(flats));
}

Json ArrangementToJson(const Arrangement& arrangement) {
  Json out = Json::array();
  for (const auto& line : arrangement.lines) {
    out.push_back({{"name", line.name}, {"line", line.coeffs}});
  }
  return out;
}

Arrangement ArrangementFromJson(const Json& j) {
  if (!j.is_array()) throw Error("bad arrangement json");
  Arrangement arr;
  try {
    for (const auto& item : j) {
      ArrangementLine line;
      line.name = item.at("name").get<std::string>();
      const auto& c = item.at("line");
      if (!c.is_array() || c.size() != 3) throw Error("bad arrangement json");
      for (int k = 0; k < 3; ++k) {
        if (!c[k].is_number_integer()) throw Error("bad arrangement json");
        line.coeffs[k] = c[k].get<int64_t>();
      }
      arr.lines.push_back(std::move(line));
    }
  } catch (const nlohmann::json::exception&) {
    throw Error("bad arrangement json");
  }
  CheckArrangement(arr);
  return arr;
}

Json ChirotopeToJson(const Chirotope& chi) {
  Json out = Json::object();
  const int n = chi.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) out[TripleKey(i, j, k)] = chi.Sign(i, j, k);
    }
  }
  return out;
}

Chirotope ChirotopeFromJson(const Json& j, int n) {
  if (!j.is_object()) throw Error("bad chirotope json");
  Chirotope chi(n);
  for (const auto& [key, value] : j.items()) {
    int a = 0, b = 0, c = 0;
    char s1 = 0, s2 = 0;
    std::istringstream in(key);
    if (!(in >> a >> s1 >> b >> s2 >> c) || s1 != ',' || s2 != ',' || !(a < b && b < c) ||
        a < 0 || c >= n || !value.is_number_integer()) {
      throw Error("bad chirotope json");
    }
    const int v = value.get<int>();
    if (v < -1 || v > 1) throw Error("bad chirotope json");
    chi.Set(a, b, c, v);
  }
  return chi;
}

Json SearchResultToJson(const SearchResult& result, const LineMatroid& m) {
  Json out;
  out["status"] = std::string(ToString(result.status));
  out["nodes_visited"] = result.nodes;
  out["wall_time_ms"] = result.wall_ms;
  if (result.chirotope) {
    out["elements"] = m.elements();
    out["chirotope"] = ChirotopeToJson(*result.chirotope);
  }
  return out;
}

Json MinimalityReportToJson(const MinimalityReport& report, const LineMatroid& m) {
  Json out;
  out["verdict"] = std::string(ToString(report.verdict));
  out["matroid"] = MatroidToJson(m);
  out["base"] = SearchResultToJson(report.base, m);
  Json deletions = Json::array();
  int certificates = 0;
  for (const auto& d : report.deletions) {
    const LineMatroid minor = DeleteElement(m, d.element);
    Json entry;
    entry["deleted"] = d.element;
    entry["result"] = SearchResultToJson(d.result, minor);
    certificates += d.result.status == SearchStatus::kFound;
    deletions.push_back(std::move(entry));
  }
  out["deletion_certificates"] = certificates;
  out["deletions"] = std::move(deletions);
  return out;
}

Json EmbeddingReportToJson(const EmbeddingInstance& instance, const EmbeddingCheck& check) {
  Json out;
  out["field"] = instance.spec.ToString();
  out["plane_order"] = instance.spec.order();
  out["matroid"] = MatroidToJson(instance.matroid);
  Json map = Json::object();
  for (const auto& e : NaturalSorted(instance.matroid.elements())) {
    map[e] = instance.map.at(e).ToString();
  }
  out["map"] = std::move(map);
  out["verdict"] = check.ok ? "embedding" : "not an embedding";
  out["triples_scanned"] = check.triples_scanned;
  if (check.violation) {
    out["first_violation"] = *check.violation;
  } else {
    out["first_violation"] = nullptr;
  }
  if (!check.ok) out["diagnostic"] = check.diagnostic;
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception&) {
    throw Error("bad json in " + path);
  }
}

}  // namespace minorient
