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

// JSON interchange formats.
//
//   matroid:     {"elements": [names...], "flats": [[names...], ...]}
//                elements and flats in natural sorted order
//   arrangement: [{"name": "...", "line": [A, B, C]}, ...]
//   chirotope:   {"i,j,k": -1|0|1, ...} over sorted element indices

#ifndef MINORIENT_IO_H_
#define MINORIENT_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "minorient/chirotope.h"
#include "minorient/embed.h"
#include "minorient/families.h"
#include "minorient/matroid.h"
#include "minorient/orientability.h"

namespace minorient {

using Json = nlohmann::ordered_json;

Json MatroidToJson(const LineMatroid& m);
// The result follows the element order of the file. Errors: "bad matroid
// json" on schema problems, otherwise the validation diagnostic.
LineMatroid MatroidFromJson(const Json& j);

Json ArrangementToJson(const Arrangement& arrangement);
// Errors: "bad arrangement json", "degenerate arrangement".
Arrangement ArrangementFromJson(const Json& j);

Json ChirotopeToJson(const Chirotope& chi);
// Errors: "bad chirotope json".
Chirotope ChirotopeFromJson(const Json& j, int n);

Json SearchResultToJson(const SearchResult& result, const LineMatroid& m);
Json MinimalityReportToJson(const MinimalityReport& report, const LineMatroid& m);
Json EmbeddingReportToJson(const EmbeddingInstance& instance, const EmbeddingCheck& check);

// Errors: "cannot read <path>", "bad json in <path>".
Json ReadJsonFile(const std::string& path);

}  // namespace minorient

#endif  // MINORIENT_IO_H_
