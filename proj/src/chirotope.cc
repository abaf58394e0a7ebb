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

#include "minorient/chirotope.h"

#include <algorithm>
#include <unordered_map>

#include "minorient/error.h"
#include "minorient/triples.h"

namespace minorient {
namespace {

int SignOf(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

Chirotope::Chirotope(int n) : n_(n), signs_(n >= 3 ? Choose3(n) : 0, 0) {}

int Chirotope::Sign(int i, int j, int k) const {
  if (i == j || j == k || i == k) return 0;
  const int parity = SortTriple(i, j, k);
  return parity * signs_[TripleRank(i, j, k)];
}

void Chirotope::Set(int i, int j, int k, int sign) {
  const int parity = SortTriple(i, j, k);
  signs_[TripleRank(i, j, k)] = static_cast<int8_t>(parity * sign);
}

bool Chirotope::HasNonzero() const {
  return std::any_of(signs_.begin(), signs_.end(), [](int8_t s) { return s != 0; });
}

Chirotope Chirotope::Reoriented(int element) const {
  Chirotope out = *this;
  for (int64_t r = 0; r < num_triples(); ++r) {
    const auto t = TripleUnrank(r);
    if (t[0] == element || t[1] == element || t[2] == element) out.signs_[r] = -out.signs_[r];
  }
  return out;
}

Chirotope Chirotope::Restricted(const std::vector<int>& keep) const {
  const int k = static_cast<int>(keep.size());
  Chirotope out(k);
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      for (int z = y + 1; z < k; ++z) out.Set(x, y, z, Sign(keep[x], keep[y], keep[z]));
    }
  }
  return out;
}

GpCheckResult GpCheck(const Chirotope& chi) {
  GpCheckResult out;
  const int n = chi.n();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == a) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a) continue;
          for (int e = d + 1; e < n; ++e) {
            if (e == a) continue;
            ++out.relations_checked;
            const int s1 = chi.Sign(a, b, c) * chi.Sign(a, d, e);
            const int s2 = -chi.Sign(a, b, d) * chi.Sign(a, c, e);
            const int s3 = chi.Sign(a, b, e) * chi.Sign(a, c, d);
            const bool pos = s1 > 0 || s2 > 0 || s3 > 0;
            const bool neg = s1 < 0 || s2 < 0 || s3 < 0;
            if (pos != neg) {
              out.ok = false;
              out.violation = GpViolation{{a, b, c, d, e}, {s1, s2, s3}};
              return out;
            }
          }
        }
      }
    }
  }
  return out;
}

bool ZeroSetMatches(const Chirotope& chi, const LineMatroid& m) {
  if (chi.n() != m.size()) return false;
  for (int64_t r = 0; r < chi.num_triples(); ++r) {
    const auto t = TripleUnrank(r);
    if ((chi.SortedSign(r) == 0) != m.Dependent(t[0], t[1], t[2])) return false;
  }
  return true;
}

Chirotope ChirotopeOfArrangement(const Arrangement& arrangement) {
  CheckArrangement(arrangement);
  const auto& lines = arrangement.lines;
  const int n = static_cast<int>(lines.size());
  if (n < 3) throw Error("degenerate arrangement");
  Chirotope chi(n);
  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        const auto& u = lines[i].coeffs;
        const auto& v = lines[j].coeffs;
        const auto& w = lines[k].coeffs;
        const __int128 det =
            __int128{u[0]} * (__int128{v[1]} * w[2] - __int128{v[2]} * w[1]) -
            __int128{u[1]} * (__int128{v[0]} * w[2] - __int128{v[2]} * w[0]) +
            __int128{u[2]} * (__int128{v[0]} * w[1] - __int128{v[1]} * w[0]);
        chi.SetSorted(TripleRank(i, j, k), SignOf(det));
      }
    }
  }
  return chi;
}

RealizationCheck CheckRealization(const Arrangement& arrangement, const LineMatroid& m) {
  RealizationCheck out;
  const auto& lines = arrangement.lines;
  if (static_cast<int>(lines.size()) != m.size()) return out;
  std::vector<int> to_matroid;
  for (const auto& line : lines) {
    auto idx = m.IndexOf(line.name);
    if (!idx) return out;
    to_matroid.push_back(*idx);
  }
  const Chirotope chi = ChirotopeOfArrangement(arrangement);
  const int n = chi.n();
  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        const bool concurrent = chi.Sign(i, j, k) == 0;
        if (concurrent != m.Dependent(to_matroid[i], to_matroid[j], to_matroid[k])) {
          out.mismatch = std::array<std::string, 3>{lines[i].name, lines[j].name, lines[k].name};
          return out;
        }
      }
    }
  }
  out.exact = true;
  return out;
}

}  // namespace minorient
