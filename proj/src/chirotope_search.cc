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

// Backtracking search for a rank-3 chirotope with a prescribed zero set.
//
// Variables are the independent sorted triples, valued +1/-1. Every
// three-term Grassmann-Pluecker relation becomes a constraint over at most
// three products of two variables; terms through a dependent triple vanish
// and are dropped at setup. After each assignment the constraints watching
// the variable are re-evaluated: a constraint whose terms are all known and
// of one sign is a conflict, and a constraint whose known terms agree on a
// sign forces the last open term to the opposite sign whenever that term
// has a single unassigned variable.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "minorient/error.h"
#include "minorient/orientability.h"
#include "minorient/triples.h"

namespace minorient {
namespace {

struct Term {
  int8_t coef;
  int v1;
  int v2;
};

struct Relation {
  std::array<Term, 3> terms;
  int count;
};

// Read-only problem description shared by all workers.
struct Problem {
  int n = 0;
  std::vector<int64_t> var_rank;
  std::vector<int> rank_var;  // -1 for dependent triples
  std::vector<Relation> relations;
  std::vector<std::vector<int>> watch;
  std::vector<int> order;
  std::vector<std::pair<int, int8_t>> fixed;
  bool unsatisfiable = false;
};

Problem BuildProblem(const LineMatroid& m, const SearchOptions& options) {
  Problem pb;
  const int n = m.size();
  pb.n = n;
  const int64_t num = Choose3(n);
  pb.rank_var.assign(num, -1);
  for (int64_t r = 0; r < num; ++r) {
    const auto t = TripleUnrank(r);
    if (m.Dependent(t[0], t[1], t[2])) continue;
    pb.rank_var[r] = static_cast<int>(pb.var_rank.size());
    pb.var_rank.push_back(r);
  }
  pb.watch.resize(pb.var_rank.size());

  // (variable, parity) of the ordered triple, or variable -1 if dependent.
  auto lookup = [&](int i, int j, int k) {
    const int parity = SortTriple(i, j, k);
    return std::pair{pb.rank_var[TripleRank(i, j, k)], parity};
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == a) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a) continue;
          for (int e = d + 1; e < n; ++e) {
            if (e == a) continue;
            const std::array<std::array<int, 4>, 3> pairs{{
                {b, c, d, e},  // +X(abc) X(ade)
                {b, d, c, e},  // -X(abd) X(ace)
                {b, e, c, d},  // +X(abe) X(acd)
            }};
            Relation rel{};
            rel.count = 0;
            for (int t = 0; t < 3; ++t) {
              const auto [v1, p1] = lookup(a, pairs[t][0], pairs[t][1]);
              const auto [v2, p2] = lookup(a, pairs[t][2], pairs[t][3]);
              if (v1 < 0 || v2 < 0) continue;
              const int sign = (t == 1 ? -1 : 1) * p1 * p2;
              rel.terms[rel.count++] = Term{static_cast<int8_t>(sign), v1, v2};
            }
            if (rel.count == 0) continue;
            if (rel.count == 1) {
              // A lone nonzero product can never be balanced.
              pb.unsatisfiable = true;
              continue;
            }
            const int id = static_cast<int>(pb.relations.size());
            pb.relations.push_back(rel);
            for (int t = 0; t < rel.count; ++t) {
              for (int v : {rel.terms[t].v1, rel.terms[t].v2}) {
                auto& w = pb.watch[v];
                if (w.empty() || w.back() != id) w.push_back(id);
              }
            }
          }
        }
      }
    }
  }

  if (options.order == BranchOrder::kColexicographic) {
    for (int v = 0; v < static_cast<int>(pb.var_rank.size()); ++v) pb.order.push_back(v);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const int v = pb.rank_var[TripleRank(i, j, k)];
          if (v >= 0) pb.order.push_back(v);
        }
      }
    }
  }

  if (!pb.order.empty()) {
    const int basis_var = pb.order.front();
    pb.fixed.emplace_back(basis_var, 1);
    if (options.symmetry == SymmetryBreaking::kReorientation) {
      // Triples {x,y,z} and {e,u,v} (u, v in the basis, one per remaining
      // element e) are independent over GF(2), so some reorientation makes
      // all of them positive simultaneously.
      const auto basis = TripleUnrank(pb.var_rank[basis_var]);
      for (int e = 0; e < n; ++e) {
        if (e == basis[0] || e == basis[1] || e == basis[2]) continue;
        const std::array<std::array<int, 2>, 3> choices{
            {{basis[0], basis[1]}, {basis[0], basis[2]}, {basis[1], basis[2]}}};
        for (const auto& uv : choices) {
          const auto [v, parity] = lookup(e, uv[0], uv[1]);
          if (v < 0) continue;
          pb.fixed.emplace_back(v, static_cast<int8_t>(parity));
          break;
        }
      }
    }
  }
  return pb;
}

class Engine {
 public:
  enum class Outcome { kSat, kUnsat, kAbort };

  Engine(const Problem& pb, std::atomic<int64_t>* nodes, int64_t budget,
         const std::atomic<bool>* stop)
      : pb_(pb), nodes_(nodes), budget_(budget), stop_(stop), value_(pb.var_rank.size(), 0) {
    trail_.reserve(pb.var_rank.size());
  }

  // Assigns and propagates. On conflict the caller must UndoTo its mark.
  bool Assign(int var, int8_t sign) {
    value_[var] = sign;
    trail_.push_back(var);
    while (head_ < trail_.size()) {
      const int v = trail_[head_++];
      for (int rid : pb_.watch[v]) {
        if (!Revise(pb_.relations[rid])) {
          head_ = trail_.size();
          return false;
        }
      }
    }
    return true;
  }

  size_t mark() const { return trail_.size(); }

  void UndoTo(size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = 0;
      trail_.pop_back();
    }
    head_ = mark;
  }

  int8_t value(int var) const { return value_[var]; }

  // Applies fixed signs or a task prefix; false iff inconsistent.
  bool Impose(const std::vector<std::pair<int, int8_t>>& assignments) {
    for (const auto& [var, sign] : assignments) {
      if (value_[var] != 0) {
        if (value_[var] != sign) return false;
        continue;
      }
      if (!Assign(var, sign)) return false;
    }
    return true;
  }

  Outcome Search(size_t cursor) {
    const auto& order = pb_.order;
    while (cursor < order.size() && value_[order[cursor]] != 0) ++cursor;
    if (cursor == order.size()) return Outcome::kSat;
    const int var = order[cursor];
    for (int8_t sign : {int8_t{1}, int8_t{-1}}) {
      if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) return Outcome::kAbort;
      if (nodes_->fetch_add(1, std::memory_order_relaxed) >= budget_) {
        nodes_->fetch_sub(1, std::memory_order_relaxed);
        return Outcome::kAbort;
      }
      const size_t m = mark();
      if (Assign(var, sign)) {
        const Outcome o = Search(cursor + 1);
        if (o != Outcome::kUnsat) return o;
      }
      UndoTo(m);
    }
    return Outcome::kUnsat;
  }

  Chirotope Extract() const {
    Chirotope chi(pb_.n);
    for (size_t v = 0; v < value_.size(); ++v) chi.SetSorted(pb_.var_rank[v], value_[v]);
    return chi;
  }

  // First `depth` unassigned variables in branch order.
  std::vector<int> NextOpen(int depth) const {
    std::vector<int> out;
    for (int v : pb_.order) {
      if (static_cast<int>(out.size()) == depth) break;
      if (value_[v] == 0) out.push_back(v);
    }
    return out;
  }

 private:
  bool Revise(const Relation& rel) {
    int pos = 0, neg = 0, open = -1, num_open = 0;
    for (int t = 0; t < rel.count; ++t) {
      const Term& term = rel.terms[t];
      const int x = value_[term.v1], y = value_[term.v2];
      if (x != 0 && y != 0) {
        (term.coef * x * y > 0 ? pos : neg)++;
      } else {
        ++num_open;
        open = t;
      }
    }
    if (pos > 0 && neg > 0) return true;
    if (num_open == 0) return false;
    if (num_open > 1) return true;
    const Term& term = rel.terms[open];
    const int x = value_[term.v1], y = value_[term.v2];
    if (x == 0 && y == 0) return true;
    const int want = pos > 0 ? -1 : 1;
    const int free_var = x == 0 ? term.v1 : term.v2;
    const int known = x == 0 ? y : x;
    value_[free_var] = static_cast<int8_t>(want * term.coef * known);
    trail_.push_back(free_var);
    return true;
  }

  const Problem& pb_;
  std::atomic<int64_t>* nodes_;
  int64_t budget_;
  const std::atomic<bool>* stop_;
  std::vector<int8_t> value_;
  std::vector<int> trail_;
  size_t head_ = 0;
};

void VerifyCertificate(const Chirotope& chi, const LineMatroid& m) {
  if (!GpCheck(chi).ok || !ZeroSetMatches(chi, m)) {
    throw std::logic_error("search produced an invalid chirotope");
  }
}

SearchResult SearchSequential(const Problem& pb, const LineMatroid& m, int64_t budget) {
  SearchResult out;
  std::atomic<int64_t> nodes{0};
  Engine engine(pb, &nodes, budget, nullptr);
  if (!engine.Impose(pb.fixed)) {
    out.status = SearchStatus::kNone;
    return out;
  }
  const auto o = engine.Search(0);
  out.nodes = nodes.load();
  if (o == Engine::Outcome::kSat) {
    out.status = SearchStatus::kFound;
    out.chirotope = engine.Extract();
    VerifyCertificate(*out.chirotope, m);
  } else {
    out.status = o == Engine::Outcome::kUnsat ? SearchStatus::kNone
                                              : SearchStatus::kBudgetExhausted;
  }
  return out;
}

// Splits on the sign patterns of the first few open variables; any worker
// finding a certificate stops the rest, "none" needs every task refuted.
SearchResult SearchParallel(const Problem& pb, const LineMatroid& m, int64_t budget,
                            int workers) {
  SearchResult out;
  std::atomic<int64_t> nodes{0};
  std::atomic<bool> stop{false};
  Engine root(pb, &nodes, budget, nullptr);
  if (!root.Impose(pb.fixed)) {
    out.status = SearchStatus::kNone;
    return out;
  }
  int depth = 0;
  while ((1 << depth) < 4 * workers && depth < 12) ++depth;
  const std::vector<int> split = root.NextOpen(depth);
  if (split.empty()) return SearchSequential(pb, m, budget);
  const int num_tasks = 1 << split.size();

  std::atomic<int> next_task{0};
  std::atomic<bool> exhausted{false};
  std::mutex mu;
  std::optional<std::pair<int, Chirotope>> found;

  auto worker = [&] {
    Engine engine(pb, &nodes, budget, &stop);
    const bool ok = engine.Impose(pb.fixed);
    const size_t base = engine.mark();
    while (ok && !stop.load()) {
      const int task = next_task.fetch_add(1);
      if (task >= num_tasks) break;
      std::vector<std::pair<int, int8_t>> prefix;
      for (size_t b = 0; b < split.size(); ++b) {
        prefix.emplace_back(split[b], (task >> (split.size() - 1 - b)) & 1 ? -1 : 1);
      }
      if (engine.Impose(prefix)) {
        const auto o = engine.Search(0);
        if (o == Engine::Outcome::kSat) {
          std::lock_guard<std::mutex> lock(mu);
          if (!found || task < found->first) found.emplace(task, engine.Extract());
          stop.store(true);
        } else if (o == Engine::Outcome::kAbort && !stop.load()) {
          exhausted.store(true);
          stop.store(true);
        }
      }
      engine.UndoTo(base);
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  out.nodes = nodes.load();
  if (found) {
    out.status = SearchStatus::kFound;
    out.chirotope = std::move(found->second);
    VerifyCertificate(*out.chirotope, m);
  } else if (exhausted.load()) {
    out.status = SearchStatus::kBudgetExhausted;
  } else {
    out.status = SearchStatus::kNone;
  }
  return out;
}

}  // namespace

std::string_view ToString(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNone:
      return "none";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

std::string_view ToString(MinimalityVerdict verdict) {
  switch (verdict) {
    case MinimalityVerdict::kMinimalNonOrientable:
      return "minimal non-orientable";
    case MinimalityVerdict::kOrientable:
      return "orientable";
    case MinimalityVerdict::kNonOrientableNotMinimal:
      return "non-orientable, not minimal";
    case MinimalityVerdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

SearchResult FindChirotope(const LineMatroid& m, const SearchOptions& options) {
  if (m.size() > kMaxSearchElements) throw Error("beyond desk scale");
  const auto valid = m.Validate();
  if (!valid.ok) throw Error("invalid matroid: " + valid.diagnostic);
  const auto start = std::chrono::steady_clock::now();
  const Problem pb = BuildProblem(m, options);
  SearchResult out;
  if (pb.unsatisfiable) {
    out.status = SearchStatus::kNone;
  } else if (options.workers <= 1) {
    out = SearchSequential(pb, m, options.budget);
  } else {
    out = SearchParallel(pb, m, options.budget, options.workers);
  }
  out.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

MinimalityReport CertifyMinimalNonOrientable(const LineMatroid& m,
                                             const SearchOptions& options) {
  MinimalityReport report;
  report.base = FindChirotope(m, options);
  if (report.base.status == SearchStatus::kBudgetExhausted) {
    report.verdict = MinimalityVerdict::kInconclusive;
    return report;
  }
  if (report.base.status == SearchStatus::kFound) {
    // Deleting an element of an oriented matroid leaves an oriented matroid:
    // restrict the certificate.
    for (int e = 0; e < m.size(); ++e) {
      std::vector<int> keep;
      for (int k = 0; k < m.size(); ++k) {
        if (k != e) keep.push_back(k);
      }
      DeletionCertificate cert{m.name(e), {}};
      cert.result.status = SearchStatus::kFound;
      cert.result.chirotope = report.base.chirotope->Restricted(keep);
      VerifyCertificate(*cert.result.chirotope, DeleteElement(m, m.name(e)));
      report.deletions.push_back(std::move(cert));
    }
    report.verdict = MinimalityVerdict::kOrientable;
    return report;
  }
  bool any_none = false, any_exhausted = false;
  for (const auto& e : m.elements()) {
    DeletionCertificate cert{e, FindChirotope(DeleteElement(m, e), options)};
    any_none |= cert.result.status == SearchStatus::kNone;
    any_exhausted |= cert.result.status == SearchStatus::kBudgetExhausted;
    report.deletions.push_back(std::move(cert));
  }
  if (any_none) {
    report.verdict = MinimalityVerdict::kNonOrientableNotMinimal;
  } else if (any_exhausted) {
    report.verdict = MinimalityVerdict::kInconclusive;
  } else {
    report.verdict = MinimalityVerdict::kMinimalNonOrientable;
  }
  return report;
}

}  // namespace minorient
