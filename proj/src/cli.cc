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

#include "minorient/cli.h"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "minorient/embed.h"
#include "minorient/error.h"
#include "minorient/io.h"
#include "minorient/orientability.h"

namespace minorient {
namespace {

struct Options {
  // build sigma / orient criterion / realize
  int n = 0;
  std::string perm;
  std::string tau;
  // build group / orient criterion
  std::string group;
  std::string g0;
  std::string g1;
  // search
  std::string matroid_path;
  int64_t budget = kDefaultBudget;
  int workers = 1;
  std::string symmetry = "reorientation";
  std::string order = "lex";
  // embed
  int prime = 0;
  std::string subgroup;
  int complex_n = 0;
  double tol_zero = 1e-9;
  double tol_nonzero = 1e-6;
  int64_t q = 0;
  // sweep
  int min_n = 2;
  int max_n = 0;
  // realize
  bool four_cycles = false;
  bool f_family = false;
};

SearchOptions MakeSearchOptions(const Options& o) {
  SearchOptions s;
  s.budget = o.budget;
  s.workers = o.workers;
  if (o.symmetry == "first-basis") {
    s.symmetry = SymmetryBreaking::kFirstBasis;
  } else if (o.symmetry == "reorientation") {
    s.symmetry = SymmetryBreaking::kReorientation;
  } else {
    throw Error("unknown symmetry mode '" + o.symmetry + "'");
  }
  if (o.order == "lex") {
    s.order = BranchOrder::kLexicographic;
  } else if (o.order == "colex") {
    s.order = BranchOrder::kColexicographic;
  } else {
    throw Error("unknown branch order '" + o.order + "'");
  }
  return s;
}

Json SearchEcho(const Options& o) {
  return {{"budget", o.budget}, {"workers", o.workers}, {"symmetry", o.symmetry},
          {"order", o.order}};
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int CmdBuildSigma(const Options& o, std::ostream& out) {
  const Permutation sigma = Permutation::Parse(o.perm, o.n);
  Emit(out, MatroidToJson(BuildMSigma(o.n, sigma)));
  return kExitOk;
}

int CmdBuildGroup(const Options& o, std::ostream& out) {
  const GroupSpec g = GroupSpec::Parse(o.group);
  Emit(out, MatroidToJson(BuildGroupMatroid(g, g.ParseElement(o.g0), g.ParseElement(o.g1))));
  return kExitOk;
}

int CmdOrientCriterion(const Options& o, std::ostream& out) {
  Json j;
  j["command"] = "orient criterion";
  if (!o.perm.empty()) {
    const Permutation sigma = Permutation::Parse(o.perm, o.n);
    const auto c = CriterionSigma(sigma);
    j["n"] = sigma.n();
    j["perm"] = sigma.ToCycleString();
    j["cycle_lengths"] = c.cycle_lengths;
    j["orientable"] = c.orientable;
  } else {
    const GroupSpec g = GroupSpec::Parse(o.group);
    const auto g0 = g.ParseElement(o.g0), g1 = g.ParseElement(o.g1);
    const auto c = CriterionGroup(g, g0, g1);
    const auto translated = GroupToSigma(g, g0, g1);
    j["group"] = g.ToString();
    j["g0"] = g.ElementName(g0);
    j["g1"] = g.ElementName(g1);
    j["r"] = c.r;
    j["orientable"] = c.orientable;
    j["cycle_lengths"] = SigmaGraph(translated.sigma).cycle_lengths;
  }
  Emit(out, j);
  return kExitOk;
}

int CmdOrientBrute(const Options& o, std::ostream& out) {
  const LineMatroid m = MatroidFromJson(ReadJsonFile(o.matroid_path));
  const auto result = FindChirotope(m, MakeSearchOptions(o));
  Json j;
  j["command"] = "orient brute";
  j["inputs"] = SearchEcho(o);
  j["inputs"]["matroid"] = o.matroid_path;
  j["verdict"] = result.status == SearchStatus::kFound  ? "orientable"
                 : result.status == SearchStatus::kNone ? "non-orientable"
                                                         : "inconclusive";
  j["result"] = SearchResultToJson(result, m);
  Emit(out, j);
  return result.status == SearchStatus::kBudgetExhausted ? kExitInconclusive : kExitOk;
}

int CmdMinimal(const Options& o, std::ostream& out) {
  const LineMatroid m = MatroidFromJson(ReadJsonFile(o.matroid_path));
  const auto start = std::chrono::steady_clock::now();
  const auto report = CertifyMinimalNonOrientable(m, MakeSearchOptions(o));
  Json j;
  j["command"] = "minimal";
  j["inputs"] = SearchEcho(o);
  j["inputs"]["matroid"] = o.matroid_path;
  j.update(MinimalityReportToJson(report, m));
  j["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  Emit(out, j);
  return report.verdict == MinimalityVerdict::kInconclusive ? kExitInconclusive : kExitOk;
}

EmbeddingInstance InstanceFromOptions(const Options& o) {
  if (o.prime != 0) return PsiPrime(o.prime);
  std::vector<int> parts;
  std::stringstream in(o.subgroup);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      parts.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw Error("--subgroup expects M,P,T");
    }
  }
  if (parts.size() != 3) throw Error("--subgroup expects M,P,T");
  return PsiSubgroup(parts[0], parts[1], parts[2]);
}

int CmdEmbedVerify(const Options& o, std::ostream& out) {
  const auto instance = InstanceFromOptions(o);
  const auto check = VerifyEmbedding(instance);
  Json j;
  j["command"] = "embed verify";
  if (o.prime != 0) {
    j["inputs"] = {{"prime", o.prime}};
  } else {
    j["inputs"] = {{"subgroup", o.subgroup}};
  }
  j.update(EmbeddingReportToJson(instance, check));
  const auto crit = CriterionGroup(GroupSpec({instance.matroid.size() / 2 - 1}), {0}, {1});
  j["r"] = crit.r;
  j["orientable"] = crit.orientable;
  Emit(out, j);
  return kExitOk;
}

int CmdEmbedComplex(const Options& o, std::ostream& out) {
  const auto r = ComplexCheck(o.complex_n, o.tol_zero, o.tol_nonzero);
  Json j;
  j["command"] = "embed complex";
  j["inputs"] = {{"n", o.complex_n}, {"tol_zero", o.tol_zero}, {"tol_nonzero", o.tol_nonzero}};
  j["verdict"] = r.ok ? "pass" : "fail";
  j["max_dependent_residual"] = r.max_dependent_residual;
  j["min_independent_det"] = r.min_independent_det;
  j["triples_scanned"] = r.triples_scanned;
  Emit(out, j);
  return kExitOk;
}

int CmdEmbedObstruction(const Options& o, std::ostream& out) {
  const LineMatroid m = MatroidFromJson(ReadJsonFile(o.matroid_path));
  if (o.q < 2) throw Error("--q must be at least 2");
  const auto reason = Obstruction(m, o.q);
  Json j;
  j["command"] = "embed obstruction";
  j["inputs"] = {{"matroid", o.matroid_path}, {"q", o.q}};
  j["max_line"] = m.MaxFlatSize();
  j["elements"] = m.size();
  if (reason) {
    j["obstruction"] = *reason;
  } else {
    j["obstruction"] = nullptr;
  }
  Emit(out, j);
  return kExitOk;
}

int CmdSweep(const Options& o, std::ostream& out) {
  if (o.max_n < 2 || o.min_n < 2 || o.min_n > o.max_n) throw Error("bad --min-n/--max-n");
  if (2 * o.max_n + 2 > kMaxSearchElements) throw Error("beyond desk scale");
  const SearchOptions search = MakeSearchOptions(o);
  const auto start = std::chrono::steady_clock::now();
  Json rows = Json::array();
  int agreements = 0, disagreements = 0, exhausted = 0;
  int64_t total_nodes = 0;
  for (int n = o.min_n; n <= o.max_n; ++n) {
    for (const auto& sigma : Derangements(n)) {
      const auto crit = CriterionSigma(sigma);
      const auto result = FindChirotope(BuildMSigma(n, sigma), search);
      total_nodes += result.nodes;
      Json row;
      row["n"] = n;
      row["perm"] = sigma.ToCycleString();
      row["cycle_lengths"] = crit.cycle_lengths;
      row["criterion"] = crit.orientable ? "orientable" : "non-orientable";
      if (result.status == SearchStatus::kBudgetExhausted) {
        row["brute"] = "budget-exhausted";
        row["agree"] = nullptr;
        ++exhausted;
      } else {
        const bool brute = result.status == SearchStatus::kFound;
        row["brute"] = brute ? "orientable" : "non-orientable";
        row["agree"] = brute == crit.orientable;
        (brute == crit.orientable ? agreements : disagreements)++;
      }
      row["nodes_visited"] = result.nodes;
      row["wall_time_ms"] = result.wall_ms;
      rows.push_back(std::move(row));
    }
  }
  Json j;
  j["command"] = "sweep";
  j["inputs"] = SearchEcho(o);
  j["inputs"]["min_n"] = o.min_n;
  j["inputs"]["max_n"] = o.max_n;
  j["rows"] = std::move(rows);
  j["summary"] = {{"rows", agreements + disagreements + exhausted},
                  {"agreements", agreements},
                  {"disagreements", disagreements},
                  {"exhausted", exhausted},
                  {"nodes_visited", total_nodes}};
  j["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  Emit(out, j);
  return exhausted > 0 ? kExitInconclusive : kExitOk;
}

int CmdRealize(const Options& o, std::ostream& out) {
  Arrangement arr;
  std::optional<LineMatroid> target;
  Json j;
  j["command"] = "realize";
  if (o.four_cycles) {
    const Permutation sigma = Permutation::Parse(o.perm, o.n);
    arr = RealizeFourCycles(o.n, sigma);
    target = BuildMSigma(o.n, sigma);
    j["inputs"] = {{"family", "four-cycles"}, {"n", o.n}, {"perm", sigma.ToCycleString()}};
    j["tau"] = TauRelabel(o.n, sigma).images();
  } else {
    const Permutation tau =
        o.tau.empty() ? Permutation::Identity(o.n) : Permutation::Parse(o.tau, o.n);
    arr = RealizeF(o.n, tau);
    if (o.n >= 2) target = BuildMPrime(o.n);
    j["inputs"] = {{"family", "F"}, {"n", o.n}, {"tau", tau.images()}};
  }
  const Chirotope chi = ChirotopeOfArrangement(arr);
  j["arrangement"] = ArrangementToJson(arr);
  j["gp_ok"] = GpCheck(chi).ok;
  if (target) {
    const auto check = CheckRealization(arr, *target);
    j["matroid"] = MatroidToJson(*target);
    j["exact"] = check.exact;
    if (check.mismatch) {
      j["mismatch"] = *check.mismatch;
    } else {
      j["mismatch"] = nullptr;
    }
  }
  Emit(out, j);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Orientability and embeddings of rank-3 line matroids", "minorient"};
  app.require_subcommand(1);

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "Decision-node budget")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "Search threads")->check(CLI::Range(1, 256));
    cmd->add_option("--symmetry", o.symmetry, "first-basis | reorientation");
    cmd->add_option("--order", o.order, "lex | colex");
  };

  auto* build = app.add_subcommand("build", "Construct a matroid as JSON");
  build->require_subcommand(1);
  auto* build_sigma = build->add_subcommand("sigma", "M(n, sigma)");
  build_sigma->add_option("--n", o.n)->required();
  build_sigma->add_option("--perm", o.perm, "Cycle notation, e.g. \"(1 3)(2 4)\"")->required();
  auto* build_group = build->add_subcommand("group", "M(G, g0, g1)");
  build_group->add_option("--group", o.group, "e.g. Z3 or Z2xZ2")->required();
  build_group->add_option("--g0", o.g0)->required();
  build_group->add_option("--g1", o.g1)->required();

  auto* orient = app.add_subcommand("orient", "Decide orientability");
  orient->require_subcommand(1);
  auto* criterion = orient->add_subcommand("criterion", "Closed-form criterion");
  auto* c_perm = criterion->add_option("--perm", o.perm);
  criterion->add_option("--n", o.n);
  auto* c_group = criterion->add_option("--group", o.group);
  criterion->add_option("--g0", o.g0)->needs(c_group);
  criterion->add_option("--g1", o.g1)->needs(c_group);
  c_perm->excludes(c_group);
  auto* brute = orient->add_subcommand("brute", "Exhaustive chirotope search");
  brute->add_option("--matroid", o.matroid_path)->required()->check(CLI::ExistingFile);
  add_search(brute);

  auto* minimal = app.add_subcommand("minimal", "Certify minimal non-orientability");
  minimal->add_option("--matroid", o.matroid_path)->required()->check(CLI::ExistingFile);
  add_search(minimal);

  auto* embed = app.add_subcommand("embed", "Projective-plane embeddings");
  embed->require_subcommand(1);
  auto* verify = embed->add_subcommand("verify", "Check an explicit embedding map");
  auto* v_prime = verify->add_option("--prime", o.prime);
  auto* v_sub = verify->add_option("--subgroup", o.subgroup, "M,P,T");
  v_prime->excludes(v_sub);
  verify->require_option(1);
  auto* complex = embed->add_subcommand("complex", "Numerical check over C");
  complex->add_option("--n", o.complex_n)->required();
  complex->add_option("--tol-zero", o.tol_zero);
  complex->add_option("--tol-nonzero", o.tol_nonzero);
  auto* obstruction = embed->add_subcommand("obstruction", "Counting obstructions");
  obstruction->add_option("--matroid", o.matroid_path)->required()->check(CLI::ExistingFile);
  obstruction->add_option("--q", o.q)->required();

  auto* sweep = app.add_subcommand("sweep", "Criterion vs. search over all derangements");
  sweep->add_option("--max-n", o.max_n)->required();
  sweep->add_option("--min-n", o.min_n);
  add_search(sweep);

  auto* realize = app.add_subcommand("realize", "Exact straight-line realizations");
  auto* r_four = realize->add_flag("--four-cycles", o.four_cycles);
  auto* r_f = realize->add_flag("--F", o.f_family);
  r_four->excludes(r_f);
  realize->add_option("--n", o.n)->required();
  realize->add_option("--perm", o.perm);
  realize->add_option("--tau", o.tau);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build_sigma->parsed()) return CmdBuildSigma(o, out);
    if (build_group->parsed()) return CmdBuildGroup(o, out);
    if (criterion->parsed()) {
      if (o.perm.empty() == o.group.empty()) {
        throw Error("orient criterion needs exactly one of --perm or --group");
      }
      if (!o.group.empty() && (o.g0.empty() || o.g1.empty())) {
        throw Error("--group needs --g0 and --g1");
      }
      return CmdOrientCriterion(o, out);
    }
    if (brute->parsed()) return CmdOrientBrute(o, out);
    if (minimal->parsed()) return CmdMinimal(o, out);
    if (verify->parsed()) return CmdEmbedVerify(o, out);
    if (complex->parsed()) return CmdEmbedComplex(o, out);
    if (obstruction->parsed()) return CmdEmbedObstruction(o, out);
    if (sweep->parsed()) return CmdSweep(o, out);
    if (realize->parsed()) {
      if (o.four_cycles == o.f_family) throw Error("realize needs --four-cycles or --F");
      if (o.four_cycles && o.perm.empty()) throw Error("--four-cycles needs --perm");
      return CmdRealize(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace minorient
