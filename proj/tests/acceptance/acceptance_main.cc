// Copyright 2026 The Subaspect Authors.
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "subaspect/analysis.h"
#include "subaspect/aspects.h"
#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/ensemble.h"
#include "subaspect/fileio.h"
#include "subaspect/geometry.h"
#include "subaspect/metrics.h"
#include "subaspect/oracle.h"
#include "subaspect/parallel.h"
#include "subaspect/registry.h"
#include "subaspect/report.h"
#include "subaspect/rouge.h"
#include "subaspect/synthetic.h"
#include "support.h"

namespace subaspect {
namespace {

namespace fs = std::filesystem;
namespace oracle = testing::oracle;

constexpr double kRougeTolerance = 1e-9;
constexpr double kRougeBudgetSeconds = 5.0;
constexpr int kRougeTrials = 200;
constexpr std::size_t kMaxSequenceLength = 8;

constexpr double kGeometryTolerance = 1e-9;
constexpr int kGeometryTrials = 500;

constexpr std::size_t kPerfectCopyDocs = 100;

constexpr std::size_t kLeadBiasDocs = 500;
constexpr double kLeadBiasMarginPoints = 10.0;
constexpr double kLeadBiasBudgetSeconds = 30.0;

constexpr std::size_t kScalingDocs = 50;
constexpr double kScalingFactor = 3.7;

constexpr int kEnsembleInstances = 1000;

constexpr double kSimplexTolerance = 1e-9;

constexpr double kPipelineBudgetSeconds = 60.0;
constexpr std::size_t kParallelJobs = 4;

constexpr double kReferenceTolerance = 0.001;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

// ---------------------------------------------------------------------------

std::vector<TokenizedSentence> RandomText(std::mt19937_64& rng) {
  static const char* vocab[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<TokenizedSentence> text(1 + rng() % 2);
  for (auto& s : text) {
    const std::size_t len = 1 + rng() % kMaxSequenceLength;
    for (std::size_t i = 0; i < len; ++i) s.push_back(vocab[rng() % 6]);
  }
  return text;
}

Outcome RougeOracleEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20190531);
  double worst = 0.0;
  for (int t = 0; t < kRougeTrials; ++t) {
    const auto c = RandomText(rng), r = RandomText(rng);
    worst = std::max({worst, std::abs(RougeN(c, r, 1) - oracle::RougeN(c, r, 1)),
                      std::abs(RougeN(c, r, 2) - oracle::RougeN(c, r, 2)),
                      std::abs(RougeL(c, r) - oracle::RougeL(c, r))});
    worst = std::max(worst, std::abs(double(LcsLength(c[0], r[0])) -
                                     double(oracle::BruteLcs(c[0], r[0]))));
  }
  const double secs = Seconds(start);
  return {worst <= kRougeTolerance && secs < kRougeBudgetSeconds,
          Fmt("%.0f pairs, max |diff| %.1e, %.2f s", kRougeTrials, worst, secs)};
}

// ---------------------------------------------------------------------------

Outcome GeometrySuite() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  int containment = 0, monotone = 0, symmetric = 0, bounded = 0;
  for (int t = 0; t < kGeometryTrials; ++t) {
    std::vector<Point2> s, other;
    const int n = 3 + t % 30;
    for (int i = 0; i < n; ++i) s.push_back({g(rng), g(rng)});
    for (int i = 0; i < 3 + t % 9; ++i) other.push_back({g(rng) + 0.7, g(rng)});
    const ConvexPolygon hs = Quickhull(s);
    bool inside = true;
    for (const auto& p : s) inside = inside && ContainsPoint(hs, p, kGeometryTolerance);
    containment += inside;
    std::vector<Point2> subset;
    for (const auto& p : s) {
      if (rng() % 2) subset.push_back(p);
    }
    monotone += PolygonArea(hs) + kGeometryTolerance >=
                PolygonArea(Quickhull(subset));
    const ConvexPolygon ho = Quickhull(other);
    const double ab = PolygonIntersectionArea(hs, ho);
    const double ba = PolygonIntersectionArea(ho, hs);
    symmetric += std::abs(ab - ba) <= kGeometryTolerance;
    bounded += ab <= std::min(PolygonArea(hs), PolygonArea(ho)) +
                         kGeometryTolerance;
  }
  const ConvexPolygon a({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const ConvexPolygon b({{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}});
  const double quarter = PolygonIntersectionArea(a, b);
  const bool pass = containment == kGeometryTrials &&
                    monotone == kGeometryTrials &&
                    symmetric == kGeometryTrials && bounded == kGeometryTrials &&
                    std::abs(quarter - 0.25) <= kGeometryTolerance;
  std::ostringstream d;
  d << kGeometryTrials << " trials: contain " << containment << ", monotone "
    << monotone << ", symmetric " << symmetric << ", bounded " << bounded
    << "; square overlap " << Fmt("%.12f", quarter);
  return {pass, d.str()};
}

// ---------------------------------------------------------------------------

Outcome PerfectCopyCorpus() {
  SyntheticOptions opts;
  opts.num_docs = kPerfectCopyDocs;
  opts.seed = 101;
  const SyntheticCorpus s =
      MakeSyntheticCorpus(SyntheticKind::kPerfectCopy, opts, "perfect_copy");
  const auto& docs = s.corpus.documents();
  std::vector<MetricRecord> records;
  std::size_t oracle_is_copy = 0, so_self = 0, first_exact = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const Document& doc = docs[d];
    const Selection o = GreedyOracle(doc, doc.num_target());
    oracle_is_copy += o.indices == s.provenance[d];
    const MetricRecord self = EvaluateSelection(doc, o, o, nullptr);
    so_self += self.so == 1.0;
    const Selection first =
        RunAlgorithm("first", doc, nullptr, doc.num_target(), {});
    const MetricRecord fr = EvaluateSelection(doc, first, o, nullptr);
    // Direct enumeration: copied sentences that sit among the first k.
    std::size_t leading = 0;
    for (std::size_t p : s.provenance[d]) leading += p < doc.num_target();
    first_exact += fr.so == static_cast<double>(leading) /
                                static_cast<double>(s.provenance[d].size());
    records.push_back(self);
    records.push_back(fr);
  }
  ReportInputs in;
  in.corpus_name = "perfect_copy";
  in.metrics = records;
  const BiasReport report = BuildReport(in);
  std::string oracle_r = "?", oracle_so = "?";
  for (const auto& a : report.algorithms) {
    if (a.algorithm == "oracle") {
      oracle_r = FormatPercent(a.r);
      oracle_so = FormatPercent(a.so);
    }
  }
  const std::size_t n = docs.size();
  const bool pass = oracle_r == "100.0" && oracle_so == "100.0" &&
                    so_self == n && first_exact == n && oracle_is_copy == n;
  std::ostringstream d;
  d << n << " docs: oracle R " << oracle_r << ", SO(oracle) " << oracle_so
    << ", oracle=copied " << oracle_is_copy << "/" << n << ", First SO exact "
    << first_exact << "/" << n;
  return {pass, d.str()};
}

// ---------------------------------------------------------------------------

std::pair<double, double> FirstLastMeans(SyntheticKind kind,
                                         std::uint64_t seed) {
  SyntheticOptions opts;
  opts.num_docs = kLeadBiasDocs;
  opts.seed = seed;
  const SyntheticCorpus s = MakeSyntheticCorpus(kind, opts);
  const auto& docs = s.corpus.documents();
  std::vector<double> first(docs.size()), last(docs.size());
  ParallelFor(docs.size(), DefaultJobs(), [&](std::size_t d) {
    const Document& doc = docs[d];
    for (auto [name, out] : {std::pair{"first", &first}, {"last", &last}}) {
      const Selection sel =
          RunAlgorithm(name, doc, nullptr, doc.num_target(), {});
      (*out)[d] = RougeAll(SelectedTokens(doc, sel), doc.target_tokens).mean;
    }
  });
  double f = 0, l = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    f += first[d];
    l += last[d];
  }
  return {100.0 * f / docs.size(), 100.0 * l / docs.size()};
}

Outcome LeadBiasReproduction() {
  const auto start = std::chrono::steady_clock::now();
  const auto [lead_first, lead_last] =
      FirstLastMeans(SyntheticKind::kLeadBiased, 11);
  const double lead_secs = Seconds(start);
  const auto [tail_first, tail_last] =
      FirstLastMeans(SyntheticKind::kTailBiased, 12);
  const bool pass = lead_first - lead_last >= kLeadBiasMarginPoints &&
                    tail_last - tail_first >= kLeadBiasMarginPoints &&
                    lead_secs < kLeadBiasBudgetSeconds;
  return {pass,
          Fmt("lead: First %.1f vs Last %.1f; tail: First %.1f vs Last %.1f",
              lead_first, lead_last, tail_first, tail_last) +
              Fmt(" (%.2f s per 500 docs)", lead_secs)};
}

// ---------------------------------------------------------------------------

Outcome ScalingInvariance() {
  SyntheticOptions opts;
  opts.num_docs = kScalingDocs;
  opts.seed = 3;
  const SyntheticCorpus s = MakeSyntheticCorpus(SyntheticKind::kMixed, opts);
  const EmbeddingStore store =
      EncodeCorpusFallback(s.corpus, kDefaultFallbackDim, DefaultJobs());
  const std::vector<std::string> algorithms = {
      "heuristic_volume", "convexfall", "n_nearest", "k_nearest",
      "mmr",              "lexrank",    "kmeans"};
  std::size_t changed = 0, total = 0;
  std::string first_change;
  for (const auto& doc : s.corpus.documents()) {
    const EmbeddingMatrix& emb = store.Get(doc.id);
    const EmbeddingMatrix scaled = emb.Scaled(kScalingFactor);
    for (const auto& name : algorithms) {
      const std::size_t k = doc.num_target();
      ++total;
      if (RunAlgorithm(name, doc, &emb, k, {}) !=
          RunAlgorithm(name, doc, &scaled, k, {})) {
        if (!changed) first_change = name + " on " + doc.id;
        ++changed;
      }
    }
  }
  std::ostringstream d;
  d << total << " selections over " << s.corpus.size() << " docs, " << changed
    << " changed";
  if (changed) d << " (first: " << first_change << ")";
  return {changed == 0, d.str()};
}

// ---------------------------------------------------------------------------

Outcome EnsembleContract() {
  std::mt19937_64 rng(5150);
  int ok = 0;
  for (int t = 0; t < kEnsembleInstances; ++t) {
    const std::string doc = "doc" + std::to_string(t);
    const std::size_t n = 1 + rng() % 40;
    std::vector<Selection> in;
    std::set<std::size_t> uni;
    for (std::size_t s = 0; s < 1 + rng() % 6; ++s) {
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < 1 + rng() % 8; ++j) idx.push_back(rng() % n);
      in.push_back(MakeSelection(doc, "a" + std::to_string(s), idx));
      uni.insert(in.back().indices.begin(), in.back().indices.end());
    }
    const std::size_t k = 1 + rng() % 10;
    const std::uint64_t seed = rng();
    bool good = true;
    for (auto mode : {EnsembleMode::kRand, EnsembleMode::kTopK}) {
      const Selection out = Combine(in, k, mode, seed, "e");
      for (std::size_t i : out.indices) good = good && uni.count(i);
      good = good && out.indices.size() == std::min(k, uni.size());
      good = good && out == Combine(in, k, mode, seed, "e");
    }
    ok += good;
  }
  return {ok == kEnsembleInstances,
          std::to_string(ok) + "/" + std::to_string(kEnsembleInstances) +
              " instances satisfy containment, size, determinism"};
}

// ---------------------------------------------------------------------------

struct BundledRun {
  Corpus corpus;
  EmbeddingStore store;
  std::vector<Selection> oracle;
  std::map<std::string, std::vector<Selection>> aspects;
  std::vector<MetricRecord> metrics;
};

BundledRun RunBundled() {
  BundledRun run;
  run.corpus = LoadCorpus(SUBASPECT_BUNDLED_CORPUS);
  run.store = EncodeCorpusFallback(run.corpus, kDefaultFallbackDim, 1);
  for (const auto& doc : run.corpus.documents()) {
    const EmbeddingMatrix& emb = run.store.Get(doc.id);
    const Selection o = GreedyOracle(doc, doc.num_target());
    run.oracle.push_back(o);
    for (const char* name : {"first", "convexfall", "n_nearest"}) {
      const Selection s = RunAlgorithm(name, doc, &emb, doc.num_target(), {});
      run.aspects[name].push_back(s);
      run.metrics.push_back(EvaluateSelection(doc, s, o, &emb));
    }
  }
  return run;
}

Outcome TriangleVennHistogram() {
  const BundledRun run = RunBundled();
  ReportInputs in;
  in.corpus_name = run.corpus.name();
  in.metrics = run.metrics;
  in.corpus = &run.corpus;
  in.embeddings = &run.store;
  in.oracle = &run.oracle;
  in.systems = run.aspects.at("first");
  const BiasReport report = BuildReport(in);

  double worst_simplex = 0.0;
  auto check = [&](const Triangle& t) {
    worst_simplex = std::max(
        worst_simplex, std::abs(t.position + t.diversity + t.importance - 1.0));
  };
  if (report.triangle) check(*report.triangle);
  for (const auto& sb : report.system_bias) check(sb.triangle);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) check(TriangleCoords(u(rng), u(rng), u(rng)));

  double worst_venn = 0.0;
  const auto& p = run.aspects.at("first");
  const auto& d = run.aspects.at("convexfall");
  const auto& im = run.aspects.at("n_nearest");
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto counts = VennCounts(p[i], d[i], im[i]);
    std::size_t uni = 0;
    for (auto c : counts) uni += c;
    double sum = 0.0;
    for (auto c : counts) sum += static_cast<double>(c) / uni;
    worst_venn = std::max(worst_venn, std::abs(sum - 1.0));
  }
  double summary_sum = 0.0;
  if (report.venn) {
    for (double f : report.venn->fractions) summary_sum += f;
  }

  std::uint64_t oracle_total = 0;
  for (const auto& o : run.oracle) oracle_total += o.indices.size();
  bool mass_ok = report.histograms.has_value();
  std::ostringstream masses;
  if (report.histograms) {
    for (const auto& h : *report.histograms) {
      std::uint64_t m = 0;
      for (auto c : h) m += c;
      mass_ok = mass_ok && m == oracle_total;
      masses << (masses.tellp() ? "/" : "") << m;
    }
  }
  const bool pass = report.triangle && worst_simplex <= kSimplexTolerance &&
                    worst_venn <= kSimplexTolerance && report.venn &&
                    std::abs(summary_sum - 1.0) <= kSimplexTolerance && mass_ok;
  std::ostringstream det;
  det << "simplex err " << Fmt("%.1e", worst_simplex) << ", per-doc Venn err "
      << Fmt("%.1e", worst_venn) << ", histogram mass " << masses.str()
      << " vs oracle " << oracle_total;
  return {pass, det.str()};
}

// ---------------------------------------------------------------------------

bool RunPipeline(const fs::path& dir, const std::string& jobs,
                 std::string& error) {
  const std::string corpus = SUBASPECT_BUNDLED_CORPUS;
  auto p = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::vector<std::string>> steps = {
      {"encode", "--corpus", corpus, "--out", p("emb.saem"), "--jobs", jobs},
      {"extract", "--corpus", corpus, "--embeddings", p("emb.saem"),
       "--algorithm", "all", "--out", p("selections.jsonl"), "--jobs", jobs},
      {"oracle", "--corpus", corpus, "--out", p("oracle.jsonl"), "--jobs",
       jobs},
      {"evaluate", "--corpus", corpus, "--embeddings", p("emb.saem"),
       "--selections", p("selections.jsonl"), "--oracle", p("oracle.jsonl"),
       "--out", p("metrics.jsonl"), "--jobs", jobs},
      {"report", "--metrics", p("metrics.jsonl"), "--outdir", p("report"),
       "--corpus", corpus, "--embeddings", p("emb.saem"), "--oracle",
       p("oracle.jsonl"), "--jobs", jobs}};
  for (const auto& args : steps) {
    std::ostringstream out, err;
    if (RunCli(args, out, err) != kExitOk) {
      error = args[0] + ": " + err.str();
      return false;
    }
  }
  return true;
}

std::map<std::string, std::string> Tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      files[fs::relative(e.path(), root).generic_string()] =
          ReadFile(e.path().string());
    }
  }
  return files;
}

Outcome PipelineDeterminism() {
  const fs::path base =
      fs::temp_directory_path() / ("subaspect_acceptance_" +
                                   std::to_string(std::random_device{}()));
  fs::remove_all(base);
  std::string error;
  auto start = std::chrono::steady_clock::now();
  const bool a = RunPipeline(base / "a", "1", error);
  const double secs_a = Seconds(start);
  start = std::chrono::steady_clock::now();
  const bool b = a && RunPipeline(base / "b", std::to_string(kParallelJobs), error);
  const double secs_b = Seconds(start);
  if (!a || !b) {
    fs::remove_all(base);
    return {false, "pipeline failed: " + error};
  }
  const auto ta = Tree(base / "a"), tb = Tree(base / "b");
  std::size_t differing = 0;
  for (const auto& [name, bytes] : ta) {
    const auto it = tb.find(name);
    differing += it == tb.end() || it->second != bytes;
  }
  differing += tb.size() > ta.size() ? tb.size() - ta.size() : 0;
  fs::remove_all(base);
  const bool pass = differing == 0 && !ta.empty() &&
                    secs_a < kPipelineBudgetSeconds &&
                    secs_b < kPipelineBudgetSeconds;
  return {pass, std::to_string(ta.size()) + " files, " +
                    std::to_string(differing) + " differ; " +
                    Fmt("%.2f s (1 job), %.2f s (%.0f jobs)", secs_a, secs_b,
                        static_cast<double>(kParallelJobs))};
}

// ---------------------------------------------------------------------------

Outcome ReferenceTriangle() {
  // Mean R on CNN/DailyMail for First, ConvexFall and NNearest.
  const Triangle t = TriangleCoords(30.7, 21.6, 22.0);
  const bool pass = std::abs(t.position - 0.413) <= kReferenceTolerance &&
                    std::abs(t.diversity - 0.291) <= kReferenceTolerance &&
                    std::abs(t.importance - 0.296) <= kReferenceTolerance;
  return {pass, Fmt("(%.4f, %.4f, %.4f) vs (0.413, 0.291, 0.296)",
                    t.position, t.diversity, t.importance)};
}

}  // namespace
}  // namespace subaspect

int main() {
  using subaspect::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {{"rouge_oracle_equivalence", subaspect::RougeOracleEquivalence},
       {"geometry_suite", subaspect::GeometrySuite},
       {"perfect_copy_corpus", subaspect::PerfectCopyCorpus},
       {"lead_bias_reproduction", subaspect::LeadBiasReproduction},
       {"scaling_invariance", subaspect::ScalingInvariance},
       {"ensemble_contract", subaspect::EnsembleContract},
       {"triangle_venn_histogram_consistency",
        subaspect::TriangleVennHistogram},
       {"pipeline_determinism", subaspect::PipelineDeterminism},
       {"reference_triangle", subaspect::ReferenceTriangle}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
