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

#include "subaspect/analysis.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "subaspect/aspects.h"
#include "subaspect/errors.h"
#include "subaspect/geometry.h"
#include "subaspect/parallel.h"
#include "subaspect/rng.h"

namespace subaspect {

Selection SelectRandom(const Document& doc, std::size_t k, std::uint64_t seed) {
  const std::size_t n = doc.num_source();
  const std::size_t m = std::min(k, n);
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  Xoshiro256 rng = KeyedRng(seed, doc.id, RngStream::kRandomSelection);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.UniformIndex(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return {doc.id, "random", std::move(pool)};
}

Triangle TriangleCoords(double position, double diversity, double importance) {
  if (position < 0 || diversity < 0 || importance < 0) {
    throw std::invalid_argument("triangle: scores must be non-negative");
  }
  const double total = position + diversity + importance;
  if (total == 0.0) return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, true};
  return {position / total, diversity / total, importance / total, false};
}

const std::array<const char*, kNumVennRegions>& VennRegionNames() {
  static const std::array<const char*, kNumVennRegions> kNames = {
      "p_only", "d_only", "i_only", "p_d", "p_i", "d_i", "p_d_i"};
  return kNames;
}

std::array<std::size_t, kNumVennRegions> VennCounts(const Selection& p,
                                                    const Selection& d,
                                                    const Selection& i) {
  const std::set<std::size_t> sp(p.indices.begin(), p.indices.end());
  const std::set<std::size_t> sd(d.indices.begin(), d.indices.end());
  const std::set<std::size_t> si(i.indices.begin(), i.indices.end());
  std::set<std::size_t> all = sp;
  all.insert(sd.begin(), sd.end());
  all.insert(si.begin(), si.end());
  std::array<std::size_t, kNumVennRegions> counts{};
  for (std::size_t x : all) {
    const bool in_p = sp.count(x) > 0;
    const bool in_d = sd.count(x) > 0;
    const bool in_i = si.count(x) > 0;
    const int code = (in_p ? 1 : 0) | (in_d ? 2 : 0) | (in_i ? 4 : 0);
    switch (code) {
      case 1: ++counts[kPOnly]; break;
      case 2: ++counts[kDOnly]; break;
      case 4: ++counts[kIOnly]; break;
      case 3: ++counts[kPD]; break;
      case 5: ++counts[kPI]; break;
      case 6: ++counts[kDI]; break;
      case 7: ++counts[kPDI]; break;
      default: break;
    }
  }
  return counts;
}

VennSummary VennRegions(const std::vector<Selection>& p,
                        const std::vector<Selection>& d,
                        const std::vector<Selection>& i,
                        const std::vector<Selection>& oracle) {
  if (p.size() != d.size() || p.size() != i.size() ||
      p.size() != oracle.size()) {
    throw std::invalid_argument("venn: selection lists differ in length");
  }
  VennSummary summary;
  summary.num_docs = p.size();
  if (p.empty()) return summary;
  for (std::size_t doc = 0; doc < p.size(); ++doc) {
    const auto counts = VennCounts(p[doc], d[doc], i[doc]);
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    for (std::size_t r = 0; r < kNumVennRegions; ++r) {
      summary.mean_counts[r] += static_cast<double>(counts[r]);
      if (total > 0) {
        summary.fractions[r] +=
            static_cast<double>(counts[r]) / static_cast<double>(total);
      }
    }
    summary.mean_union_size += static_cast<double>(total);
    summary.oracle_recall += OracleRecall(p[doc], d[doc], i[doc], oracle[doc]);
  }
  const double n = static_cast<double>(p.size());
  for (std::size_t r = 0; r < kNumVennRegions; ++r) {
    summary.mean_counts[r] /= n;
    summary.fractions[r] /= n;
  }
  summary.mean_union_size /= n;
  summary.oracle_recall /= n;
  return summary;
}

void AccumulatePositionHistogram(const std::vector<std::size_t>& ranking,
                                 const Selection& oracle,
                                 Histogram& histogram) {
  const std::size_t n = ranking.size();
  if (n == 0) return;
  std::vector<std::size_t> rank_of(n, n);
  for (std::size_t r = 0; r < n; ++r) rank_of.at(ranking[r]) = r;
  for (std::size_t idx : oracle.indices) {
    const std::size_t rank = rank_of.at(idx);
    if (rank == n) throw std::invalid_argument("histogram: ranking is not a permutation");
    // floor((rank / N) / 0.05) evaluated exactly in integers.
    const std::size_t bin =
        std::min(kHistogramBins - 1, (kHistogramBins * rank) / n);
    ++histogram[bin];
  }
}

Histogram PositionHistogram(const std::vector<std::size_t>& ranking,
                            const Selection& oracle) {
  Histogram h{};
  AccumulatePositionHistogram(ranking, oracle, h);
  return h;
}

namespace {

struct DocAnalysis {
  bool has_aspects = false;
  Selection position;
  Selection diversity;
  Selection importance;
  std::array<std::vector<std::size_t>, 3> rankings;
  NgramNovelty unigram;
  NgramNovelty bigram;
  double rouge_oracle_target = 0.0;
  // Per system, R against position, diversity, importance.
  std::vector<std::array<double, 3>> system_rouge;
  std::vector<ProjectedSentence> projections;
};

std::string JoinIds(const std::vector<std::string>& ids, std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > limit) {
    out += ", ... (" + std::to_string(ids.size()) + " total)";
  }
  return out;
}

}  // namespace

BiasReport BuildReport(const ReportInputs& inputs) {
  BiasReport report;
  report.corpus = inputs.corpus_name;

  // Group records by algorithm, keeping first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<const MetricRecord*>> by_algorithm;
  std::vector<std::string> doc_order;
  std::set<std::string> doc_seen;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& r : inputs.metrics) {
    if (!pairs.emplace(r.algorithm, r.doc_id).second) {
      throw ValidationError("duplicate metric record for algorithm \"" +
                            r.algorithm + "\", document \"" + r.doc_id + "\"");
    }
    auto [it, inserted] = by_algorithm.try_emplace(r.algorithm);
    if (inserted) order.push_back(r.algorithm);
    it->second.push_back(&r);
    if (doc_seen.insert(r.doc_id).second) doc_order.push_back(r.doc_id);
  }
  if (inputs.corpus != nullptr) {
    doc_order.clear();
    for (const auto& doc : inputs.corpus->documents()) doc_order.push_back(doc.id);
  }

  std::vector<std::string> gaps;
  for (const auto& name : inputs.required_algorithms) {
    if (!by_algorithm.count(name)) gaps.push_back(name + ": no records");
  }
  for (const auto& name : order) {
    std::set<std::string> have;
    for (const auto* r : by_algorithm[name]) have.insert(r->doc_id);
    std::vector<std::string> missing;
    for (const auto& id : doc_order) {
      if (!have.count(id)) missing.push_back(id);
    }
    if (!missing.empty()) {
      gaps.push_back(name + ": missing " + JoinIds(missing, 5));
    }
  }
  if (!gaps.empty()) {
    std::string message = "report inputs incomplete: ";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (i > 0) message += "; ";
      message += gaps[i];
    }
    throw ValidationError(message);
  }

  for (const auto& name : order) {
    AlgorithmSummary s;
    s.algorithm = name;
    double vo_sum = 0.0;
    std::size_t vo_count = 0;
    for (const auto* r : by_algorithm[name]) {
      s.r1 += r->rouge.r1;
      s.r2 += r->rouge.r2;
      s.rl += r->rouge.rl;
      s.r += r->rouge.mean;
      s.so += r->so;
      if (r->vo) {
        vo_sum += *r->vo;
        ++vo_count;
      } else {
        ++s.vo_missing;
      }
    }
    s.num_docs = by_algorithm[name].size();
    const double n = static_cast<double>(s.num_docs);
    s.r1 /= n;
    s.r2 /= n;
    s.rl /= n;
    s.r /= n;
    s.so /= n;
    if (vo_count > 0) s.vo = vo_sum / static_cast<double>(vo_count);
    report.algorithms.push_back(std::move(s));
  }

  auto mean_r = [&](const std::string& name) -> std::optional<double> {
    for (const auto& s : report.algorithms) {
      if (s.algorithm == name) return s.r;
    }
    return std::nullopt;
  };
  const auto rp = mean_r("first");
  const auto rd = mean_r("convexfall");
  const auto ri = mean_r("n_nearest");
  if (rp && rd && ri) {
    report.triangle = TriangleCoords(*rp, *rd, *ri);
    report.triangle_inputs = {*rp, *rd, *ri};
  }

  if (inputs.corpus == nullptr || inputs.oracle == nullptr) return report;

  const Corpus& corpus = *inputs.corpus;
  std::map<std::string, const Selection*> oracle_by_doc;
  for (const auto& s : *inputs.oracle) oracle_by_doc[s.doc_id] = &s;
  for (const auto& doc : corpus.documents()) {
    auto it = oracle_by_doc.find(doc.id);
    if (it == oracle_by_doc.end() || it->second->indices.empty()) {
      throw ValidationError("no oracle selection for document \"" + doc.id +
                            "\"");
    }
  }

  std::vector<std::string> system_names;
  std::map<std::pair<std::string, std::string>, const Selection*> systems;
  for (const auto& s : inputs.systems) {
    if (std::find(system_names.begin(), system_names.end(), s.algorithm) ==
        system_names.end()) {
      system_names.push_back(s.algorithm);
    }
    systems[{s.algorithm, s.doc_id}] = &s;
  }
  const bool with_embeddings = inputs.embeddings != nullptr;
  if (!system_names.empty() && !with_embeddings) {
    throw ValidationError("system bias needs --embeddings");
  }
  for (const auto& name : system_names) {
    for (const auto& doc : corpus.documents()) {
      if (!systems.count({name, doc.id})) {
        throw ValidationError("system \"" + name +
                              "\" has no selection for document \"" + doc.id +
                              "\"");
      }
    }
  }

  std::vector<DocAnalysis> per_doc(corpus.size());
  ParallelFor(corpus.size(), inputs.jobs, [&](std::size_t d) {
    const Document& doc = corpus.documents()[d];
    const Selection& oracle = *oracle_by_doc.at(doc.id);
    DocAnalysis& out = per_doc[d];
    out.unigram = ComputeNgramNovelty(doc, oracle, 1);
    out.bigram = ComputeNgramNovelty(doc, oracle, 2);
    out.rouge_oracle_target =
        RougeAll(SelectedTokens(doc, oracle), doc.target_tokens, inputs.rouge)
            .mean;
    if (!with_embeddings) return;
    const EmbeddingMatrix& emb = inputs.embeddings->Get(doc.id);
    const std::size_t k = inputs.k_mode.For(doc);
    out.has_aspects = true;
    out.rankings[0] = PositionRanking(doc.num_source());
    out.rankings[1] = ConvexFallRanking(emb);
    out.rankings[2] = NNearestRanking(emb);
    auto first_k = [&](const std::vector<std::size_t>& ranking,
                       const char* label) {
      std::vector<std::size_t> idx(
          ranking.begin(),
          ranking.begin() +
              static_cast<std::ptrdiff_t>(std::min(k, ranking.size())));
      return MakeSelection(doc.id, label, std::move(idx));
    };
    out.position = first_k(out.rankings[0], "first");
    out.diversity = first_k(out.rankings[1], "convexfall");
    out.importance = first_k(out.rankings[2], "n_nearest");

    const auto p_tokens = SelectedTokens(doc, out.position);
    const auto d_tokens = SelectedTokens(doc, out.diversity);
    const auto i_tokens = SelectedTokens(doc, out.importance);
    for (const auto& name : system_names) {
      const auto sys = SelectedTokens(doc, *systems.at({name, doc.id}));
      out.system_rouge.push_back(
          {RougeAll(sys, p_tokens, inputs.rouge).mean,
           RougeAll(sys, d_tokens, inputs.rouge).mean,
           RougeAll(sys, i_tokens, inputs.rouge).mean});
    }

    const Pca2dResult pca = Pca2d(emb.SourceMatrix());
    const auto targets = pca.Project(emb.TargetMatrix());
    for (std::size_t i = 0; i < doc.num_source(); ++i) {
      out.projections.push_back(
          {doc.id, false, i, pca.projections(i, 0), pca.projections(i, 1)});
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
      out.projections.push_back({doc.id, true, i, targets[i].x, targets[i].y});
    }
  });

  NoveltySummary novelty;
  novelty.num_docs = corpus.size();
  for (const auto& a : per_doc) {
    novelty.rouge_oracle_target += a.rouge_oracle_target;
    novelty.unigram.overlap_oracle_target += a.unigram.overlap_oracle_target;
    novelty.unigram.novel_target_source += a.unigram.novel_target_source;
    novelty.bigram.overlap_oracle_target += a.bigram.overlap_oracle_target;
    novelty.bigram.novel_target_source += a.bigram.novel_target_source;
  }
  const double n_docs = static_cast<double>(corpus.size());
  novelty.rouge_oracle_target /= n_docs;
  novelty.unigram.overlap_oracle_target /= n_docs;
  novelty.unigram.novel_target_source /= n_docs;
  novelty.bigram.overlap_oracle_target /= n_docs;
  novelty.bigram.novel_target_source /= n_docs;
  report.novelty = novelty;

  if (!with_embeddings) return report;

  std::vector<Selection> ps, ds, is, os;
  std::array<Histogram, 3> histograms{};
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const auto& a = per_doc[d];
    const Selection& oracle = *oracle_by_doc.at(corpus.documents()[d].id);
    ps.push_back(a.position);
    ds.push_back(a.diversity);
    is.push_back(a.importance);
    os.push_back(oracle);
    for (std::size_t h = 0; h < 3; ++h) {
      AccumulatePositionHistogram(a.rankings[h], oracle, histograms[h]);
    }
    report.projections.insert(report.projections.end(), a.projections.begin(),
                              a.projections.end());
  }
  report.venn = VennRegions(ps, ds, is, os);
  report.histograms = histograms;

  for (std::size_t s = 0; s < system_names.size(); ++s) {
    SystemBias bias;
    bias.algorithm = system_names[s];
    for (const auto& a : per_doc) {
      bias.r_position += a.system_rouge[s][0];
      bias.r_diversity += a.system_rouge[s][1];
      bias.r_importance += a.system_rouge[s][2];
    }
    bias.r_position /= n_docs;
    bias.r_diversity /= n_docs;
    bias.r_importance /= n_docs;
    bias.triangle =
        TriangleCoords(bias.r_position, bias.r_diversity, bias.r_importance);
    report.system_bias.push_back(std::move(bias));
  }
  return report;
}

}  // namespace subaspect
