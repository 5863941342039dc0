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

#include "cli.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "subaspect/analysis.h"
#include "subaspect/corpus.h"
#include "subaspect/embedding.h"
#include "subaspect/ensemble.h"
#include "subaspect/errors.h"
#include "subaspect/fileio.h"
#include "subaspect/metrics.h"
#include "subaspect/oracle.h"
#include "subaspect/parallel.h"
#include "subaspect/registry.h"
#include "subaspect/report.h"
#include "subaspect/selection.h"
#include "subaspect/synthetic.h"

namespace subaspect {
namespace {

struct CommonOptions {
  std::size_t max_source_sentences = 0;
  std::size_t jobs = 0;
  double rouge_beta = 1.0;

  LoadOptions Load() const {
    LoadOptions o;
    if (max_source_sentences > 0) o.max_source_sentences = max_source_sentences;
    return o;
  }
  std::size_t Jobs() const { return jobs > 0 ? jobs : DefaultJobs(); }
  RougeOptions Rouge() const {
    if (!(rouge_beta > 0.0)) {
      throw ValidationError("--rouge-beta must be positive");
    }
    return RougeOptions{rouge_beta};
  }
};

void AddCommon(CLI::App* cmd, CommonOptions& common, bool rouge) {
  cmd->add_option("--max-source-sentences", common.max_source_sentences,
                  "Truncate each source document to its first M sentences");
  cmd->add_option("--jobs", common.jobs,
                  "Worker threads (default: logical CPUs)");
  if (rouge) {
    cmd->add_option("--rouge-beta", common.rouge_beta,
                    "F-measure beta for ROUGE (default 1)");
  }
}

void CheckHullSpace(const std::string& hull_space) {
  if (hull_space == "pca2") return;
  if (hull_space == "full") {
    throw ValidationError(
        "--hull-space full is unsupported; only pca2 is implemented");
  }
  throw ValidationError("unknown --hull-space \"" + hull_space + "\"");
}

std::string Serialize(const std::vector<Selection>& selections) {
  std::ostringstream out;
  WriteSelections(selections, out);
  return out.str();
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void Progress(std::ostream& err, const char* what, std::size_t done,
              const char* unit = "documents") {
  err << what << ": " << done << ' ' << unit << '\n';
}

// --- encode ---------------------------------------------------------------

struct EncodeArgs {
  std::string corpus;
  std::string out;
  std::size_t dim = kDefaultFallbackDim;
  CommonOptions common;
};

void RunEncode(const EncodeArgs& a, std::ostream& err) {
  if (a.dim < 2) throw ValidationError("--dim must be at least 2");
  const Corpus corpus = LoadCorpus(a.corpus, a.common.Load());
  const EmbeddingStore store =
      EncodeCorpusFallback(corpus, a.dim, a.common.Jobs());
  WriteEmbeddings(store, a.out);
  Progress(err, "encoded", corpus.size());
}

// --- extract --------------------------------------------------------------

struct ExtractArgs {
  std::string corpus;
  std::string embeddings;
  std::string algorithm;
  std::string out;
  std::string k_mode = "match-target";
  std::uint64_t seed = 42;
  std::size_t knn_k = kDefaultKnnK;
  double mmr_lambda = kDefaultMmrLambda;
  double lexrank_threshold = kDefaultLexRankThreshold;
  std::string hull_space = "pca2";
  CommonOptions common;
};

void RunExtract(const ExtractArgs& a, std::ostream& err) {
  CheckHullSpace(a.hull_space);
  const KMode k_mode = ParseKMode(a.k_mode);
  const std::vector<std::string> algorithms =
      a.algorithm == "all" ? AlgorithmNames() : SplitList(a.algorithm);
  if (algorithms.empty()) throw ValidationError("--algorithm is empty");
  bool needs_embeddings = false;
  for (const auto& name : algorithms) {
    if (!IsAlgorithm(name)) {
      // RunAlgorithm produces the message listing the registry.
      RunAlgorithm(name, Document{}, nullptr, 1, {});
    }
    needs_embeddings = needs_embeddings || NeedsEmbeddings(name);
  }
  if (a.knn_k == 0) throw ValidationError("--knn-k must be at least 1");
  if (!(a.mmr_lambda >= 0.0 && a.mmr_lambda <= 1.0)) {
    throw ValidationError("--mmr-lambda must lie in [0, 1]");
  }
  ExtractOptions options;
  options.seed = a.seed;
  options.knn_k = a.knn_k;
  options.mmr_lambda = a.mmr_lambda;
  options.lexrank_threshold = a.lexrank_threshold;
  options.rouge = a.common.Rouge();

  const Corpus corpus = LoadCorpus(a.corpus, a.common.Load());
  std::optional<EmbeddingStore> store;
  if (!a.embeddings.empty()) {
    store = ReadEmbeddings(a.embeddings, corpus);
  } else if (needs_embeddings) {
    throw ValidationError("--embeddings is required for the requested "
                          "algorithms");
  }

  const std::size_t n = corpus.size();
  std::vector<std::vector<Selection>> per_doc(n);
  ParallelFor(n, a.common.Jobs(), [&](std::size_t d) {
    const Document& doc = corpus.documents()[d];
    const EmbeddingMatrix* emb = store ? &store->Get(doc.id) : nullptr;
    for (const auto& name : algorithms) {
      per_doc[d].push_back(
          RunAlgorithm(name, doc, emb, k_mode.For(doc), options));
    }
  });
  std::vector<Selection> selections;
  for (const auto& name : algorithms) {
    for (std::size_t d = 0; d < n; ++d) {
      for (auto& s : per_doc[d]) {
        if (s.algorithm == name) selections.push_back(s);
      }
    }
  }
  WriteFileAtomic(a.out, Serialize(selections));
  Progress(err, "extracted", n);
}

// --- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string corpus;
  std::string out;
  std::string k_mode = "match-target";
  CommonOptions common;
};

void RunOracle(const OracleArgs& a, std::ostream& err) {
  const KMode k_mode = ParseKMode(a.k_mode);
  const RougeOptions rouge = a.common.Rouge();
  const Corpus corpus = LoadCorpus(a.corpus, a.common.Load());
  std::vector<Selection> oracle(corpus.size());
  ParallelFor(corpus.size(), a.common.Jobs(), [&](std::size_t d) {
    const Document& doc = corpus.documents()[d];
    oracle[d] = GreedyOracle(doc, k_mode.For(doc), rouge);
  });
  WriteFileAtomic(a.out, Serialize(oracle));
  Progress(err, "oracle", corpus.size());
}

// --- evaluate -------------------------------------------------------------

struct EvaluateArgs {
  std::string corpus;
  std::string embeddings;
  std::vector<std::string> selections;
  std::string oracle;
  std::string out;
  std::string hull_space = "pca2";
  CommonOptions common;
};

std::map<std::string, Selection> OracleByDoc(const std::string& path,
                                             const Corpus& corpus) {
  std::map<std::string, Selection> out;
  for (auto& s : ValidateSelections(ReadSelections(path), corpus)) {
    if (s.indices.empty()) {
      throw ValidationError("empty oracle for document \"" + s.doc_id + "\"");
    }
    std::string id = s.doc_id;
    if (!out.emplace(id, std::move(s)).second) {
      throw ValidationError("several oracle selections for document \"" + id +
                            "\"");
    }
  }
  return out;
}

void RunEvaluate(const EvaluateArgs& a, std::ostream& err) {
  CheckHullSpace(a.hull_space);
  const RougeOptions rouge = a.common.Rouge();
  const Corpus corpus = LoadCorpus(a.corpus, a.common.Load());
  std::optional<EmbeddingStore> store;
  if (!a.embeddings.empty()) store = ReadEmbeddings(a.embeddings, corpus);
  const auto oracle = OracleByDoc(a.oracle, corpus);
  std::vector<Selection> selections;
  for (const auto& path : a.selections) {
    auto part = ReadSelections(path);
    selections.insert(selections.end(), part.begin(), part.end());
  }
  selections = ValidateSelections(std::move(selections), corpus);
  for (const auto& s : selections) {
    if (!oracle.count(s.doc_id)) {
      throw ValidationError("no oracle selection for document \"" + s.doc_id +
                            "\"");
    }
  }
  std::vector<MetricRecord> records(selections.size());
  ParallelFor(selections.size(), a.common.Jobs(), [&](std::size_t i) {
    const Selection& s = selections[i];
    const Document& doc = *corpus.Find(s.doc_id);
    const EmbeddingMatrix* emb = store ? &store->Get(doc.id) : nullptr;
    records[i] = EvaluateSelection(doc, s, oracle.at(s.doc_id), emb, rouge);
  });
  std::ostringstream out;
  WriteMetrics(records, out);
  WriteFileAtomic(a.out, out.str());
  Progress(err, "evaluated", selections.size(), "selections");
}

// --- ensemble -------------------------------------------------------------

struct EnsembleArgs {
  std::vector<std::string> selections;
  std::string mode;
  std::uint64_t seed = 42;
  std::string out;
  std::string pool;
  std::string label;
  std::string corpus;
  std::string k_mode = "match-target";
  CommonOptions common;
};

void RunEnsemble(const EnsembleArgs& a, std::ostream& err) {
  const EnsembleMode mode = ParseEnsembleMode(a.mode);
  if (!a.pool.empty() && a.pool != "asp" && a.pool != "ext") {
    throw ValidationError("unknown --pool \"" + a.pool +
                          "\" (expected asp or ext)");
  }
  std::optional<Corpus> corpus;
  std::optional<KMode> k_mode;
  if (!a.corpus.empty()) {
    k_mode = ParseKMode(a.k_mode);
    corpus = LoadCorpus(a.corpus, a.common.Load());
  }

  std::vector<Selection> inputs;
  for (const auto& path : a.selections) {
    auto part = ReadSelections(path);
    inputs.insert(inputs.end(), part.begin(), part.end());
  }
  if (corpus) inputs = ValidateSelections(std::move(inputs), *corpus);

  const auto& asp = AspectPool();
  auto in_pool = [&](const Selection& s) {
    if (a.pool == "asp") {
      return std::find(asp.begin(), asp.end(), s.algorithm) != asp.end();
    }
    if (a.pool == "ext") return s.algorithm != "oracle";
    return true;
  };

  std::vector<std::string> doc_order;
  std::map<std::string, std::vector<Selection>> by_doc;
  for (auto& s : inputs) {
    if (!in_pool(s)) continue;
    auto [it, inserted] = by_doc.try_emplace(s.doc_id);
    if (inserted) doc_order.push_back(s.doc_id);
    it->second.push_back(std::move(s));
  }
  if (doc_order.empty()) throw ValidationError("no selections to combine");
  if (a.pool == "asp") {
    for (const auto& id : doc_order) {
      std::set<std::string> have;
      for (const auto& s : by_doc[id]) have.insert(s.algorithm);
      for (const auto& name : asp) {
        if (!have.count(name)) {
          throw ValidationError("asp pool needs \"" + name +
                                "\" selections; missing for document \"" +
                                id + "\"");
        }
      }
    }
  }

  const std::string label =
      !a.label.empty()
          ? a.label
          : (a.pool.empty() ? "ensemble" : a.pool) + "(" +
                EnsembleModeName(mode) + ")";
  std::vector<Selection> out;
  for (const auto& id : doc_order) {
    const auto& group = by_doc[id];
    if (group.size() < 2) {
      throw ValidationError("document \"" + id +
                            "\" has fewer than two selections to combine");
    }
    std::size_t k = 0;
    if (corpus) {
      k = k_mode->For(*corpus->Find(id));
    } else {
      for (const auto& s : group) k = std::max(k, s.indices.size());
    }
    out.push_back(Combine(group, k, mode, a.seed, label));
  }
  WriteFileAtomic(a.out, Serialize(out));
  Progress(err, "combined", out.size());
}

// --- report ---------------------------------------------------------------

struct ReportArgs {
  std::vector<std::string> metrics;
  std::string outdir;
  std::string corpus;
  std::string embeddings;
  std::string oracle;
  std::vector<std::string> systems;
  std::string algorithms;
  std::string k_mode = "match-target";
  CommonOptions common;
};

void RunReport(const ReportArgs& a, std::ostream& err) {
  ReportInputs inputs;
  inputs.rouge = a.common.Rouge();
  inputs.k_mode = ParseKMode(a.k_mode);
  inputs.jobs = a.common.Jobs();
  inputs.required_algorithms = SplitList(a.algorithms);
  for (const auto& path : a.metrics) {
    auto part = ReadMetrics(path);
    inputs.metrics.insert(inputs.metrics.end(), part.begin(), part.end());
  }

  std::optional<Corpus> corpus;
  std::optional<EmbeddingStore> store;
  std::vector<Selection> oracle;
  if (!a.corpus.empty()) {
    corpus = LoadCorpus(a.corpus, a.common.Load());
    inputs.corpus = &*corpus;
    inputs.corpus_name = corpus->name();
    if (!a.embeddings.empty()) {
      store = ReadEmbeddings(a.embeddings, *corpus);
      inputs.embeddings = &*store;
    }
    if (!a.oracle.empty()) {
      oracle = ValidateSelections(ReadSelections(a.oracle), *corpus);
      inputs.oracle = &oracle;
    }
    for (const auto& path : a.systems) {
      auto part = ValidateSelections(ReadSelections(path), *corpus);
      inputs.systems.insert(inputs.systems.end(), part.begin(), part.end());
    }
  } else if (!a.embeddings.empty() || !a.oracle.empty() || !a.systems.empty()) {
    throw ValidationError("--embeddings, --oracle and --systems need --corpus");
  } else {
    inputs.corpus_name =
        std::filesystem::path(a.metrics.front()).stem().string();
  }
  if (!a.systems.empty() && a.oracle.empty()) {
    throw ValidationError("--systems needs --oracle");
  }

  const BiasReport report = BuildReport(inputs);
  WriteReport(report, a.outdir);
  Progress(err, "reported", report.algorithms.size(), "algorithms");
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string kind = "mixed";
  std::size_t docs = 200;
  std::uint64_t seed = 7;
  std::string out;
};

void RunSynth(const SynthArgs& a, std::ostream& err) {
  SyntheticOptions options;
  options.num_docs = a.docs;
  options.seed = a.seed;
  const SyntheticCorpus synthetic =
      MakeSyntheticCorpus(ParseSyntheticKind(a.kind), options);
  std::ostringstream out;
  WriteCorpus(synthetic.corpus, out);
  WriteFileAtomic(a.out, out.str());
  Progress(err, "generated", synthetic.corpus.size());
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Sub-aspect bias analysis for extractive summarization",
               "subaspect"};
  app.require_subcommand(1);

  EncodeArgs encode;
  auto* encode_cmd =
      app.add_subcommand("encode", "Fallback feature-hashing sentence encoder");
  encode_cmd->add_option("--corpus", encode.corpus, "Corpus JSONL")->required();
  encode_cmd->add_option("--out", encode.out, "Output SAEM file")->required();
  encode_cmd->add_option("--dim", encode.dim, "Embedding dimension");
  AddCommon(encode_cmd, encode.common, false);

  ExtractArgs extract;
  auto* extract_cmd =
      app.add_subcommand("extract", "Run extractive algorithms");
  extract_cmd->add_option("--corpus", extract.corpus, "Corpus JSONL")
      ->required();
  extract_cmd->add_option("--embeddings", extract.embeddings, "SAEM file");
  extract_cmd
      ->add_option("--algorithm", extract.algorithm,
                   "Registry name, comma-separated list, or 'all'")
      ->required();
  extract_cmd->add_option("--out", extract.out, "Output selections JSONL")
      ->required();
  extract_cmd->add_option("--k-mode", extract.k_mode,
                          "match-target or fixed:<n>");
  extract_cmd->add_option("--seed", extract.seed, "Random seed");
  extract_cmd->add_option("--knn-k", extract.knn_k, "K for k_nearest");
  extract_cmd->add_option("--mmr-lambda", extract.mmr_lambda, "MMR lambda");
  extract_cmd->add_option("--lexrank-threshold", extract.lexrank_threshold,
                          "LexRank cosine threshold");
  extract_cmd->add_option("--hull-space", extract.hull_space,
                          "Geometry space for hulls (pca2)");
  AddCommon(extract_cmd, extract.common, true);

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Greedy ROUGE-L oracle summaries");
  oracle_cmd->add_option("--corpus", oracle.corpus, "Corpus JSONL")->required();
  oracle_cmd->add_option("--out", oracle.out, "Output selections JSONL")
      ->required();
  oracle_cmd->add_option("--k-mode", oracle.k_mode,
                         "match-target or fixed:<n>");
  AddCommon(oracle_cmd, oracle.common, true);

  EvaluateArgs evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "ROUGE, volume and sentence overlap");
  evaluate_cmd->add_option("--corpus", evaluate.corpus, "Corpus JSONL")
      ->required();
  evaluate_cmd->add_option("--embeddings", evaluate.embeddings, "SAEM file");
  evaluate_cmd->add_option("--selections", evaluate.selections,
                           "Selections JSONL files")
      ->required();
  evaluate_cmd->add_option("--oracle", evaluate.oracle, "Oracle JSONL")
      ->required();
  evaluate_cmd->add_option("--out", evaluate.out, "Output metrics JSONL")
      ->required();
  evaluate_cmd->add_option("--hull-space", evaluate.hull_space,
                           "Geometry space for hulls (pca2)");
  AddCommon(evaluate_cmd, evaluate.common, true);

  EnsembleArgs ensemble;
  auto* ensemble_cmd =
      app.add_subcommand("ensemble", "Combine selections (rand or topk)");
  ensemble_cmd->add_option("--selections", ensemble.selections,
                           "Selections JSONL files")
      ->required();
  ensemble_cmd->add_option("--mode", ensemble.mode, "rand or topk")
      ->required();
  ensemble_cmd->add_option("--seed", ensemble.seed, "Random seed");
  ensemble_cmd->add_option("--out", ensemble.out, "Output selections JSONL")
      ->required();
  ensemble_cmd->add_option("--pool", ensemble.pool,
                           "asp (first+convexfall+n_nearest) or ext");
  ensemble_cmd->add_option("--label", ensemble.label, "Output algorithm label");
  ensemble_cmd->add_option("--corpus", ensemble.corpus,
                           "Corpus JSONL, enables --k-mode");
  ensemble_cmd->add_option("--k-mode", ensemble.k_mode,
                           "match-target or fixed:<n>");
  AddCommon(ensemble_cmd, ensemble.common, false);

  ReportArgs report;
  auto* report_cmd =
      app.add_subcommand("report", "Aggregate metrics into bias tables");
  report_cmd->add_option("--metrics", report.metrics, "Metrics JSONL files")
      ->required();
  report_cmd->add_option("--outdir", report.outdir, "Output directory")
      ->required();
  report_cmd->add_option("--corpus", report.corpus,
                         "Corpus JSONL (novelty, Venn, histograms)");
  report_cmd->add_option("--embeddings", report.embeddings, "SAEM file");
  report_cmd->add_option("--oracle", report.oracle, "Oracle JSONL");
  report_cmd->add_option("--systems", report.systems,
                         "Selections of systems for system-bias triangles");
  report_cmd->add_option("--algorithms", report.algorithms,
                         "Comma-separated algorithms that must be present");
  report_cmd->add_option("--k-mode", report.k_mode,
                         "match-target or fixed:<n>");
  AddCommon(report_cmd, report.common, true);

  SynthArgs synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic corpus");
  synth_cmd->add_option("--kind", synth.kind, "copy, lead, tail or mixed");
  synth_cmd->add_option("--docs", synth.docs, "Number of documents");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--out", synth.out, "Output corpus JSONL")->required();

  std::vector<std::string> argv_storage = {"subaspect"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*encode_cmd) RunEncode(encode, err);
    if (*extract_cmd) RunExtract(extract, err);
    if (*oracle_cmd) RunOracle(oracle, err);
    if (*evaluate_cmd) RunEvaluate(evaluate, err);
    if (*ensemble_cmd) RunEnsemble(ensemble, err);
    if (*report_cmd) RunReport(report, err);
    if (*synth_cmd) RunSynth(synth, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }
  return kExitOk;
}

}  // namespace subaspect
