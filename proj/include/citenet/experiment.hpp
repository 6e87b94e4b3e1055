#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "citenet/embed.hpp"
#include "citenet/evaluate.hpp"
#include "citenet/split.hpp"

namespace citenet {

/// Everything one seeded pipeline run needs downstream.
struct PipelineConfig {
    SplitRatios ratios;
    WalkConfig walk;
    SkipGramConfig skipgram;
    MLPConfig mlp;
    int dim = 128;
    double role_log_base = 2.0;
};

/// Artifacts of a single seeded run: split, training subgraph, embeddings,
/// classifier, and scored test edges.
struct SeedRun {
    std::uint64_t seed = 0;
    EdgeSplit split;
    CitationGraph training_graph;
    NodeEmbeddings embeddings;
    TrainedClassifier classifier;
    std::vector<double> test_scores; // aligned with test_pos then test_neg
    EvalReport report;
};

/// split -> embed on the training subgraph -> featurize -> train -> evaluate,
/// all seeded from `seed`.
inline SeedRun run_seed(const CitationGraph& g, EmbeddingMethod method, std::uint64_t seed,
                        const PipelineConfig& cfg) {
    SeedRun run;
    run.seed = seed;
    run.split = build_split(g, cfg.ratios, seed);
    run.training_graph = induced_training_subgraph(g, run.split);

    WalkConfig walk = cfg.walk;
    walk.seed = seed;
    SkipGramConfig sg = cfg.skipgram;
    sg.seed = seed;
    run.embeddings = embed_nodes(run.training_graph, method, walk, sg, cfg.dim, cfg.role_log_base);

    EdgeFeatures train_feats =
        featurize_edges(run.split.train_pos, run.split.train_neg, run.embeddings.matrix);
    EdgeFeatures val_feats = featurize_edges(run.split.val_pos, run.split.val_neg, run.embeddings.matrix);
    MLPConfig mlp = cfg.mlp;
    mlp.seed = seed;
    run.classifier = train_classifier(train_feats, val_feats, mlp);

    run.report = evaluate(run.classifier.model, run.embeddings.matrix, run.split, g, &run.test_scores);
    return run;
}

struct ExperimentResult {
    EmbeddingMethod method = EmbeddingMethod::deepwalk;
    std::vector<EvalReport> per_seed;
    double mean_auc = 0.0;
    std::optional<double> mean_idr_auc; // averaged over the seeds where IDR AUC exists
};

inline ExperimentResult summarize_reports(EmbeddingMethod method, std::vector<EvalReport> reports) {
    if (reports.empty()) throw std::invalid_argument("summarize_reports: no seed reports");
    ExperimentResult result;
    result.method = method;
    double auc_sum = 0.0, idr_sum = 0.0;
    std::size_t idr_n = 0;
    for (const EvalReport& r : reports) {
        auc_sum += r.auc;
        if (r.idr_auc) {
            idr_sum += *r.idr_auc;
            ++idr_n;
        }
    }
    result.mean_auc = auc_sum / static_cast<double>(reports.size());
    if (idr_n > 0) result.mean_idr_auc = idr_sum / static_cast<double>(idr_n);
    result.per_seed = std::move(reports);
    return result;
}

inline std::vector<std::uint64_t> default_seeds(std::size_t n_seeds = 5) {
    std::vector<std::uint64_t> seeds(n_seeds);
    for (std::size_t i = 0; i < n_seeds; ++i) seeds[i] = i;
    return seeds;
}

/// The paper-style protocol: run the full pipeline once per seed and report
/// arithmetic-mean AUCs next to the per-seed reports.
inline ExperimentResult run_experiment(const CitationGraph& g, EmbeddingMethod method,
                                       const PipelineConfig& cfg,
                                       const std::vector<std::uint64_t>& seeds = default_seeds()) {
    if (seeds.empty()) throw std::invalid_argument("run_experiment: need at least one seed");
    std::vector<EvalReport> reports;
    reports.reserve(seeds.size());
    for (std::uint64_t seed : seeds) reports.push_back(run_seed(g, method, seed, cfg).report);
    return summarize_reports(method, std::move(reports));
}

} // namespace citenet
