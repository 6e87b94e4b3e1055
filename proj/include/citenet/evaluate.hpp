#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "citenet/features.hpp"
#include "citenet/graph.hpp"
#include "citenet/metrics.hpp"
#include "citenet/mlp.hpp"
#include "citenet/split.hpp"

namespace citenet {

/// Test-set evaluation. idr_auc restricts to edges whose endpoints carry
/// different category labels; it is absent when that subset lacks a class.
struct EvalReport {
    double auc = 0.0;
    std::optional<double> idr_auc;
    std::size_t n_test_pos = 0, n_test_neg = 0;
    std::size_t n_idr_pos = 0, n_idr_neg = 0;
    std::uint64_t seed = 0;
};

inline bool crosses_labels(const CitationGraph& g, const Edge& e) {
    return g.label(e.u) != g.label(e.v);
}

/// Score the test split and report overall and interdisciplinary AUC.
/// `scores_out`, when given, receives the scores aligned with
/// test_pos followed by test_neg.
inline EvalReport evaluate(const MLPModel& model, const EmbeddingMatrix& emb, const EdgeSplit& split,
                           const CitationGraph& g, std::vector<double>* scores_out = nullptr) {
    if (!g.labeled()) throw std::invalid_argument("evaluate: graph must be labeled for IDR AUC");
    if (split.test_pos.empty() || split.test_neg.empty())
        throw std::invalid_argument("evaluate: test sets must be nonempty");

    EdgeFeatures feats = featurize_edges(split.test_pos, split.test_neg, emb);
    std::vector<double> scores = model.predict(feats);

    EvalReport report;
    report.seed = split.seed;
    report.n_test_pos = split.test_pos.size();
    report.n_test_neg = split.test_neg.size();
    report.auc = compute_auc(scores, feats.labels);

    std::vector<double> idr_scores;
    std::vector<int> idr_labels;
    auto collect = [&](const std::vector<Edge>& edges, std::size_t offset, int label) {
        std::size_t kept = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (crosses_labels(g, edges[i])) {
                idr_scores.push_back(scores[offset + i]);
                idr_labels.push_back(label);
                ++kept;
            }
        }
        return kept;
    };
    report.n_idr_pos = collect(split.test_pos, 0, 1);
    report.n_idr_neg = collect(split.test_neg, split.test_pos.size(), 0);
    if (report.n_idr_pos > 0 && report.n_idr_neg > 0)
        report.idr_auc = compute_auc(idr_scores, idr_labels);

    if (scores_out) *scores_out = std::move(scores);
    return report;
}

} // namespace citenet
