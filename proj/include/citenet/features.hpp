#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "citenet/embedding.hpp"
#include "citenet/graph.hpp"

namespace citenet {

/// Row-major batch of edge feature vectors with binary labels
/// (1 = positive edge, 0 = negative edge).
struct EdgeFeatures {
    std::vector<double> data;
    std::vector<int> labels;
    int dim = 0;

    std::size_t count() const { return labels.size(); }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
    }
};

/// Concatenation of the endpoint embeddings, endpoint order canonicalized to
/// ascending node index so (u,v) and (v,u) featurize identically.
inline std::vector<double> featurize_edge(const Edge& e, const EmbeddingMatrix& emb) {
    Edge c = make_edge(e.u, e.v);
    auto lo = emb.embedding_of(c.u);
    auto hi = emb.embedding_of(c.v);
    std::vector<double> out;
    out.reserve(lo.size() + hi.size());
    out.insert(out.end(), lo.begin(), lo.end());
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
}

inline void append_features(EdgeFeatures& feats, std::span<const Edge> edges, const EmbeddingMatrix& emb,
                            int label) {
    if (feats.dim == 0) feats.dim = 2 * emb.dim();
    if (feats.dim != 2 * emb.dim()) throw std::invalid_argument("append_features: dimension mismatch");
    for (const Edge& e : edges) {
        auto vec = featurize_edge(e, emb);
        feats.data.insert(feats.data.end(), vec.begin(), vec.end());
        feats.labels.push_back(label);
    }
}

/// Positive edges followed by negative edges, labeled 1/0.
inline EdgeFeatures featurize_edges(std::span<const Edge> positives, std::span<const Edge> negatives,
                                    const EmbeddingMatrix& emb) {
    EdgeFeatures feats;
    feats.dim = 2 * emb.dim();
    feats.data.reserve((positives.size() + negatives.size()) * static_cast<std::size_t>(feats.dim));
    append_features(feats, positives, emb, 1);
    append_features(feats, negatives, emb, 0);
    return feats;
}

} // namespace citenet
