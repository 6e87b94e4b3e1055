#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "citenet/graph.hpp"
#include "citenet/util.hpp"

namespace citenet {

struct SplitRatios {
    double train = 0.75;
    double val = 0.05;
    double test = 0.20;
};

/// Train/validation/test partition of the positive edges plus matched
/// negative (non-)edges. Negative sets are the same size as their positive
/// counterparts, disjoint from every positive edge and from each other.
struct EdgeSplit {
    std::vector<Edge> train_pos, val_pos, test_pos;
    std::vector<Edge> train_neg, val_neg, test_neg;
    std::uint64_t seed = 0;
    SplitRatios ratios;
};

/// Uniform random partition of the edge set. Validation and test sizes are
/// floor(ratio * |E|); the remainder goes to train. Deterministic per seed.
/// Negatives are left empty (see sample_negative_edges / build_split).
inline EdgeSplit split_edges(const CitationGraph& g, SplitRatios ratios, std::uint64_t seed) {
    if (ratios.train < 0 || ratios.val < 0 || ratios.test < 0)
        throw std::invalid_argument("split ratios must be nonnegative");
    if (std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9)
        throw std::invalid_argument("split ratios must sum to 1");
    if (g.edge_count() == 0) throw std::invalid_argument("cannot split an empty edge set");

    std::vector<Edge> order = g.edges();
    Rng rng(seed, /*stream=*/0x517ULL); // fixed stream tag for splitting
    rng.shuffle(order);

    const std::size_t total = order.size();
    const std::size_t n_val = static_cast<std::size_t>(std::floor(ratios.val * static_cast<double>(total)));
    const std::size_t n_test = static_cast<std::size_t>(std::floor(ratios.test * static_cast<double>(total)));
    const std::size_t n_train = total - n_val - n_test;

    EdgeSplit s;
    s.seed = seed;
    s.ratios = ratios;
    s.train_pos.assign(order.begin(), order.begin() + n_train);
    s.val_pos.assign(order.begin() + n_train, order.begin() + n_train + n_val);
    s.test_pos.assign(order.begin() + n_train + n_val, order.end());
    return s;
}

/// Draw `count` distinct unordered node pairs that are not edges of `g`, not
/// in `exclude`, and not self-pairs, uniformly over all admissible pairs.
/// Throws (naming the shortfall) when fewer than `count` pairs exist.
inline std::vector<Edge> sample_negative_edges(const CitationGraph& g, std::size_t count, std::uint64_t seed,
                                               const std::unordered_set<std::uint64_t>& exclude = {}) {
    const std::size_t n = g.node_count();
    if (count == 0) return {};
    const std::uint64_t all_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;

    std::uint64_t blocked = g.edge_count();
    for (std::uint64_t key : exclude) {
        Edge e{static_cast<NodeIndex>(key >> 32), static_cast<NodeIndex>(key & 0xffffffffu)};
        if (!g.has_edge(e.u, e.v)) ++blocked;
    }
    const std::uint64_t admissible = all_pairs > blocked ? all_pairs - blocked : 0;
    if (count > admissible) {
        throw std::invalid_argument("sample_negative_edges: requested " + std::to_string(count) +
                                    " negatives but only " + std::to_string(admissible) +
                                    " admissible non-edges exist (short by " +
                                    std::to_string(count - admissible) + ")");
    }

    Rng rng(seed, /*stream=*/0x9e37);
    auto admissible_pair = [&](const Edge& e) {
        return !g.has_edge(e.u, e.v) && !exclude.contains(edge_key(e));
    };

    std::vector<Edge> out;
    out.reserve(count);

    // Dense regime: enumerate the admissible pairs and take a random subset.
    // Keeps the draw exact when rejection sampling would thrash.
    if (all_pairs <= 2'000'000 || count * 4 >= admissible) {
        std::vector<Edge> pool;
        pool.reserve(static_cast<std::size_t>(admissible));
        for (NodeIndex u = 0; u < static_cast<NodeIndex>(n); ++u)
            for (NodeIndex v = u + 1; v < static_cast<NodeIndex>(n); ++v)
                if (Edge e{u, v}; admissible_pair(e)) pool.push_back(e);
        rng.shuffle(pool);
        out.assign(pool.begin(), pool.begin() + count);
        return out;
    }

    std::unordered_set<std::uint64_t> drawn;
    drawn.reserve(count * 2);
    while (out.size() < count) {
        NodeIndex u = static_cast<NodeIndex>(rng.index(n));
        NodeIndex v = static_cast<NodeIndex>(rng.index(n));
        if (u == v) continue;
        Edge e = make_edge(u, v);
        if (!admissible_pair(e)) continue;
        if (!drawn.insert(edge_key(e)).second) continue;
        out.push_back(e);
    }
    return out;
}

/// Full split: positives partitioned by ratio, then one matched negative set
/// per split. Negatives are excluded globally — against every positive edge
/// and against negatives drawn for earlier splits — so validation and test
/// negatives never leak into training.
inline EdgeSplit build_split(const CitationGraph& g, SplitRatios ratios, std::uint64_t seed) {
    EdgeSplit s = split_edges(g, ratios, seed);
    std::unordered_set<std::uint64_t> exclude;
    exclude.reserve(g.edge_count() * 2);
    for (const Edge& e : g.edges()) exclude.insert(edge_key(e));

    auto draw = [&](std::size_t count, std::uint64_t stream) {
        auto negs = sample_negative_edges(g, count, seed * 1000003ULL + stream, exclude);
        for (const Edge& e : negs) exclude.insert(edge_key(e));
        return negs;
    };
    s.train_neg = draw(s.train_pos.size(), 1);
    s.val_neg = draw(s.val_pos.size(), 2);
    s.test_neg = draw(s.test_pos.size(), 3);
    return s;
}

/// Graph over all nodes of `g` whose edge set is exactly the training
/// positives. Nodes that lose every edge stay as isolated nodes, and labels
/// carry over unchanged.
inline CitationGraph induced_training_subgraph(const CitationGraph& g, const EdgeSplit& s) {
    CitationGraph out(g.tokens(), s.train_pos);
    if (g.labeled()) {
        std::vector<CategoryIndex> labels(g.node_count());
        for (NodeIndex i = 0; i < static_cast<NodeIndex>(g.node_count()); ++i) labels[i] = g.label(i);
        out.set_labels(std::move(labels), g.category_names());
    }
    return out;
}

} // namespace citenet
