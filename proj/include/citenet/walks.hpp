#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "citenet/graph.hpp"
#include "citenet/roles.hpp"
#include "citenet/util.hpp"

namespace citenet {

struct WalkConfig {
    int walks_per_node = 10;
    int walk_length = 80; // nodes per walk
    double p = 1.0;       // return parameter
    double q = 1.0;       // in-out parameter
    std::uint64_t seed = 0;
};

/// Corpus of token sequences. Tokens are node indices for plain walks and
/// role indices for role walks; either way every token < vocabulary_size.
struct WalkCorpus {
    std::vector<std::vector<std::int32_t>> walks;
    std::int32_t vocabulary_size = 0;
};

namespace detail {

inline void check_walk_config(const WalkConfig& cfg) {
    if (cfg.walks_per_node < 1) throw std::invalid_argument("walks_per_node must be >= 1");
    if (cfg.walk_length < 2) throw std::invalid_argument("walk_length must be >= 2");
    if (cfg.p <= 0 || cfg.q <= 0) throw std::invalid_argument("walk bias parameters p, q must be positive");
}

// Walk RNG streams are derived from (seed, start node, walk index) so the
// corpus is identical no matter how the outer loops are scheduled.
inline Rng walk_rng(const WalkConfig& cfg, NodeIndex start, int walk_idx) {
    return Rng(cfg.seed, static_cast<std::uint64_t>(start) * static_cast<std::uint64_t>(cfg.walks_per_node) +
                             static_cast<std::uint64_t>(walk_idx));
}

} // namespace detail

/// First-order uniform random walks: `walks_per_node` walks from every node,
/// each step uniform over the current node's neighbors. Walks from isolated
/// nodes have length 1. Deterministic per seed.
inline WalkCorpus generate_walks_uniform(const CitationGraph& g, const WalkConfig& cfg) {
    detail::check_walk_config(cfg);
    if (g.node_count() == 0) throw std::invalid_argument("cannot walk an empty graph");

    WalkCorpus corpus;
    corpus.vocabulary_size = static_cast<std::int32_t>(g.node_count());
    corpus.walks.reserve(g.node_count() * static_cast<std::size_t>(cfg.walks_per_node));
    for (NodeIndex start = 0; start < static_cast<NodeIndex>(g.node_count()); ++start) {
        for (int w = 0; w < cfg.walks_per_node; ++w) {
            Rng rng = detail::walk_rng(cfg, start, w);
            std::vector<std::int32_t> walk;
            walk.reserve(cfg.walk_length);
            walk.push_back(start);
            NodeIndex cur = start;
            while (static_cast<int>(walk.size()) < cfg.walk_length) {
                const auto& nbrs = g.neighbors(cur);
                if (nbrs.empty()) break; // dead end: isolated node
                cur = nbrs[rng.index(nbrs.size())];
                walk.push_back(cur);
            }
            corpus.walks.push_back(std::move(walk));
        }
    }
    return corpus;
}

/// Unnormalized second-order step weights out of `cur` given the walk came
/// from `prev`: 1/p back to `prev`, 1 to nodes adjacent to `prev`, 1/q
/// otherwise. Exposed so the transition law itself can be inspected.
inline std::vector<double> biased_step_weights(const CitationGraph& g, NodeIndex prev, NodeIndex cur,
                                               double p, double q) {
    const auto& nbrs = g.neighbors(cur);
    std::vector<double> weights(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        NodeIndex next = nbrs[i];
        if (next == prev) weights[i] = 1.0 / p;
        else if (g.has_edge(next, prev)) weights[i] = 1.0;
        else weights[i] = 1.0 / q;
    }
    return weights;
}

/// Second-order biased walks (the two-parameter scheme): first step uniform,
/// later steps drawn with biased_step_weights. p = q = 1 reproduces the
/// uniform walk's per-step transition law.
inline WalkCorpus generate_walks_biased(const CitationGraph& g, const WalkConfig& cfg) {
    detail::check_walk_config(cfg);
    if (g.node_count() == 0) throw std::invalid_argument("cannot walk an empty graph");

    WalkCorpus corpus;
    corpus.vocabulary_size = static_cast<std::int32_t>(g.node_count());
    corpus.walks.reserve(g.node_count() * static_cast<std::size_t>(cfg.walks_per_node));
    for (NodeIndex start = 0; start < static_cast<NodeIndex>(g.node_count()); ++start) {
        for (int w = 0; w < cfg.walks_per_node; ++w) {
            Rng rng = detail::walk_rng(cfg, start, w);
            std::vector<std::int32_t> walk;
            walk.reserve(cfg.walk_length);
            walk.push_back(start);
            const auto& first_nbrs = g.neighbors(start);
            if (!first_nbrs.empty()) {
                walk.push_back(first_nbrs[rng.index(first_nbrs.size())]);
                while (static_cast<int>(walk.size()) < cfg.walk_length) {
                    NodeIndex prev = walk[walk.size() - 2];
                    NodeIndex cur = walk.back();
                    const auto& nbrs = g.neighbors(cur);
                    if (nbrs.empty()) break;
                    auto weights = biased_step_weights(g, prev, cur, cfg.p, cfg.q);
                    double total = 0.0;
                    for (double wgt : weights) total += wgt;
                    double draw = rng.real01() * total;
                    std::size_t pick = 0;
                    for (; pick + 1 < weights.size(); ++pick) {
                        draw -= weights[pick];
                        if (draw < 0) break;
                    }
                    walk.push_back(nbrs[pick]);
                }
            }
            corpus.walks.push_back(std::move(walk));
        }
    }
    return corpus;
}

/// Uniform walks over the original graph that emit role tokens instead of
/// node tokens. Shares the uniform walker's RNG streams, so with the same
/// seed the role corpus is exactly the node corpus pushed through the role
/// map.
inline WalkCorpus generate_role_walks(const CitationGraph& g, const RoleAssignment& roles,
                                      const WalkConfig& cfg) {
    if (roles.role_of_node.size() != g.node_count())
        throw std::invalid_argument("role assignment must cover every node");
    WalkCorpus corpus = generate_walks_uniform(g, cfg);
    for (auto& walk : corpus.walks)
        for (auto& token : walk) token = roles.role_of_node[token];
    corpus.vocabulary_size = roles.role_count;
    return corpus;
}

} // namespace citenet
