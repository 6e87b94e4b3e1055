#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "citenet/graph.hpp"
#include "citenet/util.hpp"

namespace citenet {

/// Planted-partition (stochastic block model) graph: `blocks` communities of
/// `block_size` nodes each, independent Bernoulli edges with probability
/// `p_in` inside a block and `p_out` across blocks. Nodes are labeled by
/// block, which gives synthetic ground truth where real category data is
/// unavailable.
inline CitationGraph planted_partition(int blocks, int block_size, double p_in, double p_out,
                                       std::uint64_t seed) {
    if (blocks < 1 || block_size < 1) throw std::invalid_argument("planted_partition: empty blocks");
    if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1)
        throw std::invalid_argument("planted_partition: probabilities must lie in [0,1]");

    const NodeIndex n = static_cast<NodeIndex>(blocks) * block_size;
    std::vector<std::string> tokens(n);
    std::vector<CategoryIndex> labels(n);
    for (NodeIndex i = 0; i < n; ++i) {
        tokens[i] = "n" + std::to_string(i);
        labels[i] = i / block_size;
    }

    Rng rng(seed, /*stream=*/0xb10c);
    std::vector<Edge> edges;
    for (NodeIndex u = 0; u < n; ++u) {
        for (NodeIndex v = u + 1; v < n; ++v) {
            double p = labels[u] == labels[v] ? p_in : p_out;
            if (rng.real01() < p) edges.push_back(Edge{u, v});
        }
    }

    CitationGraph g(std::move(tokens), std::move(edges));
    std::vector<std::string> category_names(blocks);
    for (int b = 0; b < blocks; ++b) category_names[b] = "block" + std::to_string(b);
    g.set_labels(std::move(labels), std::move(category_names));
    return g;
}

} // namespace citenet
