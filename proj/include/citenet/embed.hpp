#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "citenet/embedding.hpp"
#include "citenet/graph.hpp"
#include "citenet/roles.hpp"
#include "citenet/skipgram.hpp"
#include "citenet/walks.hpp"

namespace citenet {

enum class EmbeddingMethod { deepwalk, node2vec, role2vec };

inline const char* method_name(EmbeddingMethod m) {
    switch (m) {
        case EmbeddingMethod::deepwalk: return "deepwalk";
        case EmbeddingMethod::node2vec: return "node2vec";
        case EmbeddingMethod::role2vec: return "role2vec";
    }
    throw std::logic_error("unknown embedding method");
}

inline EmbeddingMethod parse_method(const std::string& name) {
    if (name == "deepwalk") return EmbeddingMethod::deepwalk;
    if (name == "node2vec") return EmbeddingMethod::node2vec;
    if (name == "role2vec") return EmbeddingMethod::role2vec;
    throw std::invalid_argument("unknown embedding method: " + name);
}

struct NodeEmbeddings {
    EmbeddingMatrix matrix;
    std::optional<RoleAssignment> roles; // role2vec only
};

/// Walk generation composed with SkipGram training. Intended for the
/// training subgraph: proximity methods embed every node directly, role2vec
/// derives structural roles from this graph and resolves each node through
/// its role's row.
inline NodeEmbeddings embed_nodes(const CitationGraph& g, EmbeddingMethod method, const WalkConfig& walk_cfg,
                                  const SkipGramConfig& sg_cfg, int dim = 128, double role_log_base = 2.0) {
    NodeEmbeddings out;
    switch (method) {
        case EmbeddingMethod::deepwalk: {
            WalkCorpus corpus = generate_walks_uniform(g, walk_cfg);
            out.matrix = train_skipgram(corpus, dim, sg_cfg);
            break;
        }
        case EmbeddingMethod::node2vec: {
            WalkCorpus corpus = generate_walks_biased(g, walk_cfg);
            out.matrix = train_skipgram(corpus, dim, sg_cfg);
            break;
        }
        case EmbeddingMethod::role2vec: {
            RoleAssignment roles = assign_roles(structural_features(g), role_log_base);
            WalkCorpus corpus = generate_role_walks(g, roles, walk_cfg);
            out.matrix = train_skipgram(corpus, dim, sg_cfg);
            out.matrix.set_node_rows(roles.role_of_node);
            out.roles = std::move(roles);
            break;
        }
    }
    return out;
}

} // namespace citenet
