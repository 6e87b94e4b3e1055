#pragma once

#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "citenet/graph.hpp"
#include "citenet/roles.hpp"

namespace citenet {

/// Dense row-major embedding table plus a node -> row resolver. For
/// node-indexed embeddings the resolver is the identity; for role-indexed
/// embeddings several nodes share a row.
class EmbeddingMatrix {
public:
    EmbeddingMatrix() = default;

    EmbeddingMatrix(std::int32_t rows, std::int32_t dim)
        : rows_(rows), dim_(dim), data_(static_cast<std::size_t>(rows) * dim, 0.0) {
        node_to_row_.resize(rows);
        for (std::int32_t i = 0; i < rows; ++i) node_to_row_[i] = i;
    }

    std::int32_t rows() const { return rows_; }
    std::int32_t dim() const { return dim_; }

    double* row(std::int32_t r) { return data_.data() + static_cast<std::size_t>(r) * dim_; }
    const double* row(std::int32_t r) const { return data_.data() + static_cast<std::size_t>(r) * dim_; }

    std::span<const double> row_span(std::int32_t r) const { return {row(r), static_cast<std::size_t>(dim_)}; }

    /// Remap nodes onto rows (role2vec: node -> role row).
    void set_node_rows(std::vector<std::int32_t> node_to_row) {
        for (std::int32_t r : node_to_row)
            if (r < 0 || r >= rows_) throw std::invalid_argument("node row out of range");
        node_to_row_ = std::move(node_to_row);
    }

    std::size_t resolvable_nodes() const { return node_to_row_.size(); }

    std::int32_t row_of_node(NodeIndex node) const {
        if (node < 0 || node >= static_cast<NodeIndex>(node_to_row_.size()))
            throw std::out_of_range("embedding has no row for node " + std::to_string(node));
        return node_to_row_[node];
    }

    std::span<const double> embedding_of(NodeIndex node) const { return row_span(row_of_node(node)); }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    std::int32_t rows_ = 0;
    std::int32_t dim_ = 0;
    std::vector<double> data_;
    std::vector<std::int32_t> node_to_row_;
};

/// word2vec text convention: header `<rows> <dim>`, then one `<token> <dim
/// floats>` line per row. Tokens are supplied by the caller (node tokens, or
/// role ids for role matrices).
inline void write_embeddings(std::ostream& os, const EmbeddingMatrix& emb,
                             const std::vector<std::string>& row_tokens) {
    if (row_tokens.size() != static_cast<std::size_t>(emb.rows()))
        throw std::invalid_argument("write_embeddings: one token per row required");
    os << emb.rows() << ' ' << emb.dim() << '\n';
    char buf[32];
    for (std::int32_t r = 0; r < emb.rows(); ++r) {
        os << row_tokens[r];
        const double* row = emb.row(r);
        for (std::int32_t d = 0; d < emb.dim(); ++d) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[d]);
            os << ' ' << buf;
        }
        os << '\n';
    }
}

struct LoadedEmbeddings {
    EmbeddingMatrix matrix;
    std::vector<std::string> row_tokens;
};

inline LoadedEmbeddings read_embeddings(std::istream& is) {
    std::int64_t rows = -1, dim = -1;
    if (!(is >> rows >> dim) || rows < 0 || dim < 1)
        throw std::runtime_error("embedding file: bad header");
    LoadedEmbeddings out;
    out.matrix = EmbeddingMatrix(static_cast<std::int32_t>(rows), static_cast<std::int32_t>(dim));
    out.row_tokens.resize(rows);
    for (std::int64_t r = 0; r < rows; ++r) {
        if (!(is >> out.row_tokens[r])) throw std::runtime_error("embedding file: truncated at row " + std::to_string(r));
        double* row = out.matrix.row(static_cast<std::int32_t>(r));
        for (std::int64_t d = 0; d < dim; ++d)
            if (!(is >> row[d]))
                throw std::runtime_error("embedding file: truncated values at row " + std::to_string(r));
    }
    return out;
}

/// role2vec side file: `node<TAB>role` per line.
inline void write_role_map(std::ostream& os, const CitationGraph& g, const RoleAssignment& roles) {
    if (roles.role_of_node.size() != g.node_count())
        throw std::invalid_argument("write_role_map: role map must cover every node");
    for (NodeIndex i = 0; i < static_cast<NodeIndex>(g.node_count()); ++i)
        os << g.token(i) << '\t' << roles.role_of_node[i] << '\n';
}

} // namespace citenet
