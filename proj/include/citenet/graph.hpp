#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace citenet {

using NodeIndex = std::int32_t;
using CategoryIndex = std::int32_t;

/// Canonical undirected edge, always stored with u < v.
struct Edge {
    NodeIndex u = 0;
    NodeIndex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeIndex a, NodeIndex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// 64-bit key for hashing canonical edges.
inline std::uint64_t edge_key(const Edge& e) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
           static_cast<std::uint32_t>(e.v);
}

/// Simple undirected graph of papers. Node tokens (opaque strings) map to
/// dense indices that stay stable for the life of the graph. Labels, when
/// present, are total: either every node carries a category or none does.
/// Immutable after construction; safe to share across concurrent readers.
class CitationGraph {
public:
    CitationGraph() = default;

    /// Build from tokens and canonical edges. Edges must reference valid
    /// indices; duplicates and self-loops are rejected here rather than
    /// silently fixed (file ingestion does the cleaning).
    CitationGraph(std::vector<std::string> tokens, std::vector<Edge> edges)
        : tokens_(std::move(tokens)), edges_(std::move(edges)) {
        token_index_.reserve(tokens_.size());
        for (NodeIndex i = 0; i < static_cast<NodeIndex>(tokens_.size()); ++i) {
            auto [it, inserted] = token_index_.emplace(tokens_[i], i);
            if (!inserted) throw std::invalid_argument("duplicate node token: " + tokens_[i]);
        }
        std::sort(edges_.begin(), edges_.end());
        adj_.assign(tokens_.size(), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (e.u >= e.v) throw std::invalid_argument("edge not canonical or self-loop");
            if (e.v >= static_cast<NodeIndex>(tokens_.size()))
                throw std::invalid_argument("edge endpoint out of range");
            if (i > 0 && edges_[i - 1] == e) throw std::invalid_argument("duplicate edge");
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    std::size_t node_count() const { return tokens_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& token(NodeIndex i) const { return tokens_.at(i); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    std::optional<NodeIndex> find_node(std::string_view token) const {
        auto it = token_index_.find(std::string(token));
        return it == token_index_.end() ? std::nullopt : std::optional<NodeIndex>(it->second);
    }

    NodeIndex node_of(std::string_view token) const {
        auto idx = find_node(token);
        if (!idx) throw std::out_of_range("unknown node token: " + std::string(token));
        return *idx;
    }

    const std::vector<NodeIndex>& neighbors(NodeIndex i) const { return adj_.at(i); }
    std::size_t degree(NodeIndex i) const { return adj_.at(i).size(); }

    bool has_edge(NodeIndex a, NodeIndex b) const {
        if (a == b) return false;
        const auto& nbrs = adj_.at(a);
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    bool labeled() const { return labels_.has_value(); }

    CategoryIndex label(NodeIndex i) const {
        if (!labels_) throw std::logic_error("graph has no labels");
        return (*labels_).at(i);
    }

    std::size_t category_count() const { return category_names_.size(); }
    const std::string& category_name(CategoryIndex c) const { return category_names_.at(c); }
    const std::vector<std::string>& category_names() const { return category_names_; }

    /// Attach a total label map (category per node, dense category ids).
    void set_labels(std::vector<CategoryIndex> labels, std::vector<std::string> category_names) {
        if (labels.size() != tokens_.size())
            throw std::invalid_argument("label map must cover every node");
        for (CategoryIndex c : labels)
            if (c < 0 || c >= static_cast<CategoryIndex>(category_names.size()))
                throw std::invalid_argument("label out of range of category table");
        labels_ = std::move(labels);
        category_names_ = std::move(category_names);
    }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, NodeIndex> token_index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeIndex>> adj_;
    std::optional<std::vector<CategoryIndex>> labels_;
    std::vector<std::string> category_names_;
};

struct GraphSummary {
    std::size_t paper_count = 0;
    double citations_per_paper = 0.0; // mean degree, 2|E|/|V|
    std::size_t topic_count = 0;
};

inline GraphSummary graph_stats(const CitationGraph& g) {
    GraphSummary s;
    s.paper_count = g.node_count();
    s.citations_per_paper =
        g.node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
    s.topic_count = g.labeled() ? g.category_count() : 0;
    return s;
}

struct EdgeListLoad {
    CitationGraph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

inline std::string_view strip_comment(std::string_view line) {
    auto pos = line.find('#');
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

} // namespace detail

/// Parse an edge list: one edge per line, two whitespace-separated node
/// tokens, `#` starts a comment. Duplicate and reversed-duplicate lines
/// collapse to a single undirected edge; self-loops are dropped and counted.
inline EdgeListLoad load_edge_list(std::istream& in) {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, NodeIndex> index;
    auto intern = [&](const std::string& tok) -> NodeIndex {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        NodeIndex id = static_cast<NodeIndex>(tokens.size());
        tokens.push_back(tok);
        index.emplace(tok, id);
        return id;
    };

    EdgeListLoad result;
    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, bool> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = detail::split_tokens(detail::strip_comment(line));
        if (fields.empty()) continue;
        if (fields.size() != 2) {
            throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                     ": expected two node tokens, got " + std::to_string(fields.size()));
        }
        NodeIndex a = intern(fields[0]);
        NodeIndex b = intern(fields[1]);
        if (a == b) {
            ++result.self_loops_dropped;
            continue;
        }
        Edge e = make_edge(a, b);
        auto [it, inserted] = seen.emplace(edge_key(e), true);
        if (!inserted) {
            ++result.duplicates_collapsed;
            continue;
        }
        edges.push_back(e);
    }
    result.graph = CitationGraph(std::move(tokens), std::move(edges));
    return result;
}

/// Parse a label file (`node<ws>category` per line) and return a labeled copy
/// of the graph. Labeling must be total: an unknown node, a double label, or
/// leftover unlabeled node is an ingestion error.
inline CitationGraph load_node_labels(std::istream& in, const CitationGraph& g) {
    std::vector<CategoryIndex> labels(g.node_count(), -1);
    std::vector<std::string> category_names;
    std::unordered_map<std::string, CategoryIndex> category_index;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = detail::split_tokens(detail::strip_comment(line));
        if (fields.empty()) continue;
        if (fields.size() != 2) {
            throw std::runtime_error("label file parse error at line " + std::to_string(line_no) +
                                     ": expected `node category`");
        }
        auto node = g.find_node(fields[0]);
        if (!node) {
            throw std::runtime_error("label file line " + std::to_string(line_no) +
                                     ": unknown node token `" + fields[0] + "`");
        }
        if (labels[*node] != -1) {
            throw std::runtime_error("label file line " + std::to_string(line_no) + ": node `" + fields[0] +
                                     "` labeled twice");
        }
        auto [it, inserted] = category_index.emplace(fields[1], static_cast<CategoryIndex>(category_names.size()));
        if (inserted) category_names.push_back(fields[1]);
        labels[*node] = it->second;
    }
    for (NodeIndex i = 0; i < static_cast<NodeIndex>(labels.size()); ++i) {
        if (labels[i] == -1)
            throw std::runtime_error("label file leaves node `" + g.token(i) + "` unlabeled");
    }
    CitationGraph out = g;
    out.set_labels(std::move(labels), std::move(category_names));
    return out;
}

/// Hop distances from `source` to every node; -1 marks unreachable nodes.
/// Stops early once `target` (if given) has been settled.
inline std::vector<int> bfs_distances(const CitationGraph& g, NodeIndex source,
                                      std::optional<NodeIndex> target = std::nullopt) {
    if (source < 0 || source >= static_cast<NodeIndex>(g.node_count()))
        throw std::out_of_range("bfs source out of range");
    std::vector<int> dist(g.node_count(), -1);
    std::queue<NodeIndex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        NodeIndex u = frontier.front();
        frontier.pop();
        if (target && u == *target) break;
        for (NodeIndex w : g.neighbors(u)) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

/// Breadth-first hop count between two nodes; nullopt when they sit in
/// different components.
inline std::optional<int> shortest_path_length(const CitationGraph& g, NodeIndex u, NodeIndex v) {
    if (u < 0 || v < 0 || u >= static_cast<NodeIndex>(g.node_count()) ||
        v >= static_cast<NodeIndex>(g.node_count()))
        throw std::out_of_range("shortest_path_length: unknown node");
    if (u == v) return 0;
    auto dist = bfs_distances(g, u, v);
    return dist[v] == -1 ? std::nullopt : std::optional<int>(dist[v]);
}

inline std::optional<int> shortest_path_length(const CitationGraph& g, std::string_view u, std::string_view v) {
    return shortest_path_length(g, g.node_of(u), g.node_of(v));
}

} // namespace citenet
