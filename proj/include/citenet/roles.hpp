#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "citenet/graph.hpp"

namespace citenet {

/// Per-node structural features: degree and the number of triangles the node
/// participates in.
struct StructuralFeatures {
    std::vector<std::int64_t> degree;
    std::vector<std::int64_t> triangle_count;
};

/// Exact degree and incident-triangle counts. Each triangle {u,v,w} is
/// enumerated once via its lowest edge and credited to all three corners.
inline StructuralFeatures structural_features(const CitationGraph& g) {
    const NodeIndex n = static_cast<NodeIndex>(g.node_count());
    StructuralFeatures f;
    f.degree.resize(n);
    f.triangle_count.assign(n, 0);
    for (NodeIndex i = 0; i < n; ++i) f.degree[i] = static_cast<std::int64_t>(g.degree(i));

    for (const Edge& e : g.edges()) {
        const auto& nu = g.neighbors(e.u);
        const auto& nv = g.neighbors(e.v);
        // common neighbors w with w > v, so each triangle counts once
        auto iu = std::upper_bound(nu.begin(), nu.end(), e.v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), e.v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) ++iu;
            else if (*iv < *iu) ++iv;
            else {
                ++f.triangle_count[e.u];
                ++f.triangle_count[e.v];
                ++f.triangle_count[*iu];
                ++iu;
                ++iv;
            }
        }
    }
    return f;
}

/// Total node -> role map; nodes whose binned feature tuples coincide share a
/// role. Roles are numbered 0..role_count-1 in first-seen node order.
struct RoleAssignment {
    std::vector<std::int32_t> role_of_node;
    std::int32_t role_count = 0;
};

namespace detail {

// floor(log_base(1 + x)) for integer counts, computed by integer-style
// search so exact powers of the base land in the right bin.
inline int log_bin(std::int64_t x, double log_base) {
    double value = 1.0 + static_cast<double>(x);
    int bin = 0;
    double power = log_base;
    while (power <= value * (1.0 + 1e-12)) {
        ++bin;
        power *= log_base;
    }
    return bin;
}

} // namespace detail

/// Map nodes to roles by binning (degree, triangle_count) through
/// floor(log_base(1 + x)).
inline RoleAssignment assign_roles(const StructuralFeatures& f, double log_base = 2.0) {
    if (log_base <= 1.0) throw std::invalid_argument("assign_roles: log base must exceed 1");
    if (f.degree.size() != f.triangle_count.size())
        throw std::invalid_argument("assign_roles: feature vectors must be aligned");

    RoleAssignment roles;
    roles.role_of_node.resize(f.degree.size());
    std::map<std::pair<int, int>, std::int32_t> role_of_tuple;
    for (std::size_t i = 0; i < f.degree.size(); ++i) {
        std::pair<int, int> tuple{detail::log_bin(f.degree[i], log_base),
                                  detail::log_bin(f.triangle_count[i], log_base)};
        auto [it, inserted] = role_of_tuple.emplace(tuple, roles.role_count);
        if (inserted) ++roles.role_count;
        roles.role_of_node[i] = it->second;
    }
    return roles;
}

} // namespace citenet
