#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace citenet {

/// Average ranks (1-based) with the midrank convention for ties.
inline std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        double rank = 0.5 * static_cast<double>(i + 1 + j + 1); // midrank over the tied run
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

/// Rank-based AUC: the probability that a random positive outscores a random
/// negative, ties counting one half (the Mann-Whitney statistic).
inline double compute_auc(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) throw std::invalid_argument("compute_auc: size mismatch");
    std::size_t n_pos = 0;
    for (int l : labels) n_pos += l > 0 ? 1 : 0;
    std::size_t n_neg = scores.size() - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw std::invalid_argument("compute_auc: need at least one positive and one negative");

    auto ranks = average_ranks(scores);
    double rank_sum_pos = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (labels[i] > 0) rank_sum_pos += ranks[i];
    double u = rank_sum_pos - static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

} // namespace citenet
