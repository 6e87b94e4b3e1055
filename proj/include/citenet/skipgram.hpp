#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "citenet/embedding.hpp"
#include "citenet/util.hpp"
#include "citenet/walks.hpp"

namespace citenet {

struct SkipGramConfig {
    int window = 10;
    int negatives_per_positive = 5;
    int epochs = 5;
    double initial_learning_rate = 0.025;
    double min_learning_rate_fraction = 1e-4; // floor as a fraction of the initial rate
    bool dynamic_window = true;               // effective window uniform in [1, window]
    double unigram_power = 0.75;              // negative-table exponent
    int threads = 1;                          // >1 enables lock-free parallel updates (non-deterministic)
    std::uint64_t seed = 0;
};

namespace detail {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(1 + e^t) without overflow
inline double softplus(double t) {
    double a = t > 0 ? t : 0.0;
    return a + std::log1p(std::exp(-std::abs(t)));
}

inline double dot(const double* a, const double* b, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += a[i] * b[i];
    return s;
}

} // namespace detail

/// Negative-sampling loss for one (center, context) pair with k negatives:
///   -log sigmoid(c.x) - sum_k log sigmoid(-c.n_k)
/// `negatives_flat` holds the k negative vectors back to back.
inline double sgns_pair_loss(std::span<const double> center, std::span<const double> context,
                             std::span<const double> negatives_flat) {
    const int dim = static_cast<int>(center.size());
    if (context.size() != center.size() || negatives_flat.size() % dim != 0)
        throw std::invalid_argument("sgns_pair_loss: inconsistent vector sizes");
    double loss = detail::softplus(-detail::dot(center.data(), context.data(), dim));
    const int k = static_cast<int>(negatives_flat.size() / dim);
    for (int j = 0; j < k; ++j)
        loss += detail::softplus(detail::dot(center.data(), negatives_flat.data() + static_cast<std::size_t>(j) * dim, dim));
    return loss;
}

/// Analytic gradients of sgns_pair_loss with respect to every input vector.
inline void sgns_pair_gradients(std::span<const double> center, std::span<const double> context,
                                std::span<const double> negatives_flat, std::span<double> grad_center,
                                std::span<double> grad_context, std::span<double> grad_negatives_flat) {
    const int dim = static_cast<int>(center.size());
    const int k = static_cast<int>(negatives_flat.size() / dim);
    double s_pos = detail::sigmoid(detail::dot(center.data(), context.data(), dim));
    for (int i = 0; i < dim; ++i) {
        grad_center[i] = (s_pos - 1.0) * context[i];
        grad_context[i] = (s_pos - 1.0) * center[i];
    }
    for (int j = 0; j < k; ++j) {
        const double* nj = negatives_flat.data() + static_cast<std::size_t>(j) * dim;
        double* gj = grad_negatives_flat.data() + static_cast<std::size_t>(j) * dim;
        double s_neg = detail::sigmoid(detail::dot(center.data(), nj, dim));
        for (int i = 0; i < dim; ++i) {
            grad_center[i] += s_neg * nj[i];
            gj[i] = s_neg * center[i];
        }
    }
}

namespace detail {

// Cumulative unigram^power table; negatives are drawn by binary search on it.
class NegativeTable {
public:
    NegativeTable(const WalkCorpus& corpus, double power) {
        std::vector<double> counts(corpus.vocabulary_size, 0.0);
        for (const auto& walk : corpus.walks)
            for (std::int32_t tok : walk) counts[tok] += 1.0;
        cumulative_.resize(counts.size());
        double total = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            total += counts[i] > 0 ? std::pow(counts[i], power) : 0.0;
            cumulative_[i] = total;
        }
        if (total <= 0) throw std::invalid_argument("train_skipgram: corpus has no tokens");
    }

    std::int32_t draw(Rng& rng) const {
        double r = rng.real01() * cumulative_.back();
        std::size_t lo = 0, hi = cumulative_.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cumulative_[mid] <= r) lo = mid + 1;
            else hi = mid;
        }
        return static_cast<std::int32_t>(lo);
    }

private:
    std::vector<double> cumulative_;
};

struct SgnsShared {
    EmbeddingMatrix* input;
    std::vector<double>* output;
    const WalkCorpus* corpus;
    const NegativeTable* table;
    SkipGramConfig cfg;
    int dim;
    std::uint64_t total_tokens; // across all epochs, for the lr schedule
    std::atomic<std::uint64_t> tokens_processed{0};
};

// One shard of one epoch: walks [begin, end) of `order`.
inline void sgns_train_range(SgnsShared& sh, const std::vector<std::uint32_t>& order, std::size_t begin,
                             std::size_t end, Rng rng, double* loss_sum, std::uint64_t* pair_count) {
    const int dim = sh.dim;
    const SkipGramConfig& cfg = sh.cfg;
    const double lr_floor = cfg.initial_learning_rate * cfg.min_learning_rate_fraction;
    std::vector<double> grad_center(dim);

    for (std::size_t wi = begin; wi < end; ++wi) {
        const auto& walk = sh.corpus->walks[order[wi]];
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            std::uint64_t done = sh.tokens_processed.fetch_add(1, std::memory_order_relaxed);
            double alpha = cfg.initial_learning_rate *
                           (1.0 - static_cast<double>(done) / static_cast<double>(sh.total_tokens + 1));
            if (alpha < lr_floor) alpha = lr_floor;

            int reach = cfg.dynamic_window ? 1 + static_cast<int>(rng.index(cfg.window)) : cfg.window;
            const std::int32_t center = walk[i];
            double* u = sh.input->row(center);

            for (int j = i - reach; j <= i + reach; ++j) {
                if (j == i || j < 0 || j >= len) continue;
                const std::int32_t context = walk[j];
                std::fill(grad_center.begin(), grad_center.end(), 0.0);
                double pair_loss = 0.0;

                // positive output, then sampled negatives
                for (int s = 0; s < 1 + cfg.negatives_per_positive; ++s) {
                    std::int32_t target;
                    double label;
                    if (s == 0) {
                        target = context;
                        label = 1.0;
                    } else {
                        target = sh.table->draw(rng);
                        if (target == context) continue; // word2vec convention: drop the slot
                        label = 0.0;
                    }
                    double* v = sh.output->data() + static_cast<std::size_t>(target) * dim;
                    double z = dot(u, v, dim);
                    double score = sigmoid(z);
                    pair_loss += label > 0.5 ? softplus(-z) : softplus(z);
                    double g = (label - score) * alpha;
                    for (int d = 0; d < dim; ++d) {
                        grad_center[d] += g * v[d];
                        v[d] += g * u[d];
                    }
                }
                for (int d = 0; d < dim; ++d) u[d] += grad_center[d];
                *loss_sum += pair_loss;
                ++*pair_count;
            }
        }
    }
}

} // namespace detail

/// SkipGram-with-negative-sampling training over a walk corpus. Two vector
/// tables are trained (input and output); the input table is returned as the
/// embedding, shape vocabulary_size x dim. Negatives follow the
/// unigram^power token distribution. With threads == 1 the result is a pure
/// function of (corpus, dim, cfg); the parallel mode trades that for speed.
/// `epoch_losses`, when given, receives the mean pair loss of each epoch.
inline EmbeddingMatrix train_skipgram(const WalkCorpus& corpus, int dim = 128, SkipGramConfig cfg = {},
                                      std::vector<double>* epoch_losses = nullptr) {
    if (dim < 1) throw std::invalid_argument("train_skipgram: dimension must be >= 1");
    if (corpus.walks.empty() || corpus.vocabulary_size <= 0)
        throw std::invalid_argument("train_skipgram: empty corpus");
    if (cfg.window < 1) throw std::invalid_argument("train_skipgram: window must be >= 1");
    if (cfg.negatives_per_positive < 1)
        throw std::invalid_argument("train_skipgram: negatives_per_positive must be >= 1");
    if (cfg.epochs < 0) throw std::invalid_argument("train_skipgram: epochs must be >= 0");
    if (cfg.initial_learning_rate <= 0)
        throw std::invalid_argument("train_skipgram: learning rate must be positive");

    EmbeddingMatrix input(corpus.vocabulary_size, dim);
    {
        Rng init_rng(cfg.seed, /*stream=*/0x1217);
        for (double& x : input.data()) x = (init_rng.real01() - 0.5) / dim;
    }
    std::vector<double> output(static_cast<std::size_t>(corpus.vocabulary_size) * dim, 0.0);

    std::uint64_t corpus_tokens = 0;
    for (const auto& walk : corpus.walks) corpus_tokens += walk.size();

    detail::NegativeTable table(corpus, cfg.unigram_power);
    detail::SgnsShared sh{&input, &output, &corpus, &table, cfg, dim,
                          corpus_tokens * static_cast<std::uint64_t>(cfg.epochs > 0 ? cfg.epochs : 1)};

    if (epoch_losses) epoch_losses->clear();
    std::vector<std::uint32_t> order(corpus.walks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);

    const int n_threads = cfg.threads > 1 ? cfg.threads : 1;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        Rng shuffle_rng(cfg.seed, 0x2000 + static_cast<std::uint64_t>(epoch));
        shuffle_rng.shuffle(order);

        double loss_sum = 0.0;
        std::uint64_t pairs = 0;
        if (n_threads == 1) {
            detail::sgns_train_range(sh, order, 0, order.size(),
                                     Rng(cfg.seed, 0x3000 + static_cast<std::uint64_t>(epoch)), &loss_sum, &pairs);
        } else {
            std::vector<std::thread> pool;
            std::vector<double> losses(n_threads, 0.0);
            std::vector<std::uint64_t> counts(n_threads, 0);
            const std::size_t chunk = (order.size() + n_threads - 1) / n_threads;
            for (int t = 0; t < n_threads; ++t) {
                std::size_t begin = std::min(order.size(), t * chunk);
                std::size_t end = std::min(order.size(), begin + chunk);
                pool.emplace_back([&, t, begin, end] {
                    detail::sgns_train_range(sh, order, begin, end,
                                             Rng(cfg.seed, 0x3000 + static_cast<std::uint64_t>(epoch) * 131 + t),
                                             &losses[t], &counts[t]);
                });
            }
            for (auto& th : pool) th.join();
            for (int t = 0; t < n_threads; ++t) {
                loss_sum += losses[t];
                pairs += counts[t];
            }
        }
        if (epoch_losses) epoch_losses->push_back(pairs > 0 ? loss_sum / static_cast<double>(pairs) : 0.0);
    }
    return input;
}

} // namespace citenet
