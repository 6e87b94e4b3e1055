#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "citenet/features.hpp"
#include "citenet/metrics.hpp"
#include "citenet/util.hpp"

namespace citenet {

struct MLPConfig {
    int hidden = 128;
    double learning_rate = 1e-2;
    double momentum = 0.9;
    int batch_size = 256;
    int max_epochs = 200;
    int patience = 10; // epochs without validation-AUC improvement before stopping
    std::uint64_t seed = 0;
};

/// One-hidden-layer perceptron for edge classification:
/// input -> ReLU(hidden) -> sigmoid scalar.
class MLPModel {
public:
    MLPModel() = default;

    MLPModel(int input_dim, int hidden) : in_(input_dim), hidden_(hidden) {
        if (input_dim < 1 || hidden < 1) throw std::invalid_argument("MLPModel: bad layer sizes");
        w1_.assign(static_cast<std::size_t>(hidden) * input_dim, 0.0);
        b1_.assign(hidden, 0.0);
        w2_.assign(hidden, 0.0);
        b2_ = 0.0;
    }

    void init_weights(Rng& rng) {
        double limit1 = std::sqrt(6.0 / (in_ + hidden_));
        for (double& w : w1_) w = rng.real(-limit1, limit1);
        double limit2 = std::sqrt(6.0 / (hidden_ + 1));
        for (double& w : w2_) w = rng.real(-limit2, limit2);
    }

    int input_dim() const { return in_; }
    int hidden_dim() const { return hidden_; }

    std::vector<double>& w1() { return w1_; }
    std::vector<double>& b1() { return b1_; }
    std::vector<double>& w2() { return w2_; }
    double& b2() { return b2_; }
    const std::vector<double>& w1() const { return w1_; }
    const std::vector<double>& b1() const { return b1_; }
    const std::vector<double>& w2() const { return w2_; }
    double b2() const { return b2_; }

    /// Pre-sigmoid output; `hidden_out`, when given, receives the ReLU
    /// activations for reuse in backprop.
    double logit(std::span<const double> x, std::vector<double>* hidden_out = nullptr) const {
        if (static_cast<int>(x.size()) != in_) throw std::invalid_argument("MLPModel: feature length mismatch");
        double z = b2_;
        if (hidden_out) hidden_out->resize(hidden_);
        for (int h = 0; h < hidden_; ++h) {
            const double* row = w1_.data() + static_cast<std::size_t>(h) * in_;
            double a = b1_[h];
            for (int i = 0; i < in_; ++i) a += row[i] * x[i];
            double act = a > 0 ? a : 0.0;
            if (hidden_out) (*hidden_out)[h] = act;
            z += w2_[h] * act;
        }
        return z;
    }

    double forward(std::span<const double> x) const { return 1.0 / (1.0 + std::exp(-logit(x))); }

    /// Deterministic batch forward pass; scores lie in (0,1).
    std::vector<double> predict(const EdgeFeatures& feats) const {
        if (feats.dim != in_) throw std::invalid_argument("predict: feature dimension mismatch");
        std::vector<double> scores(feats.count());
        for (std::size_t i = 0; i < feats.count(); ++i) scores[i] = forward(feats.row(i));
        return scores;
    }

private:
    int in_ = 0;
    int hidden_ = 0;
    std::vector<double> w1_; // hidden x in, row-major
    std::vector<double> b1_; // hidden
    std::vector<double> w2_; // hidden
    double b2_ = 0.0;
};

struct MLPGradients {
    std::vector<double> w1, b1, w2;
    double b2 = 0.0;
};

namespace detail {

// Numerically stable binary cross-entropy from the logit.
inline double bce_from_logit(double z, int label) {
    double a = z > 0 ? z : 0.0;
    return a - z * static_cast<double>(label) + std::log1p(std::exp(-std::abs(z)));
}

} // namespace detail

/// Mean binary-cross-entropy over a labeled batch.
inline double mlp_batch_loss(const MLPModel& m, const EdgeFeatures& batch) {
    if (batch.count() == 0) throw std::invalid_argument("mlp_batch_loss: empty batch");
    double total = 0.0;
    for (std::size_t i = 0; i < batch.count(); ++i)
        total += detail::bce_from_logit(m.logit(batch.row(i)), batch.labels[i]);
    return total / static_cast<double>(batch.count());
}

/// Analytic gradients of mlp_batch_loss with respect to every parameter.
inline MLPGradients mlp_batch_gradients(const MLPModel& m, const EdgeFeatures& batch) {
    if (batch.count() == 0) throw std::invalid_argument("mlp_batch_gradients: empty batch");
    const int in = m.input_dim(), hidden = m.hidden_dim();
    MLPGradients g;
    g.w1.assign(static_cast<std::size_t>(hidden) * in, 0.0);
    g.b1.assign(hidden, 0.0);
    g.w2.assign(hidden, 0.0);
    g.b2 = 0.0;

    std::vector<double> act;
    const double inv_n = 1.0 / static_cast<double>(batch.count());
    for (std::size_t s = 0; s < batch.count(); ++s) {
        auto x = batch.row(s);
        double z = m.logit(x, &act);
        double dz = (1.0 / (1.0 + std::exp(-z)) - static_cast<double>(batch.labels[s])) * inv_n;
        g.b2 += dz;
        for (int h = 0; h < hidden; ++h) {
            g.w2[h] += dz * act[h];
            if (act[h] > 0) {
                double dpre = dz * m.w2()[h];
                g.b1[h] += dpre;
                double* grow = g.w1.data() + static_cast<std::size_t>(h) * in;
                for (int i = 0; i < in; ++i) grow[i] += dpre * x[i];
            }
        }
    }
    return g;
}

struct TrainedClassifier {
    MLPModel model;       // snapshot with the best validation AUC
    double best_val_auc = 0.0;
    int epochs_run = 0;
};

/// Minibatch SGD with momentum on binary cross-entropy. After every epoch the
/// validation AUC is measured and the best-scoring snapshot retained; training
/// stops early after `patience` epochs without improvement. The untrained
/// model is scored too, so max_epochs = 0 returns the initialization.
inline TrainedClassifier train_classifier(const EdgeFeatures& train, const EdgeFeatures& val,
                                          const MLPConfig& cfg = {}) {
    auto has_both_classes = [](const EdgeFeatures& f) {
        bool pos = false, neg = false;
        for (int l : f.labels) (l > 0 ? pos : neg) = true;
        return pos && neg;
    };
    if (train.count() == 0 || !has_both_classes(train))
        throw std::invalid_argument("train_classifier: training set must contain both classes");
    if (val.count() == 0 || !has_both_classes(val))
        throw std::invalid_argument("train_classifier: validation set must contain both classes");
    if (cfg.batch_size < 1 || cfg.max_epochs < 0 || cfg.patience < 0)
        throw std::invalid_argument("train_classifier: bad config");

    Rng rng(cfg.seed, /*stream=*/0x317);
    MLPModel model(train.dim, cfg.hidden);
    model.init_weights(rng);

    auto val_auc = [&](const MLPModel& m) {
        auto scores = m.predict(val);
        return compute_auc(scores, val.labels);
    };

    TrainedClassifier best{model, val_auc(model), 0};

    const int in = train.dim, hidden = cfg.hidden;
    std::vector<double> vel_w1(static_cast<std::size_t>(hidden) * in, 0.0), vel_b1(hidden, 0.0),
        vel_w2(hidden, 0.0);
    double vel_b2 = 0.0;

    std::vector<std::uint32_t> order(train.count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);

    std::vector<double> act;
    int epochs_since_best = 0;
    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            std::size_t stop = std::min(order.size(), start + cfg.batch_size);
            const double inv_n = 1.0 / static_cast<double>(stop - start);

            MLPGradients g;
            g.w1.assign(static_cast<std::size_t>(hidden) * in, 0.0);
            g.b1.assign(hidden, 0.0);
            g.w2.assign(hidden, 0.0);

            for (std::size_t k = start; k < stop; ++k) {
                auto x = train.row(order[k]);
                double z = model.logit(x, &act);
                double dz = (1.0 / (1.0 + std::exp(-z)) - static_cast<double>(train.labels[order[k]])) * inv_n;
                g.b2 += dz;
                for (int h = 0; h < hidden; ++h) {
                    g.w2[h] += dz * act[h];
                    if (act[h] > 0) {
                        double dpre = dz * model.w2()[h];
                        g.b1[h] += dpre;
                        double* grow = g.w1.data() + static_cast<std::size_t>(h) * in;
                        for (int i = 0; i < in; ++i) grow[i] += dpre * x[i];
                    }
                }
            }

            for (std::size_t i = 0; i < g.w1.size(); ++i) {
                vel_w1[i] = cfg.momentum * vel_w1[i] - cfg.learning_rate * g.w1[i];
                model.w1()[i] += vel_w1[i];
            }
            for (int h = 0; h < hidden; ++h) {
                vel_b1[h] = cfg.momentum * vel_b1[h] - cfg.learning_rate * g.b1[h];
                model.b1()[h] += vel_b1[h];
                vel_w2[h] = cfg.momentum * vel_w2[h] - cfg.learning_rate * g.w2[h];
                model.w2()[h] += vel_w2[h];
            }
            vel_b2 = cfg.momentum * vel_b2 - cfg.learning_rate * g.b2;
            model.b2() += vel_b2;
        }

        double auc = val_auc(model);
        if (auc > best.best_val_auc) {
            best.model = model;
            best.best_val_auc = auc;
            epochs_since_best = 0;
        } else {
            ++epochs_since_best;
        }
        best.epochs_run = epoch + 1;
        if (epochs_since_best >= cfg.patience && cfg.patience > 0) break;
    }
    return best;
}

} // namespace citenet
