#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "citenet/metrics.hpp"

namespace citenet {

struct CorrelationReport {
    double spearman_rho = 0.0;
    std::size_t n = 0;
};

struct KSReport {
    double d_statistic = 0.0;
    double p_value = 1.0;
};

struct RegressionReport {
    double slope = 0.0;
    double intercept = 0.0;
    double p_value = 1.0;
    bool significant_5pct = false;
    double standardized_beta = 0.0;
    std::size_t n = 0;
};

namespace detail {

// Regularized incomplete beta via Lentz's continued fraction.
inline double beta_cont_frac(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = 1e-15;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

inline double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                    b * std::log1p(-x);
    double bt = std::exp(log_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cont_frac(a, b, x) / a;
    return 1.0 - bt * beta_cont_frac(b, a, 1.0 - x) / b;
}

} // namespace detail

/// Two-sided p-value of a t statistic with `df` degrees of freedom.
inline double student_t_two_sided_p(double t, int df) {
    if (df < 1) throw std::invalid_argument("student_t_two_sided_p: df must be >= 1");
    if (!std::isfinite(t)) return 0.0;
    double d = static_cast<double>(df);
    return detail::incomplete_beta(d / 2.0, 0.5, d / (d + t * t));
}

/// Spearman rank correlation: Pearson correlation of average-ranked values
/// (midranks for ties).
inline CorrelationReport spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman: size mismatch");
    if (x.size() < 3) throw std::invalid_argument("spearman: need at least 3 observations");
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        double dx = rx[i] - mx, dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("spearman: constant input has zero rank variance");
    return {sxy / std::sqrt(sxx * syy), x.size()};
}

/// Two-sample Kolmogorov-Smirnov test. The D statistic is the exact maximum
/// gap between the two empirical CDFs; the p-value uses the standard
/// asymptotic series with the small-sample correction to the effective n.
inline KSReport ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    double d = 0.0;
    std::size_t ia = 0, ib = 0;
    const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
    while (ia < sa.size() && ib < sb.size()) {
        double v = std::min(sa[ia], sb[ib]);
        while (ia < sa.size() && sa[ia] == v) ++ia;
        while (ib < sb.size() && sb[ib] == v) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }

    double ne = na * nb / (na + nb);
    double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    double p = 1.0;
    if (lambda > 1e-9) {
        double sum = 0.0, term_scale = 2.0;
        double prev = 0.0;
        p = 1.0;
        for (int j = 1; j <= 200; ++j) {
            double term = term_scale * std::pow(-1.0, j - 1) * std::exp(-2.0 * j * j * lambda * lambda);
            sum += term;
            if (std::abs(term) <= 1e-12 * std::abs(sum) || std::abs(term) <= 1e-300 ||
                (j > 1 && std::abs(term) <= 0.001 * prev)) {
                p = sum;
                break;
            }
            prev = std::abs(term);
            p = sum;
        }
    }
    p = std::min(1.0, std::max(p, 0.0));
    if (p <= 0.0) p = 1e-300; // KS p-value is in (0, 1]
    return {d, p};
}

/// Ordinary least squares of y on x with a two-sided t-test on the slope.
inline RegressionReport linear_regression(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("linear_regression: size mismatch");
    if (x.size() < 3) throw std::invalid_argument("linear_regression: need at least 3 points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("linear_regression: x is constant");

    RegressionReport r;
    r.n = x.size();
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss_res = std::max(0.0, syy - r.slope * sxy);
    int df = static_cast<int>(x.size()) - 2;

    if (ss_res <= 1e-14 * syy || syy == 0.0) {
        // (numerically) perfect fit: the t statistic degenerates
        r.p_value = r.slope == 0.0 ? 1.0 : 0.0;
    } else {
        double se = std::sqrt(ss_res / df / sxx);
        r.p_value = student_t_two_sided_p(r.slope / se, df);
    }
    r.significant_5pct = r.p_value < 0.05;
    if (syy > 0.0) r.standardized_beta = r.slope * std::sqrt(sxx / syy);
    return r;
}

} // namespace citenet
