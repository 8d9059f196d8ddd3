#include "dimkit/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dimkit/parallel.hpp"
#include "dimkit/preprocess.hpp"

namespace dimkit {

namespace {

// Sorted nonzero neighbor distances per point, at least `need` of them.
std::vector<std::vector<double>> sorted_neighbor_distances(const Matrix& data,
                                                           int need) {
    const Index n = data.rows();
    std::vector<std::vector<double>> out(static_cast<size_t>(n));
    std::vector<char> short_of_neighbors(size_t(n), 0);
    parallel_for(0, n, [&](long i) {
        std::vector<double> d;
        d.reserve(size_t(n - 1));
        for (Index j = 0; j < n; ++j) {
            if (j == Index(i)) continue;
            double dist = (data.row(i) - data.row(j)).norm();
            if (dist > 0.0) d.push_back(dist);  // duplicate pairs excluded
        }
        if (int(d.size()) < need) {
            short_of_neighbors[size_t(i)] = 1;
            return;
        }
        std::partial_sort(d.begin(), d.begin() + need, d.end());
        d.resize(size_t(need));
        out[size_t(i)] = std::move(d);
    });
    for (Index i = 0; i < n; ++i)
        if (short_of_neighbors[size_t(i)])
            throw Error("DuplicatePoints",
                        "point " + std::to_string(i) + " has fewer than " +
                            std::to_string(need) + " distinct neighbors");
    return out;
}

std::vector<double> nonzero_pairwise_distances(const Matrix& data) {
    const Index n = data.rows();
    std::vector<double> dists;
    dists.reserve(size_t(n) * size_t(n - 1) / 2);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            double d = (data.row(i) - data.row(j)).norm();
            if (d > 0.0) dists.push_back(d);
        }
    return dists;
}

}  // namespace

IdeResult est_mle(const Matrix& data, int k1, int k2) {
    validate(data);
    const Index n = data.rows();
    if (k1 < 2 || k1 > k2)
        throw Error("InvalidParameter", "need 2 <= k1 <= k2");
    if (Index(k2) > n - 1)
        throw Error("TooFewPoints", "need n > k2 = " + std::to_string(k2));

    auto nbr = sorted_neighbor_distances(data, k2);

    Vector local_sum = Vector::Zero(n);
    double global_sum = 0.0;
    const int num_k = k2 - k1 + 1;
    for (int k = k1; k <= k2; ++k) {
        double inv_sum = 0.0;
        for (Index i = 0; i < n; ++i) {
            const auto& d = nbr[size_t(i)];
            double acc = 0.0;
            for (int j = 1; j <= k - 1; ++j)
                acc += std::log(d[size_t(k - 1)] / d[size_t(j - 1)]);
            double m_hat = double(k - 1) / acc;
            local_sum[i] += m_hat;
            inv_sum += 1.0 / m_hat;
        }
        global_sum += double(n) / inv_sum;  // harmonic mean over points
    }

    IdeResult result;
    result.estdim = global_sum / double(num_k);
    result.local_estimates = local_sum / double(num_k);
    return result;
}

IdeResult est_corr_dim(const Matrix& data, int num_radii) {
    validate(data);
    const Index n = data.rows();
    if (n < 10) throw Error("TooFewPoints", "correlation dimension needs n >= 10");
    if (num_radii < 2) throw Error("InvalidParameter", "need >= 2 radii");

    auto dists = nonzero_pairwise_distances(data);
    const double total_pairs = double(n) * double(n - 1) / 2.0;
    if (dists.empty())
        throw Error("DegenerateDistances", "all pairwise distances are zero");

    std::sort(dists.begin(), dists.end());
    double lo = dists[size_t(0.05 * double(dists.size() - 1))];
    double hi = dists[size_t(0.50 * double(dists.size() - 1))];
    if (!(hi > lo))
        throw Error("DegenerateDistances",
                    "pairwise distances have no spread in the 5th-50th "
                    "percentile window");

    std::vector<double> log_r, log_c;
    for (int t = 0; t < num_radii; ++t) {
        double frac = double(t) / double(num_radii - 1);
        double r = lo * std::pow(hi / lo, frac);
        auto below = std::lower_bound(dists.begin(), dists.end(), r);
        double c = double(below - dists.begin()) / total_pairs;
        if (c > 0.0 && c < 1.0) {
            log_r.push_back(std::log(r));
            log_c.push_back(std::log(c));
        }
    }
    if (log_r.size() < 2)
        throw Error("DegenerateDistances",
                    "fewer than 2 radii with correlation sum in (0,1)");

    // OLS slope of log C against log r
    double mx = 0.0, my = 0.0;
    for (size_t t = 0; t < log_r.size(); ++t) {
        mx += log_r[t];
        my += log_c[t];
    }
    mx /= double(log_r.size());
    my /= double(log_r.size());
    double sxy = 0.0, sxx = 0.0;
    for (size_t t = 0; t < log_r.size(); ++t) {
        sxy += (log_r[t] - mx) * (log_c[t] - my);
        sxx += (log_r[t] - mx) * (log_r[t] - mx);
    }

    IdeResult result;
    result.estdim = sxy / sxx;
    return result;
}

IdeResult est_pca_dim(const Matrix& data, double variance_threshold) {
    validate(data);
    if (!(variance_threshold > 0.0) || variance_threshold > 1.0)
        throw Error("InvalidParameter", "threshold must be in (0, 1]");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sample_covariance(data));
    Vector values = solver.eigenvalues().reverse().cwiseMax(0.0);
    double total = values.sum();
    if (!(total > 0.0))
        throw Error("ZeroTotalVariance", "data is constant");

    double cum = 0.0;
    for (Index j = 0; j < values.size(); ++j) {
        cum += values[j];
        if (cum / total >= variance_threshold) {
            IdeResult result;
            result.estdim = double(j + 1);
            return result;
        }
    }
    IdeResult result;
    result.estdim = double(values.size());
    return result;
}

IdeResult est_two_nn(const Matrix& data) {
    validate(data);
    const Index n = data.rows();
    if (n < 10) throw Error("TooFewPoints", "two-nn needs n >= 10");

    double log_sum = 0.0;
    long used = 0, skipped = 0;
    for (Index i = 0; i < n; ++i) {
        double r1 = std::numeric_limits<double>::infinity();
        double r2 = std::numeric_limits<double>::infinity();
        for (Index j = 0; j < n; ++j) {
            if (j == i) continue;
            double d = (data.row(i) - data.row(j)).norm();
            if (d < r1) {
                r2 = r1;
                r1 = d;
            } else if (d < r2) {
                r2 = d;
            }
        }
        if (r1 == 0.0)
            throw Error("DuplicatePoints",
                        "point " + std::to_string(i) + " has a duplicate");
        double mu = r2 / r1;
        if (mu > 1.0) {
            log_sum += std::log(mu);
            ++used;
        } else {
            ++skipped;  // tied first/second neighbor carries no information
        }
    }
    if (used == 0 || !(log_sum > 0.0))
        throw Error("AllRatiosOne", "every two-nn ratio equals 1");

    IdeResult result;
    result.estdim = double(used - 1) / log_sum;
    return result;
}

const std::vector<EstimatorInfo>& estimator_registry() {
    static const std::vector<EstimatorInfo> registry = {
        {"mle", true},
        {"corrdim", false},
        {"pcadim", false},
        {"twonn", false},
    };
    return registry;
}

IdeResult estimate(const Matrix& data, const std::string& method) {
    if (method == "mle") return est_mle(data);
    if (method == "corrdim") return est_corr_dim(data);
    if (method == "pcadim") return est_pca_dim(data);
    if (method == "twonn") return est_two_nn(data);
    throw Error("UnknownMethod", "no estimator named '" + method + "'");
}

}  // namespace dimkit
