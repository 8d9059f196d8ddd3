#include "dimkit/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "dimkit/parallel.hpp"

namespace dimkit {

KernelKind kernel_kind_from_string(const std::string& name) {
    if (name == "linear") return KernelKind::Linear;
    if (name == "polynomial") return KernelKind::Polynomial;
    if (name == "gaussian") return KernelKind::Gaussian;
    if (name == "laplacian") return KernelKind::Laplacian;
    if (name == "sigmoid") return KernelKind::Sigmoid;
    if (name == "cosine") return KernelKind::Cosine;
    if (name == "cauchy") return KernelKind::Cauchy;
    if (name == "inverse-multiquadric") return KernelKind::InverseMultiquadric;
    if (name == "chi-square") return KernelKind::ChiSquare;
    if (name == "histogram-intersection") return KernelKind::HistogramIntersection;
    throw Error("UnknownKernel", "no kernel named '" + name + "'");
}

std::string to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::Linear: return "linear";
        case KernelKind::Polynomial: return "polynomial";
        case KernelKind::Gaussian: return "gaussian";
        case KernelKind::Laplacian: return "laplacian";
        case KernelKind::Sigmoid: return "sigmoid";
        case KernelKind::Cosine: return "cosine";
        case KernelKind::Cauchy: return "cauchy";
        case KernelKind::InverseMultiquadric: return "inverse-multiquadric";
        case KernelKind::ChiSquare: return "chi-square";
        case KernelKind::HistogramIntersection: return "histogram-intersection";
    }
    return "gaussian";
}

bool kernel_is_pd(KernelKind kind) {
    switch (kind) {
        case KernelKind::Linear:
        case KernelKind::Polynomial:
        case KernelKind::Gaussian:
        case KernelKind::Laplacian:
        case KernelKind::Cosine:
        case KernelKind::Cauchy:
        case KernelKind::InverseMultiquadric:
            return true;
        default:
            return false;
    }
}

double median_pairwise_distance(const Matrix& data) {
    const Index n = data.rows();
    std::vector<double> dists;
    dists.reserve(size_t(n) * size_t(n - 1) / 2);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            double d = (data.row(i) - data.row(j)).norm();
            if (d > 0.0) dists.push_back(d);
        }
    if (dists.empty())
        throw Error("DegenerateDistances", "all pairwise distances are zero");
    size_t mid = dists.size() / 2;
    std::nth_element(dists.begin(), dists.begin() + long(mid), dists.end());
    return dists[mid];
}

namespace {

bool needs_bandwidth(KernelKind kind) {
    return kind == KernelKind::Gaussian || kind == KernelKind::Laplacian ||
           kind == KernelKind::Cauchy;
}

double eval(KernelKind kind, const KernelSpec& s, const Eigen::RowVectorXd& x,
            const Eigen::RowVectorXd& y) {
    switch (kind) {
        case KernelKind::Linear:
            return x.dot(y);
        case KernelKind::Polynomial:
            return std::pow(x.dot(y) + s.coef0, s.degree);
        case KernelKind::Gaussian: {
            double d2 = (x - y).squaredNorm();
            return std::exp(-d2 / (2.0 * s.bandwidth * s.bandwidth));
        }
        case KernelKind::Laplacian:
            return std::exp(-(x - y).lpNorm<1>() / s.bandwidth);
        case KernelKind::Sigmoid:
            return std::tanh(s.slope * x.dot(y) + s.offset);
        case KernelKind::Cosine: {
            double nx = x.norm(), ny = y.norm();
            if (nx == 0.0 || ny == 0.0)
                throw Error("ZeroVector", "cosine kernel on an all-zero row");
            return x.dot(y) / (nx * ny);
        }
        case KernelKind::Cauchy: {
            double d2 = (x - y).squaredNorm();
            return 1.0 / (1.0 + d2 / (s.bandwidth * s.bandwidth));
        }
        case KernelKind::InverseMultiquadric:
            return 1.0 / std::sqrt((x - y).squaredNorm() + s.shift * s.shift);
        case KernelKind::ChiSquare: {
            double acc = 0.0;
            for (Index t = 0; t < x.size(); ++t) {
                double denom = x[t] + y[t];
                if (denom > 0.0) acc += 2.0 * x[t] * y[t] / denom;
            }
            return acc;
        }
        case KernelKind::HistogramIntersection: {
            double acc = 0.0;
            for (Index t = 0; t < x.size(); ++t) acc += std::min(x[t], y[t]);
            return acc;
        }
    }
    return 0.0;
}

}  // namespace

Matrix kernel_matrix(const Matrix& data, const KernelSpec& spec) {
    validate(data);
    KernelSpec s = spec;
    if (needs_bandwidth(s.kind) && s.bandwidth <= 0.0)
        s.bandwidth = median_pairwise_distance(data);
    if (needs_bandwidth(s.kind) && !(s.bandwidth > 0.0))
        throw Error("InvalidParameter", "bandwidth must be positive");
    if (s.kind == KernelKind::Polynomial && s.degree < 1)
        throw Error("InvalidParameter", "polynomial degree must be >= 1");
    if (s.kind == KernelKind::InverseMultiquadric && !(s.shift > 0.0))
        throw Error("InvalidParameter", "inverse-multiquadric shift must be > 0");
    if (s.kind == KernelKind::ChiSquare ||
        s.kind == KernelKind::HistogramIntersection) {
        if ((data.array() < 0.0).any())
            throw Error("NegativeEntries",
                        to_string(s.kind) + " kernel requires nonnegative data");
    }
    if (s.kind == KernelKind::Cosine) {
        // checked up front; eval() runs on worker threads
        for (Index i = 0; i < data.rows(); ++i)
            if (data.row(i).norm() == 0.0)
                throw Error("ZeroVector", "cosine kernel on all-zero row " +
                                              std::to_string(i));
    }

    const Index n = data.rows();
    Matrix gram(n, n);
    parallel_for(0, n, [&](long i) {
        for (Index j = Index(i); j < n; ++j)
            gram(i, j) = eval(s.kind, s, data.row(i), data.row(j));
    });
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < i; ++j) gram(i, j) = gram(j, i);
    return gram;
}

Matrix center_kernel(const Matrix& gram) {
    const Index n = gram.rows();
    Vector row_means = gram.rowwise().mean();
    double total_mean = gram.mean();
    Matrix out = gram;
    out.colwise() -= row_means;
    out.rowwise() -= row_means.transpose();
    out.array() += total_mean;
    return out;
}

}  // namespace dimkit
