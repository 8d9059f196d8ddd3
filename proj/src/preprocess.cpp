#include "dimkit/preprocess.hpp"

#include <cmath>

namespace dimkit {

Vector column_means(const Matrix& data) {
    return data.colwise().mean();
}

Matrix sample_covariance(const Matrix& data) {
    Matrix centered = data.rowwise() - data.colwise().mean();
    return centered.transpose() * centered / double(data.rows() - 1);
}

void fix_eigenvector_signs(Matrix& vectors) {
    for (Index j = 0; j < vectors.cols(); ++j) {
        Index imax = 0;
        double best = -1.0;
        for (Index i = 0; i < vectors.rows(); ++i) {
            double a = std::abs(vectors(i, j));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        if (vectors(imax, j) < 0) vectors.col(j) = -vectors.col(j);
    }
}

namespace {

Vector column_stddevs(const Matrix& data) {
    Matrix centered = data.rowwise() - data.colwise().mean();
    Vector var = centered.array().square().colwise().sum() / double(data.rows() - 1);
    return var.array().sqrt();
}

void require_nonzero(const Vector& scales) {
    for (Index j = 0; j < scales.size(); ++j)
        if (scales[j] <= 0.0)
            throw Error("ZeroVariance",
                        "column " + std::to_string(j) + " is constant");
}

// Eigendecomposition of the sample covariance, descending eigenvalues with
// the sign convention applied. Throws RankDeficient below the 1e-12 ratio.
std::pair<Vector, Matrix> covariance_eigen(const Matrix& data) {
    Matrix cov = sample_covariance(data);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
    if (solver.info() != Eigen::Success)
        throw Error("RankDeficient", "covariance eigendecomposition failed");
    Vector values = solver.eigenvalues().reverse();
    Matrix vectors = solver.eigenvectors().rowwise().reverse();
    if (values[values.size() - 1] < 1e-12 * values[0])
        throw Error("RankDeficient",
                    "covariance numerically rank deficient (eigenvalue ratio " +
                        std::to_string(values[values.size() - 1] /
                                       std::max(values[0], 1e-300)) +
                        ")");
    fix_eigenvector_signs(vectors);
    return {values, vectors};
}

}  // namespace

std::pair<Matrix, PreprocessRecord> preprocess(const Matrix& data,
                                               PreprocessKind kind) {
    validate(data);
    const Index p = data.cols();
    PreprocessRecord record = PreprocessRecord::identity(p);
    record.kind = kind;

    switch (kind) {
        case PreprocessKind::None:
            break;
        case PreprocessKind::Center:
            record.column_means = column_means(data);
            break;
        case PreprocessKind::Scale: {
            Vector sd = column_stddevs(data);
            require_nonzero(sd);
            record.column_scales = sd;
            break;
        }
        case PreprocessKind::CScale: {
            Vector sd = column_stddevs(data);
            require_nonzero(sd);
            record.column_means = column_means(data);
            record.column_scales = sd;
            break;
        }
        case PreprocessKind::Decorrelate: {
            auto [values, vectors] = covariance_eigen(data);
            record.column_means = column_means(data);
            record.rotation = vectors;
            break;
        }
        case PreprocessKind::Whiten: {
            auto [values, vectors] = covariance_eigen(data);
            record.column_means = column_means(data);
            record.rotation = vectors;
            record.column_scales = values.array().sqrt();
            break;
        }
    }
    return {record.apply(data), record};
}

}  // namespace dimkit
