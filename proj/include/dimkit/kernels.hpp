#pragma once

#include <string>

#include "dimkit/types.hpp"

namespace dimkit {

enum class KernelKind {
    Linear,
    Polynomial,
    Gaussian,
    Laplacian,
    Sigmoid,
    Cosine,
    Cauchy,
    InverseMultiquadric,
    ChiSquare,
    HistogramIntersection,
};

KernelKind kernel_kind_from_string(const std::string& name);
std::string to_string(KernelKind kind);

/// True for the kinds whose Gram matrix is positive (semi)definite.
bool kernel_is_pd(KernelKind kind);

struct KernelSpec {
    KernelKind kind = KernelKind::Gaussian;
    // bandwidth sigma for gaussian/laplacian/cauchy; <= 0 means "use the
    // median heuristic" (median of nonzero pairwise distances)
    double bandwidth = -1.0;
    int degree = 2;        // polynomial
    double coef0 = 1.0;    // polynomial c0
    double slope = 1.0;    // sigmoid a
    double offset = 0.0;   // sigmoid b
    double shift = 1.0;    // inverse-multiquadric c
};

/// Gram matrix gram[i][j] = kernel(x_i, x_j); each unordered pair is
/// evaluated once so the output is exactly symmetric.
Matrix kernel_matrix(const Matrix& data, const KernelSpec& spec);

/// Double-centering K' = J K J with J = I - 11^T/n; row/column sums ~ 0.
Matrix center_kernel(const Matrix& gram);

/// Median of the nonzero pairwise Euclidean distances.
double median_pairwise_distance(const Matrix& data);

}  // namespace dimkit
