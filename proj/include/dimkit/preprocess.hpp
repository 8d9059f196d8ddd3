#pragma once

#include <utility>

#include "dimkit/types.hpp"

namespace dimkit {

/// Transforms `data` per `kind` and returns the transformed matrix together
/// with a PreprocessRecord that reproduces the transform on new data.
///
/// Sample statistics use the n-1 denominator. Covariance eigenvectors are
/// sorted by descending eigenvalue and sign-fixed so the largest-magnitude
/// entry of each vector is positive (ties to the lowest index).
std::pair<Matrix, PreprocessRecord> preprocess(const Matrix& data,
                                               PreprocessKind kind);

/// Column means / sample covariance of a data matrix (rows = observations).
Vector column_means(const Matrix& data);
Matrix sample_covariance(const Matrix& data);

/// Flips each column of `vectors` so its largest-magnitude entry is positive.
void fix_eigenvector_signs(Matrix& vectors);

}  // namespace dimkit
