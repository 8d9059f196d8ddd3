#pragma once

#include <string>
#include <vector>

#include "dimkit/types.hpp"

namespace dimkit {

/// Levina-Bickel maximum-likelihood estimator over neighborhood sizes
/// k1..k2. Bottom-up: fills local_estimates (arithmetic mean across k);
/// the global estimate is the harmonic aggregate averaged across k.
IdeResult est_mle(const Matrix& data, int k1 = 6, int k2 = 12);

/// Grassberger-Procaccia correlation dimension: least-squares slope of
/// log C(r) vs log r over log-spaced radii between the 5th and 50th
/// percentile of the nonzero pairwise distances.
IdeResult est_corr_dim(const Matrix& data, int num_radii = 20);

/// Smallest d whose cumulative explained covariance variance reaches the
/// threshold.
IdeResult est_pca_dim(const Matrix& data, double variance_threshold = 0.95);

/// Two-nearest-neighbor ratio estimator (maximum-likelihood form).
IdeResult est_two_nn(const Matrix& data);

struct EstimatorInfo {
    std::string name;
    bool bottom_up = false;  // produces local estimates
};

const std::vector<EstimatorInfo>& estimator_registry();

/// Dispatch by name: mle | corrdim | pcadim | twonn (default parameters).
IdeResult estimate(const Matrix& data, const std::string& method);

}  // namespace dimkit
