#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimkit/types.hpp"

namespace dimkit {

struct GroundTruth {
    Matrix latent;      // n x (intrinsic dim), latent coordinates
    int intrinsic_dim;  // dimension of the generating manifold
};

struct Sample {
    Matrix data;
    GroundTruth truth;
};

/// Model names accepted by generate().
const std::vector<std::string>& model_names();

/// Draws n points from the named parametric model, adds isotropic Gaussian
/// noise of standard deviation `noise` in ambient space. Deterministic in
/// (model, n, noise, seed). `gaussmix_dim` sets the ambient dimension of the
/// gaussmix model only.
Sample generate(const std::string& model, int n, double noise,
                std::uint64_t seed, int gaussmix_dim = 3);

/// Rank-r data in R^p: n rows z * A with z standard normal in R^r and A a
/// fixed seeded r x p matrix with orthonormal rows. The lowrank model and the
/// benchmark both draw from this.
Sample low_rank_data(int n, int p, int r, double noise, std::uint64_t seed);

}  // namespace dimkit
