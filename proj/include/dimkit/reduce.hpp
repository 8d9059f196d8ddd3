#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimkit/graph.hpp"
#include "dimkit/kernels.hpp"
#include "dimkit/types.hpp"

namespace dimkit {

/// Neighborhood rule for the graph-based methods: exactly one of k / eps.
struct Neighborhood {
    std::optional<int> k;
    std::optional<double> eps;
    Symmetrize symmetrization = Symmetrize::Union;
};

struct ReducerConfig {
    std::string method;
    int d = 2;
    PreprocessKind preprocess = PreprocessKind::Center;
    std::optional<Neighborhood> neighborhood;
    std::optional<KernelSpec> kernel;
    std::optional<Labels> labels;
};

struct MethodInfo {
    std::string name;
    bool linear = false;             // emits a projection matrix
    bool feature_selection = false;  // emits selected feature indices
    bool supervised = false;         // requires labels
    bool needs_neighborhood = false;
    bool needs_kernel = false;
};

const std::vector<MethodInfo>& method_registry();
const MethodInfo& method_info(const std::string& name);

/// Dispatches on config.method; validates config against the registry
/// (labels/neighborhood requirements) before running.
ReductionResult reduce(const Matrix& data, const ReducerConfig& config);

ReductionResult pca(const Matrix& data, int d,
                    PreprocessKind preprocess = PreprocessKind::Center);
ReductionResult pca_svd(const Matrix& data, int d,
                        PreprocessKind preprocess = PreprocessKind::Center);
ReductionResult classical_mds(const Matrix& data, int d);
ReductionResult lda(const Matrix& data, const Labels& labels, int d);
ReductionResult lpp(const Matrix& data, int d, const Neighborhood& nbd,
                    PreprocessKind preprocess = PreprocessKind::Center);
ReductionResult isomap(const Matrix& data, int d, const Neighborhood& nbd);
ReductionResult lle(const Matrix& data, int d, const Neighborhood& nbd);
ReductionResult laplacian_eigenmaps(const Matrix& data, int d,
                                    const Neighborhood& nbd);
ReductionResult kernel_pca(const Matrix& data, int d, const KernelSpec& kernel);
ReductionResult fisher_score(const Matrix& data, const Labels& labels, int d,
                             PreprocessKind preprocess = PreprocessKind::Center);
ReductionResult laplacian_score(const Matrix& data, int d, const Neighborhood& nbd,
                                PreprocessKind preprocess = PreprocessKind::Center);

/// Dense n x n LLE reconstruction-weight matrix; each row sums to 1 over the
/// point's own k nearest neighbors and is zero elsewhere.
Matrix lle_weights(const Matrix& data, const Neighborhood& nbd);

/// Builds a graph from the neighborhood rule (k takes precedence over eps).
NeighborGraph build_neighbor_graph(const Matrix& data, const Neighborhood& nbd);

}  // namespace dimkit
