#pragma once

#include <string>
#include <vector>

#include "dimkit/types.hpp"

namespace dimkit {

enum class Symmetrize { Union, Intersect, Asymmetric };

Symmetrize symmetrize_from_string(const std::string& name);
std::string to_string(Symmetrize mode);

struct GraphEdge {
    Index i = 0;
    Index j = 0;
    double weight = 0.0;
};

/// Sparse weighted neighbor graph. Symmetric modes store both (i,j) and
/// (j,i); `has_zero_weight` marks duplicate input points.
struct NeighborGraph {
    Index n = 0;
    std::vector<GraphEdge> edges;
    bool directed = false;
    Symmetrize symmetrization = Symmetrize::Union;
    bool has_zero_weight = false;
};

/// k nearest neighbors per node by Euclidean distance, ties to the lower
/// index, then symmetrized per `mode`.
NeighborGraph knn_graph(const Matrix& data, int k,
                        Symmetrize mode = Symmetrize::Union);

/// Undirected edge (i,j) iff the Euclidean distance is <= eps.
NeighborGraph eps_graph(const Matrix& data, double eps);

/// All-pairs shortest paths, dense n x n output; +inf where unreachable.
Matrix floyd_warshall(const NeighborGraph& graph);

/// Maximal connected node sets, edges treated as undirected.
std::vector<std::vector<Index>> connected_components(const NeighborGraph& graph);

/// Dense pairwise Euclidean distance matrix (shared by several modules).
Matrix pairwise_distances(const Matrix& data);

}  // namespace dimkit
