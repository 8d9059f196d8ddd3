#include "dimkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "dimkit/parallel.hpp"

namespace dimkit {

Symmetrize symmetrize_from_string(const std::string& name) {
    if (name == "union") return Symmetrize::Union;
    if (name == "intersect") return Symmetrize::Intersect;
    if (name == "asymmetric") return Symmetrize::Asymmetric;
    throw Error("UnknownSymmetrization",
                "no symmetrization mode named '" + name + "'");
}

std::string to_string(Symmetrize mode) {
    switch (mode) {
        case Symmetrize::Union: return "union";
        case Symmetrize::Intersect: return "intersect";
        case Symmetrize::Asymmetric: return "asymmetric";
    }
    return "union";
}

Matrix pairwise_distances(const Matrix& data) {
    const Index n = data.rows();
    Matrix dist(n, n);
    parallel_for(0, n, [&](long i) {
        dist(i, i) = 0.0;
        for (Index j = 0; j < n; ++j) {
            if (j == Index(i)) continue;
            dist(i, j) = (data.row(i) - data.row(j)).norm();
        }
    });
    return dist;
}

NeighborGraph knn_graph(const Matrix& data, int k, Symmetrize mode) {
    validate(data);
    const Index n = data.rows();
    if (k < 1 || k >= n)
        throw Error("KTooLarge", "k = " + std::to_string(k) +
                                     " out of range for n = " + std::to_string(n));

    // Per-node neighbor lists, ties broken by lower index.
    std::vector<std::vector<std::pair<Index, double>>> nbrs(static_cast<size_t>(n));
    parallel_for(0, n, [&](long i) {
        std::vector<std::pair<double, Index>> cand;
        cand.reserve(size_t(n - 1));
        for (Index j = 0; j < n; ++j) {
            if (j == Index(i)) continue;
            cand.emplace_back((data.row(i) - data.row(j)).norm(), j);
        }
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        auto& out = nbrs[size_t(i)];
        out.reserve(size_t(k));
        for (int t = 0; t < k; ++t) out.emplace_back(cand[size_t(t)].second, cand[size_t(t)].first);
    });

    NeighborGraph g;
    g.n = n;
    g.symmetrization = mode;
    g.directed = (mode == Symmetrize::Asymmetric);

    std::vector<std::vector<char>> directed(size_t(n), std::vector<char>(size_t(n), 0));
    for (Index i = 0; i < n; ++i)
        for (auto& [j, w] : nbrs[size_t(i)]) directed[size_t(i)][size_t(j)] = 1;

    auto push = [&](Index i, Index j, double w) {
        g.edges.push_back({i, j, w});
        if (w == 0.0) g.has_zero_weight = true;
    };

    if (mode == Symmetrize::Asymmetric) {
        for (Index i = 0; i < n; ++i)
            for (auto& [j, w] : nbrs[size_t(i)]) push(i, j, w);
    } else {
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) {
                bool ij = directed[size_t(i)][size_t(j)];
                bool ji = directed[size_t(j)][size_t(i)];
                bool keep = (mode == Symmetrize::Union) ? (ij || ji) : (ij && ji);
                if (!keep) continue;
                double w = (data.row(i) - data.row(j)).norm();
                push(i, j, w);
                push(j, i, w);
            }
    }
    return g;
}

NeighborGraph eps_graph(const Matrix& data, double eps) {
    validate(data);
    if (!(eps > 0.0))
        throw Error("NonPositiveRadius", "eps must be > 0, got " + std::to_string(eps));
    const Index n = data.rows();
    NeighborGraph g;
    g.n = n;
    g.symmetrization = Symmetrize::Union;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            double w = (data.row(i) - data.row(j)).norm();
            if (w <= eps) {
                g.edges.push_back({i, j, w});
                g.edges.push_back({j, i, w});
                if (w == 0.0) g.has_zero_weight = true;
            }
        }
    return g;
}

Matrix floyd_warshall(const NeighborGraph& graph) {
    const Index n = graph.n;
    const double inf = std::numeric_limits<double>::infinity();
    Matrix dist = Matrix::Constant(n, n, inf);
    for (Index i = 0; i < n; ++i) dist(i, i) = 0.0;
    for (const auto& e : graph.edges) {
        if (e.weight < 0.0)
            throw Error("NegativeWeight", "edge (" + std::to_string(e.i) + "," +
                                              std::to_string(e.j) +
                                              ") has negative weight");
        dist(e.i, e.j) = std::min(dist(e.i, e.j), e.weight);
    }
    const int threads = num_threads();
    for (Index k = 0; k < n; ++k) {
        // rows are independent for a fixed pivot
        parallel_for(0, n, [&](long i) {
            const double dik = dist(i, k);
            if (dik == inf) return;
            for (Index j = 0; j < n; ++j) {
                double via = dik + dist(k, j);
                if (via < dist(i, j)) dist(i, j) = via;
            }
        }, threads);
    }
    return dist;
}

std::vector<std::vector<Index>> connected_components(const NeighborGraph& graph) {
    const Index n = graph.n;
    std::vector<Index> parent(static_cast<size_t>(n), 0);
    std::iota(parent.begin(), parent.end(), Index(0));
    std::function<Index(Index)> find = [&](Index x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    for (const auto& e : graph.edges) {
        Index a = find(e.i), b = find(e.j);
        if (a != b) parent[size_t(std::max(a, b))] = std::min(a, b);
    }
    std::vector<std::vector<Index>> comps;
    std::vector<Index> slot(size_t(n), -1);
    for (Index i = 0; i < n; ++i) {
        Index root = find(i);
        if (slot[size_t(root)] < 0) {
            slot[size_t(root)] = Index(comps.size());
            comps.emplace_back();
        }
        comps[size_t(slot[size_t(root)])].push_back(i);
    }
    return comps;
}

}  // namespace dimkit
