#include "dimkit/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "dimkit/preprocess.hpp"

namespace dimkit {

namespace {

struct EigenPairs {
    Vector values;
    Matrix vectors;
};

EigenPairs sym_eig_descending(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw Error("EigenFailure", "symmetric eigendecomposition failed");
    Vector values = solver.eigenvalues().reverse();
    Matrix vectors = solver.eigenvectors().rowwise().reverse();
    fix_eigenvector_signs(vectors);
    return {std::move(values), std::move(vectors)};
}

EigenPairs sym_eig_ascending(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw Error("EigenFailure", "symmetric eigendecomposition failed");
    Matrix vectors = solver.eigenvectors();
    fix_eigenvector_signs(vectors);
    return {solver.eigenvalues(), std::move(vectors)};
}

// Generalized symmetric problem A v = lambda B v, ascending eigenvalues,
// eigenvectors B-orthonormal. Ridge 1e-10 * trace(B)/n is added to B when
// its Cholesky factorization fails.
EigenPairs generalized_eig_ascending(const Matrix& a, Matrix b) {
    Eigen::LLT<Matrix> llt(b);
    if (llt.info() != Eigen::Success) {
        double ridge = 1e-10 * b.trace() / double(b.rows());
        if (!(ridge > 0.0)) ridge = 1e-10;
        b.diagonal().array() += ridge;
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(a, b);
    if (solver.info() != Eigen::Success)
        throw Error("EigenFailure", "generalized eigendecomposition failed");
    Matrix vectors = solver.eigenvectors();
    fix_eigenvector_signs(vectors);
    return {solver.eigenvalues(), std::move(vectors)};
}

void require_target_dim(int d, Index limit, const char* code,
                        const std::string& what) {
    if (d < 1) throw Error("DimensionTooLarge", "target dimension must be >= 1");
    if (Index(d) >= limit)
        throw Error(code, what + " requires d < " + std::to_string(limit) +
                              ", got d = " + std::to_string(d));
}

void require_connected(const NeighborGraph& graph, const std::string& method) {
    auto comps = connected_components(graph);
    if (comps.size() <= 1) return;
    std::string sizes;
    for (const auto& c : comps) {
        if (!sizes.empty()) sizes += ", ";
        sizes += std::to_string(c.size());
    }
    throw Error("DisconnectedGraph",
                method + " requires a connected neighbor graph; found " +
                    std::to_string(comps.size()) + " components of sizes [" +
                    sizes + "] — increase k or eps");
}

// Heat-kernel weight matrix over the graph edges, t = mean squared edge
// distance on the symmetrized edge list.
Matrix heat_weights(const NeighborGraph& graph) {
    double t = 0.0;
    for (const auto& e : graph.edges) t += e.weight * e.weight;
    t /= double(std::max<size_t>(graph.edges.size(), 1));
    if (!(t > 0.0)) t = 1.0;
    Matrix w = Matrix::Zero(graph.n, graph.n);
    for (const auto& e : graph.edges) {
        double v = std::exp(-e.weight * e.weight / t);
        w(e.i, e.j) = v;
        w(e.j, e.i) = v;
    }
    return w;
}

// Classical MDS core on a matrix of pairwise distances.
ReductionResult mds_from_distances(const Matrix& dist, int d, Index p,
                                   const std::string& method) {
    const Index n = dist.rows();
    Matrix b = -0.5 * dist.array().square().matrix();
    Vector row_means = b.rowwise().mean();
    double total = b.mean();
    b.colwise() -= row_means;
    b.rowwise() -= row_means.transpose();
    b.array() += total;

    auto eig = sym_eig_descending(b);
    int positive = 0;
    while (positive < int(n) && eig.values[positive] > 1e-12 * std::abs(eig.values[0]))
        ++positive;
    if (positive < d)
        throw Error("InsufficientPositiveEigenvalues",
                    method + " found only " + std::to_string(positive) +
                        " positive eigenvalues, need " + std::to_string(d));

    ReductionResult result;
    result.method = method;
    result.preprocess = PreprocessRecord::identity(p);
    result.embedding = eig.vectors.leftCols(d) *
                       eig.values.head(d).array().sqrt().matrix().asDiagonal();
    return result;
}

std::map<int, std::vector<Index>> group_by_class(const Labels& labels, Index n) {
    if (Index(labels.size()) != n)
        throw Error("DimensionMismatch", "labels length " +
                                             std::to_string(labels.size()) +
                                             " != rows " + std::to_string(n));
    std::map<int, std::vector<Index>> groups;
    for (Index i = 0; i < n; ++i) groups[labels[size_t(i)]].push_back(i);
    if (groups.size() < 2)
        throw Error("TooFewClasses", "supervised methods need >= 2 classes");
    return groups;
}

Matrix selector_projection(const std::vector<Index>& features, Index p) {
    Matrix proj = Matrix::Zero(p, Index(features.size()));
    for (Index c = 0; c < Index(features.size()); ++c)
        proj(features[size_t(c)], c) = 1.0;
    return proj;
}

}  // namespace

NeighborGraph build_neighbor_graph(const Matrix& data, const Neighborhood& nbd) {
    if (nbd.k.has_value()) return knn_graph(data, *nbd.k, nbd.symmetrization);
    if (nbd.eps.has_value()) return eps_graph(data, *nbd.eps);
    throw Error("MissingNeighborhood", "neither k nor eps was specified");
}

ReductionResult pca(const Matrix& data, int d, PreprocessKind kind) {
    require_target_dim(d, data.cols(), "DimensionTooLarge", "pca");
    auto [x, record] = preprocess(data, kind);
    auto eig = sym_eig_descending(sample_covariance(x));

    ReductionResult result;
    result.method = "pca";
    result.preprocess = record;
    result.projection = eig.vectors.leftCols(d);
    result.embedding = x * *result.projection;
    double total = eig.values.sum();
    if (total > 0.0)
        for (int j = 0; j < d; ++j)
            result.explained_variance.push_back(eig.values[j] / total);
    return result;
}

ReductionResult pca_svd(const Matrix& data, int d, PreprocessKind kind) {
    require_target_dim(d, data.cols(), "DimensionTooLarge", "pcasvd");
    auto [x, record] = preprocess(data, kind);
    Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinV);
    Matrix v = svd.matrixV().leftCols(d);
    fix_eigenvector_signs(v);

    ReductionResult result;
    result.method = "pcasvd";
    result.preprocess = record;
    result.projection = v;
    result.embedding = x * v;
    double total = svd.singularValues().array().square().sum();
    if (total > 0.0)
        for (int j = 0; j < d; ++j)
            result.explained_variance.push_back(
                svd.singularValues()[j] * svd.singularValues()[j] / total);
    return result;
}

ReductionResult classical_mds(const Matrix& data, int d) {
    validate(data);
    require_target_dim(d, data.rows(), "DimensionTooLarge", "mds");
    auto result = mds_from_distances(pairwise_distances(data), d, data.cols(), "mds");
    return result;
}

ReductionResult lda(const Matrix& data, const Labels& labels, int d) {
    validate(data);
    const Index n = data.rows(), p = data.cols();
    auto groups = group_by_class(labels, n);
    const Index c = Index(groups.size());
    if (Index(d) > c - 1)
        throw Error("TooManyDims", "lda allows at most classes-1 = " +
                                       std::to_string(c - 1) +
                                       " dimensions, got " + std::to_string(d));
    if (d < 1) throw Error("TooManyDims", "target dimension must be >= 1");

    auto [x, record] = preprocess(data, PreprocessKind::Center);
    Vector grand_mean = Vector::Zero(p);  // x is centered

    Matrix sw = Matrix::Zero(p, p), sb = Matrix::Zero(p, p);
    for (const auto& [label, rows] : groups) {
        if (rows.size() < 2)
            throw Error("TooFewClassSamples",
                        "class " + std::to_string(label) + " has < 2 samples");
        Matrix block(Index(rows.size()), p);
        for (Index r = 0; r < Index(rows.size()); ++r)
            block.row(r) = x.row(rows[size_t(r)]);
        Vector mu = block.colwise().mean();
        Matrix centered = block.rowwise() - mu.transpose();
        sw += centered.transpose() * centered;
        Vector diff = mu - grand_mean;
        sb += double(rows.size()) * diff * diff.transpose();
    }
    sw.diagonal().array() += 1e-8 * sw.trace() / double(p);
    if (!(sw.trace() > 0.0))
        throw Error("SingularWithinScatter", "within-class scatter is zero");

    auto eig = generalized_eig_ascending(sb, sw);
    Matrix top(p, d);
    for (int j = 0; j < d; ++j) top.col(j) = eig.vectors.col(p - 1 - j);

    Eigen::HouseholderQR<Matrix> qr(top);
    Matrix q = qr.householderQ() * Matrix::Identity(p, d);
    fix_eigenvector_signs(q);

    ReductionResult result;
    result.method = "lda";
    result.preprocess = record;
    result.projection = q;
    result.embedding = x * q;
    return result;
}

ReductionResult lpp(const Matrix& data, int d, const Neighborhood& nbd,
                    PreprocessKind kind) {
    require_target_dim(d, data.cols(), "DimensionTooLarge", "lpp");
    auto [x, record] = preprocess(data, kind);
    auto graph = build_neighbor_graph(x, nbd);
    require_connected(graph, "lpp");

    Matrix w = heat_weights(graph);
    Vector deg = w.rowwise().sum();
    Matrix xtlx = x.transpose() * (deg.asDiagonal() * x - w * x);
    Matrix xtdx = x.transpose() * deg.asDiagonal() * x;

    auto eig = generalized_eig_ascending(xtlx, xtdx);

    ReductionResult result;
    result.method = "lpp";
    result.preprocess = record;
    result.projection = eig.vectors.leftCols(d);
    result.embedding = x * *result.projection;
    return result;
}

ReductionResult isomap(const Matrix& data, int d, const Neighborhood& nbd) {
    validate(data);
    if (d < 1) throw Error("DimensionTooLarge", "target dimension must be >= 1");
    auto graph = build_neighbor_graph(data, nbd);
    require_connected(graph, "isomap");
    Matrix geo = floyd_warshall(graph);
    auto result = mds_from_distances(geo, d, data.cols(), "isomap");
    return result;
}

Matrix lle_weights(const Matrix& data, const Neighborhood& nbd) {
    validate(data);
    const Index n = data.rows(), p = data.cols();

    // Neighbor sets come from the directed rule (each point's own k nearest).
    Neighborhood directed = nbd;
    directed.symmetrization = Symmetrize::Asymmetric;
    auto graph = build_neighbor_graph(data, directed);
    require_connected(graph, "lle");

    std::vector<std::vector<Index>> nbrs(static_cast<size_t>(n));
    for (const auto& e : graph.edges) nbrs[size_t(e.i)].push_back(e.j);

    Matrix w = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        const auto& list = nbrs[size_t(i)];
        const Index m = Index(list.size());
        if (m == 0)
            throw Error("DisconnectedGraph",
                        "point " + std::to_string(i) + " has no neighbors");
        Matrix diff(m, p);
        for (Index r = 0; r < m; ++r)
            diff.row(r) = data.row(i) - data.row(list[size_t(r)]);
        Matrix gram = diff * diff.transpose();
        double cond_num = 0.0;
        {
            Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
            double lo = es.eigenvalues()[0], hi = es.eigenvalues()[m - 1];
            cond_num = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
        }
        if (m > p || cond_num > 1e12) {
            double ridge = 1e-3 * gram.trace() / double(m);
            if (!(ridge > 0.0))
                throw Error("SingularLocalGram",
                            "zero local Gram at point " + std::to_string(i));
            gram.diagonal().array() += ridge;
        }
        Vector weights = gram.ldlt().solve(Vector::Ones(m));
        double sum = weights.sum();
        if (!std::isfinite(sum) || sum == 0.0)
            throw Error("SingularLocalGram",
                        "weights undefined at point " + std::to_string(i));
        weights /= sum;
        for (Index r = 0; r < m; ++r) w(i, list[size_t(r)]) = weights[r];
    }
    return w;
}

ReductionResult lle(const Matrix& data, int d, const Neighborhood& nbd) {
    const Index n = data.rows(), p = data.cols();
    if (d < 1 || Index(d) >= n)
        throw Error("DimensionTooLarge", "need 1 <= d < n");

    Matrix w = lle_weights(data, nbd);
    Matrix iw = Matrix::Identity(n, n) - w;
    Matrix m = iw.transpose() * iw;
    auto eig = sym_eig_ascending(m);

    ReductionResult result;
    result.method = "lle";
    result.preprocess = PreprocessRecord::identity(p);
    result.embedding =
        eig.vectors.middleCols(1, d) * std::sqrt(double(n));
    return result;
}

ReductionResult laplacian_eigenmaps(const Matrix& data, int d,
                                    const Neighborhood& nbd) {
    validate(data);
    const Index n = data.rows();
    if (d < 1 || Index(d) >= n - 1)
        throw Error("DimensionTooLarge", "need 1 <= d < n-1");
    auto graph = build_neighbor_graph(data, nbd);
    require_connected(graph, "lapeig");

    Matrix w = heat_weights(graph);
    Vector deg = w.rowwise().sum();
    Matrix lap = Matrix(deg.asDiagonal()) - w;
    Matrix dmat = Matrix(deg.asDiagonal());

    auto eig = generalized_eig_ascending(lap, dmat);
    // eigenvector 0 is the constant null vector; embedding takes 1..d
    ReductionResult result;
    result.method = "lapeig";
    result.preprocess = PreprocessRecord::identity(data.cols());
    result.embedding = eig.vectors.middleCols(1, d);
    return result;
}

ReductionResult kernel_pca(const Matrix& data, int d, const KernelSpec& kernel) {
    validate(data);
    const Index n = data.rows();
    if (d < 1 || Index(d) >= n)
        throw Error("InsufficientPositiveEigenvalues",
                    "kernel pca allows at most n-1 components");
    Matrix gram = kernel_matrix(data, kernel);
    Matrix centered = center_kernel(gram);
    auto eig = sym_eig_descending(centered);

    int positive = 0;
    while (positive < int(n) &&
           eig.values[positive] > 1e-12 * std::abs(eig.values[0]))
        ++positive;
    if (positive < d)
        throw Error("InsufficientPositiveEigenvalues",
                    "kernel pca found only " + std::to_string(positive) +
                        " positive eigenvalues, need " + std::to_string(d));

    ReductionResult result;
    result.method = "kpca";
    result.preprocess = PreprocessRecord::identity(data.cols());
    result.embedding = eig.vectors.leftCols(d) *
                       eig.values.head(d).array().sqrt().matrix().asDiagonal();
    return result;
}

ReductionResult fisher_score(const Matrix& data, const Labels& labels, int d,
                             PreprocessKind kind) {
    validate(data);
    const Index n = data.rows(), p = data.cols();
    if (d < 1 || Index(d) > p)
        throw Error("DimensionTooLarge", "need 1 <= d <= p");
    auto groups = group_by_class(labels, n);
    auto [x, record] = preprocess(data, kind);

    Vector overall_mean = x.colwise().mean();
    Vector scores(p);
    for (Index r = 0; r < p; ++r) {
        double between = 0.0, within = 0.0;
        for (const auto& [label, rows] : groups) {
            if (rows.size() < 2)
                throw Error("DegenerateVariance",
                            "class " + std::to_string(label) + " has < 2 samples");
            double mu = 0.0;
            for (Index i : rows) mu += x(i, r);
            mu /= double(rows.size());
            double var = 0.0;
            for (Index i : rows) var += (x(i, r) - mu) * (x(i, r) - mu);
            var /= double(rows.size() - 1);
            between += double(rows.size()) * (mu - overall_mean[r]) * (mu - overall_mean[r]);
            within += double(rows.size()) * var;
        }
        if (within == 0.0 && between == 0.0)
            throw Error("DegenerateVariance",
                        "feature " + std::to_string(r) +
                            " is constant within and across classes");
        scores[r] = (within == 0.0) ? std::numeric_limits<double>::infinity()
                                    : between / within;
        if (std::isnan(scores[r]))
            throw Error("DegenerateVariance",
                        "NaN score at feature " + std::to_string(r));
    }

    std::vector<Index> order(static_cast<size_t>(p));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return scores[a] > scores[b]; });
    std::vector<Index> selected(order.begin(), order.begin() + d);

    ReductionResult result;
    result.method = "fisherscore";
    result.preprocess = record;
    result.selected_features = selected;
    result.projection = selector_projection(selected, p);
    result.embedding = x * *result.projection;
    return result;
}

ReductionResult laplacian_score(const Matrix& data, int d, const Neighborhood& nbd,
                                PreprocessKind kind) {
    validate(data);
    const Index n = data.rows(), p = data.cols();
    if (d < 1 || Index(d) > p)
        throw Error("DimensionTooLarge", "need 1 <= d <= p");
    auto [x, record] = preprocess(data, kind);
    auto graph = build_neighbor_graph(x, nbd);

    Matrix w = heat_weights(graph);
    Vector deg = w.rowwise().sum();
    double total_deg = deg.sum();
    if (!(total_deg > 0.0))
        throw Error("ZeroWeightedVariance", "graph has no edges");

    Vector scores(p);
    for (Index r = 0; r < p; ++r) {
        Vector f = x.col(r);
        Vector ftilde = f.array() - f.dot(deg) / total_deg;
        double den = ftilde.dot(deg.asDiagonal() * ftilde);
        if (den <= 1e-300)
            throw Error("ZeroWeightedVariance",
                        "feature " + std::to_string(r) +
                            " has zero weighted variance");
        double num = ftilde.dot(deg.asDiagonal() * ftilde - w * ftilde);
        scores[r] = num / den;
    }

    std::vector<Index> order(static_cast<size_t>(p));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return scores[a] < scores[b]; });
    std::vector<Index> selected(order.begin(), order.begin() + d);

    ReductionResult result;
    result.method = "lapscore";
    result.preprocess = record;
    result.selected_features = selected;
    result.projection = selector_projection(selected, p);
    result.embedding = x * *result.projection;
    return result;
}

const std::vector<MethodInfo>& method_registry() {
    static const std::vector<MethodInfo> registry = {
        // name, linear, feature_selection, supervised, needs_nbd, needs_kernel
        {"pca", true, false, false, false, false},
        {"pcasvd", true, false, false, false, false},
        {"mds", false, false, false, false, false},
        {"lda", true, false, true, false, false},
        {"lpp", true, false, false, true, false},
        {"isomap", false, false, false, true, false},
        {"lle", false, false, false, true, false},
        {"lapeig", false, false, false, true, false},
        {"kpca", false, false, false, false, true},
        {"fisherscore", true, true, true, false, false},
        {"lapscore", true, true, false, true, false},
    };
    return registry;
}

const MethodInfo& method_info(const std::string& name) {
    for (const auto& m : method_registry())
        if (m.name == name) return m;
    throw Error("UnknownMethod", "no reducer named '" + name + "'");
}

ReductionResult reduce(const Matrix& data, const ReducerConfig& config) {
    const MethodInfo& info = method_info(config.method);
    if (info.supervised && !config.labels.has_value())
        throw Error("MissingLabels", config.method + " requires labels");
    if (!info.supervised && config.labels.has_value())
        throw Error("UnexpectedLabels",
                    config.method + " is unsupervised and rejects labels");
    if (info.needs_neighborhood && !config.neighborhood.has_value())
        throw Error("MissingNeighborhood",
                    config.method + " requires --k or --eps");

    const std::string& m = config.method;
    if (m == "pca") return pca(data, config.d, config.preprocess);
    if (m == "pcasvd") return pca_svd(data, config.d, config.preprocess);
    if (m == "mds") return classical_mds(data, config.d);
    if (m == "lda") return lda(data, *config.labels, config.d);
    if (m == "lpp") return lpp(data, config.d, *config.neighborhood, config.preprocess);
    if (m == "isomap") return isomap(data, config.d, *config.neighborhood);
    if (m == "lle") return lle(data, config.d, *config.neighborhood);
    if (m == "lapeig")
        return laplacian_eigenmaps(data, config.d, *config.neighborhood);
    if (m == "kpca")
        return kernel_pca(data, config.d,
                          config.kernel.value_or(KernelSpec{}));
    if (m == "fisherscore")
        return fisher_score(data, *config.labels, config.d, config.preprocess);
    if (m == "lapscore")
        return laplacian_score(data, config.d, *config.neighborhood,
                               config.preprocess);
    throw Error("UnknownMethod", "no reducer named '" + m + "'");
}

}  // namespace dimkit
