// pybind11 bindings for the main dimkit operations.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimkit/bench.hpp"
#include "dimkit/estimate.hpp"
#include "dimkit/generate.hpp"
#include "dimkit/kernels.hpp"
#include "dimkit/preprocess.hpp"
#include "dimkit/reduce.hpp"

namespace py = pybind11;
using namespace dimkit;

namespace {

ReducerConfig make_config(const std::string& method, int d,
                          const std::string& preprocess_kind,
                          std::optional<int> k, std::optional<double> eps,
                          const std::string& sym, const std::string& kernel,
                          double bandwidth, std::optional<Labels> labels) {
    ReducerConfig config;
    config.method = method;
    config.d = d;
    config.preprocess = preprocess_kind_from_string(preprocess_kind);
    if (k || eps) {
        Neighborhood nbd;
        nbd.k = k;
        nbd.eps = eps;
        nbd.symmetrization = symmetrize_from_string(sym);
        config.neighborhood = nbd;
    }
    if (!kernel.empty()) {
        KernelSpec spec;
        spec.kind = kernel_kind_from_string(kernel);
        spec.bandwidth = bandwidth;
        config.kernel = spec;
    }
    config.labels = std::move(labels);
    return config;
}

}  // namespace

PYBIND11_MODULE(_dimkit, m) {
    m.doc() = "dimension reduction and intrinsic dimension estimation";

    py::register_exception<Error>(m, "DimkitError");

    py::class_<PreprocessRecord>(m, "PreprocessRecord")
        .def_property_readonly(
            "kind", [](const PreprocessRecord& r) { return to_string(r.kind); })
        .def_readonly("column_means", &PreprocessRecord::column_means)
        .def_readonly("column_scales", &PreprocessRecord::column_scales)
        .def_readonly("rotation", &PreprocessRecord::rotation)
        .def("apply", &PreprocessRecord::apply, py::arg("data"));

    py::class_<ReductionResult>(m, "ReductionResult")
        .def_readonly("embedding", &ReductionResult::embedding)
        .def_readonly("projection", &ReductionResult::projection)
        .def_readonly("selected_features", &ReductionResult::selected_features)
        .def_readonly("preprocess", &ReductionResult::preprocess)
        .def_readonly("method", &ReductionResult::method)
        .def_readonly("explained_variance", &ReductionResult::explained_variance);

    py::class_<IdeResult>(m, "IdeResult")
        .def_readonly("estdim", &IdeResult::estdim)
        .def_readonly("local_estimates", &IdeResult::local_estimates);

    py::class_<NeighborGraph>(m, "NeighborGraph")
        .def_readonly("n", &NeighborGraph::n)
        .def_readonly("directed", &NeighborGraph::directed)
        .def_readonly("has_zero_weight", &NeighborGraph::has_zero_weight)
        .def_property_readonly("edges", [](const NeighborGraph& g) {
            std::vector<std::tuple<Index, Index, double>> out;
            for (const auto& e : g.edges) out.emplace_back(e.i, e.j, e.weight);
            return out;
        });

    m.def(
        "preprocess",
        [](const Matrix& data, const std::string& kind) {
            return preprocess(data, preprocess_kind_from_string(kind));
        },
        py::arg("data"), py::arg("kind"));

    m.def("apply_to_new", &apply_to_new, py::arg("record"), py::arg("projection"),
          py::arg("new_data"));

    m.def(
        "reduce",
        [](const Matrix& data, const std::string& method, int d,
           const std::string& preprocess_kind, std::optional<int> k,
           std::optional<double> eps, const std::string& sym,
           const std::string& kernel, double bandwidth,
           std::optional<Labels> labels) {
            return reduce(data, make_config(method, d, preprocess_kind, k, eps,
                                            sym, kernel, bandwidth,
                                            std::move(labels)));
        },
        py::arg("data"), py::arg("method"), py::arg("d"),
        py::arg("preprocess") = "center", py::arg("k") = std::nullopt,
        py::arg("eps") = std::nullopt, py::arg("sym") = "union",
        py::arg("kernel") = "", py::arg("bandwidth") = -1.0,
        py::arg("labels") = std::nullopt);

    m.def("methods", [] {
        std::vector<std::string> names;
        for (const auto& info : method_registry()) names.push_back(info.name);
        return names;
    });

    m.def("est_mle", &est_mle, py::arg("data"), py::arg("k1") = 6,
          py::arg("k2") = 12);
    m.def("est_corr_dim", &est_corr_dim, py::arg("data"),
          py::arg("num_radii") = 20);
    m.def("est_pca_dim", &est_pca_dim, py::arg("data"),
          py::arg("variance_threshold") = 0.95);
    m.def("est_two_nn", &est_two_nn, py::arg("data"));

    m.def(
        "knn_graph",
        [](const Matrix& data, int k, const std::string& sym) {
            return knn_graph(data, k, symmetrize_from_string(sym));
        },
        py::arg("data"), py::arg("k"), py::arg("sym") = "union");
    m.def("eps_graph", &eps_graph, py::arg("data"), py::arg("eps"));
    m.def("floyd_warshall", &floyd_warshall, py::arg("graph"));
    m.def("connected_components", &connected_components, py::arg("graph"));

    m.def(
        "kernel_matrix",
        [](const Matrix& data, const std::string& kind, double bandwidth,
           int degree, double coef0, double slope, double offset, double shift) {
            KernelSpec spec;
            spec.kind = kernel_kind_from_string(kind);
            spec.bandwidth = bandwidth;
            spec.degree = degree;
            spec.coef0 = coef0;
            spec.slope = slope;
            spec.offset = offset;
            spec.shift = shift;
            return kernel_matrix(data, spec);
        },
        py::arg("data"), py::arg("kind"), py::arg("bandwidth") = -1.0,
        py::arg("degree") = 2, py::arg("coef0") = 1.0, py::arg("slope") = 1.0,
        py::arg("offset") = 0.0, py::arg("shift") = 1.0);
    m.def("center_kernel", &center_kernel, py::arg("gram"));

    m.def(
        "generate",
        [](const std::string& model, int n, double noise, std::uint64_t seed,
           int gaussmix_dim) {
            Sample s = generate(model, n, noise, seed, gaussmix_dim);
            return py::make_tuple(s.data, s.truth.latent, s.truth.intrinsic_dim);
        },
        py::arg("model"), py::arg("n"), py::arg("noise") = 0.0,
        py::arg("seed") = 42, py::arg("gaussmix_dim") = 3);
    m.def("models", [] { return model_names(); });

    m.def(
        "run_bench",
        [](const std::vector<long>& sizes, int p, int d, int repeats,
           std::uint64_t seed) {
            BenchConfig config;
            config.sizes = sizes;
            config.p = p;
            config.d = d;
            config.repeats = repeats;
            config.seed = seed;
            std::vector<py::dict> out;
            for (const auto& r : run_bench(config)) {
                py::dict row;
                row["method"] = r.method;
                row["n"] = r.n;
                row["p"] = r.p;
                row["d"] = r.d;
                row["wall_time_seconds"] = r.wall_time_seconds;
                row["mismatch"] = r.mismatch;
                row["threads"] = r.threads;
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("sizes"), py::arg("p") = 72, py::arg("d") = 12,
        py::arg("repeats") = 3, py::arg("seed") = 42);
}
