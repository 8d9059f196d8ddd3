// dimkit command-line front end: reduce / estimate / generate / bench over
// CSV files. Exit codes: 0 success, 1 algorithm error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dimkit/bench.hpp"
#include "dimkit/csv.hpp"
#include "dimkit/estimate.hpp"
#include "dimkit/generate.hpp"
#include "dimkit/reduce.hpp"

namespace {

using nlohmann::json;

json record_to_json(const dimkit::PreprocessRecord& r) {
    json j;
    j["kind"] = dimkit::to_string(r.kind);
    j["column_means"] = std::vector<double>(
        r.column_means.data(), r.column_means.data() + r.column_means.size());
    j["column_scales"] = std::vector<double>(
        r.column_scales.data(), r.column_scales.data() + r.column_scales.size());
    std::vector<std::vector<double>> rot;
    for (dimkit::Index i = 0; i < r.rotation.rows(); ++i)
        rot.emplace_back(r.rotation.row(i).data(),
                         r.rotation.row(i).data() + r.rotation.cols());
    j["rotation"] = rot;
    return j;
}

void write_meta(const std::string& path, const dimkit::ReductionResult& result,
                const dimkit::ReducerConfig& config) {
    json j;
    j["method"] = result.method;
    j["d"] = config.d;
    j["preprocess"] = record_to_json(result.preprocess);
    if (result.projection) {
        std::vector<std::vector<double>> proj;
        for (dimkit::Index i = 0; i < result.projection->rows(); ++i) {
            const auto row = result.projection->row(i);
            proj.emplace_back(row.data(), row.data() + row.size());
        }
        j["projection"] = proj;
    }
    if (result.selected_features) {
        // 1-based at the user-facing surface
        std::vector<long> idx;
        for (auto f : *result.selected_features) idx.push_back(long(f) + 1);
        j["selected_features"] = idx;
    }
    if (!result.explained_variance.empty())
        j["explained_variance"] = result.explained_variance;
    json params;
    params["preprocess"] = dimkit::to_string(config.preprocess);
    if (config.neighborhood) {
        if (config.neighborhood->k) params["k"] = *config.neighborhood->k;
        if (config.neighborhood->eps) params["eps"] = *config.neighborhood->eps;
        params["symmetrization"] =
            dimkit::to_string(config.neighborhood->symmetrization);
    }
    if (config.kernel) {
        params["kernel"] = dimkit::to_string(config.kernel->kind);
        if (config.kernel->bandwidth > 0)
            params["bandwidth"] = config.kernel->bandwidth;
    }
    j["parameters"] = params;
    std::ofstream out(path);
    if (!out) throw dimkit::Error("FileOpen", "cannot open '" + path + "'");
    out << j.dump(2) << "\n";
}

// rows in matrix form is the round-trippable shape the CSV layer expects
dimkit::Matrix column_vector(const dimkit::Vector& v) {
    dimkit::Matrix m(v.size(), 1);
    m.col(0) = v;
    return m;
}

struct ReduceArgs {
    std::string method, input, output, preprocess = "center";
    std::string sym = "union", kernel, labels, meta;
    int d = 2;
    std::optional<int> k;
    std::optional<double> eps;
    std::optional<double> bandwidth;
    bool header = false;
};

int run_reduce(const ReduceArgs& a) {
    dimkit::ReducerConfig config;
    config.method = a.method;
    config.d = a.d;
    config.preprocess = dimkit::preprocess_kind_from_string(a.preprocess);
    if (a.k || a.eps) {
        dimkit::Neighborhood nbd;
        nbd.k = a.k;
        nbd.eps = a.eps;
        nbd.symmetrization = dimkit::symmetrize_from_string(a.sym);
        config.neighborhood = nbd;
    }
    if (!a.kernel.empty() || a.bandwidth) {
        dimkit::KernelSpec spec;
        if (!a.kernel.empty())
            spec.kind = dimkit::kernel_kind_from_string(a.kernel);
        if (a.bandwidth) spec.bandwidth = *a.bandwidth;
        config.kernel = spec;
    }
    if (!a.labels.empty())
        config.labels = dimkit::read_csv_labels_file(a.labels);

    dimkit::Matrix data = dimkit::read_csv_matrix_file(a.input);
    dimkit::ReductionResult result = dimkit::reduce(data, config);
    dimkit::write_csv_matrix_file(a.output, result.embedding, a.header);
    if (!a.meta.empty()) write_meta(a.meta, result, config);
    return 0;
}

struct EstimateArgs {
    std::string method, input, local;
    std::optional<int> k1, k2, num_radii;
    std::optional<double> threshold;
};

int run_estimate(const EstimateArgs& a) {
    bool bottom_up = false;
    bool known = false;
    for (const auto& info : dimkit::estimator_registry())
        if (info.name == a.method) {
            bottom_up = info.bottom_up;
            known = true;
        }
    if (!known) {
        std::cerr << "unknown estimator '" << a.method << "'\n";
        return 2;
    }
    if (!a.local.empty() && !bottom_up) {
        std::cerr << "--local requires a bottom-up estimator; '" << a.method
                  << "' reports only a global estimate\n";
        return 2;
    }

    dimkit::Matrix data = dimkit::read_csv_matrix_file(a.input);
    dimkit::IdeResult result;
    if (a.method == "mle")
        result = dimkit::est_mle(data, a.k1.value_or(6), a.k2.value_or(12));
    else if (a.method == "corrdim")
        result = dimkit::est_corr_dim(data, a.num_radii.value_or(20));
    else if (a.method == "pcadim")
        result = dimkit::est_pca_dim(data, a.threshold.value_or(0.95));
    else
        result = dimkit::est_two_nn(data);

    std::cout << "estdim=" << dimkit::format_double(result.estdim) << "\n";
    if (!a.local.empty() && result.local_estimates)
        dimkit::write_csv_matrix_file(a.local,
                                      column_vector(*result.local_estimates));
    return 0;
}

struct GenerateArgs {
    std::string model, output, truth;
    int n = 100;
    double noise = 0.0;
    std::uint64_t seed = 42;
};

int run_generate(const GenerateArgs& a) {
    bool known = false;
    for (const auto& name : dimkit::model_names())
        if (name == a.model) known = true;
    if (!known) {
        std::cerr << "unknown model '" << a.model << "'\n";
        return 2;
    }
    dimkit::Sample sample = dimkit::generate(a.model, a.n, a.noise, a.seed);
    dimkit::write_csv_matrix_file(a.output, sample.data);
    if (!a.truth.empty()) {
        std::ofstream out(a.truth);
        if (!out) throw dimkit::Error("FileOpen", "cannot open '" + a.truth + "'");
        out << "# intrinsic_dim=" << sample.truth.intrinsic_dim << "\n";
        dimkit::write_csv_matrix(out, sample.truth.latent);
    }
    return 0;
}

struct BenchArgs {
    std::string sizes, output;
    int p = 72, d = 12, repeats = 3;
    std::uint64_t seed = 42;
};

int run_bench_cmd(const BenchArgs& a) {
    dimkit::BenchConfig config;
    config.p = a.p;
    config.d = a.d;
    config.repeats = a.repeats;
    config.seed = a.seed;
    std::stringstream ss(a.sizes);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) config.sizes.push_back(std::stol(token));

    auto records = dimkit::run_bench(config);
    std::ofstream out(a.output);
    if (!out) throw dimkit::Error("FileOpen", "cannot open '" + a.output + "'");
    dimkit::write_bench_csv(out, records);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimkit: dimension reduction and intrinsic dimension toolkit"};
    app.require_subcommand(1);

    ReduceArgs ra;
    auto* reduce_cmd = app.add_subcommand("reduce", "embed a CSV data matrix");
    reduce_cmd->add_option("--method", ra.method, "reducer id")->required();
    reduce_cmd->add_option("--dim", ra.d, "target dimension")->required();
    reduce_cmd->add_option("--input", ra.input, "input CSV")->required();
    reduce_cmd->add_option("--output", ra.output, "embedding CSV")->required();
    reduce_cmd->add_option("--preprocess", ra.preprocess,
                           "none|center|scale|cscale|decorrelate|whiten");
    int k_val = 0;
    double eps_val = 0.0, bw_val = 0.0;
    auto* kopt = reduce_cmd->add_option("--k", k_val, "neighbor count");
    auto* eopt = reduce_cmd->add_option("--eps", eps_val, "neighbor radius");
    kopt->excludes(eopt);
    reduce_cmd->add_option("--sym", ra.sym, "union|intersect|asymmetric");
    reduce_cmd->add_option("--kernel", ra.kernel, "kernel kind for kpca");
    auto* bopt = reduce_cmd->add_option("--bandwidth", bw_val, "kernel bandwidth");
    reduce_cmd->add_option("--labels", ra.labels, "labels CSV (one int column)");
    reduce_cmd->add_option("--meta", ra.meta, "metadata JSON output path");
    reduce_cmd->add_flag("--header", ra.header, "write y1..yd header row");

    EstimateArgs ea;
    auto* est_cmd = app.add_subcommand("estimate", "estimate intrinsic dimension");
    est_cmd->add_option("--method", ea.method, "mle|corrdim|pcadim|twonn")
        ->required();
    est_cmd->add_option("--input", ea.input, "input CSV")->required();
    est_cmd->add_option("--local", ea.local, "local-estimates CSV output");
    int k1 = 0, k2 = 0, radii = 0;
    double thresh = 0.0;
    auto* k1opt = est_cmd->add_option("--k1", k1, "smallest neighborhood (mle)");
    auto* k2opt = est_cmd->add_option("--k2", k2, "largest neighborhood (mle)");
    auto* ropt = est_cmd->add_option("--radii", radii, "radius count (corrdim)");
    auto* topt =
        est_cmd->add_option("--threshold", thresh, "variance threshold (pcadim)");

    GenerateArgs ga;
    auto* gen_cmd = app.add_subcommand("generate", "sample a synthetic model");
    gen_cmd->add_option("--model", ga.model, "data model id")->required();
    gen_cmd->add_option("--n", ga.n, "sample count")->required();
    gen_cmd->add_option("--noise", ga.noise, "noise standard deviation");
    gen_cmd->add_option("--seed", ga.seed, "random seed");
    gen_cmd->add_option("--output", ga.output, "sample CSV")->required();
    gen_cmd->add_option("--truth", ga.truth, "latent-coordinates CSV");

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "PCA runtime comparison");
    bench_cmd->add_option("--sizes", ba.sizes, "comma-separated sample counts")
        ->required();
    bench_cmd->add_option("--p", ba.p, "ambient dimension");
    bench_cmd->add_option("--d", ba.d, "target dimension");
    bench_cmd->add_option("--repeats", ba.repeats, "timing repeats");
    bench_cmd->add_option("--seed", ba.seed, "random seed");
    bench_cmd->add_option("--output", ba.output, "records CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*reduce_cmd) {
            if (kopt->count()) ra.k = k_val;
            if (eopt->count()) ra.eps = eps_val;
            if (bopt->count()) ra.bandwidth = bw_val;
            return run_reduce(ra);
        }
        if (*est_cmd) {
            if (k1opt->count()) ea.k1 = k1;
            if (k2opt->count()) ea.k2 = k2;
            if (ropt->count()) ea.num_radii = radii;
            if (topt->count()) ea.threshold = thresh;
            return run_estimate(ea);
        }
        if (*gen_cmd) return run_generate(ga);
        if (*bench_cmd) return run_bench_cmd(ba);
    } catch (const dimkit::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
