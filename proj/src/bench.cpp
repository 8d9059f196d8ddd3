#include "dimkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "dimkit/csv.hpp"
#include "dimkit/generate.hpp"
#include "dimkit/reduce.hpp"

namespace dimkit {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double sign_aligned_mismatch(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (Index j = 0; j < a.cols(); ++j) {
        double direct = (a.col(j) - b.col(j)).cwiseAbs().maxCoeff();
        double flipped = (a.col(j) + b.col(j)).cwiseAbs().maxCoeff();
        worst = std::max(worst, std::min(direct, flipped));
    }
    return worst;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    if (config.repeats < 1)
        throw Error("InvalidParameter", "repeats must be >= 1");
    std::vector<long> sizes = config.sizes;
    std::sort(sizes.begin(), sizes.end());

    std::vector<BenchRecord> records;
    for (long n : sizes) {
        if (n < 2L * config.d)
            throw Error("InvalidParameter",
                        "n = " + std::to_string(n) + " below 2*d");
        // data + centered copy + thin-SVD workspace, with headroom
        std::size_t working_set =
            std::size_t(n) * std::size_t(config.p) * sizeof(double) * 6;
        if (working_set > config.memory_cap_bytes)
            throw Error("OutOfMemoryGuard",
                        "estimated working set " + std::to_string(working_set) +
                            " bytes exceeds cap " +
                            std::to_string(config.memory_cap_bytes));

        int rank = std::min(12, config.p - 1);
        Sample sample =
            low_rank_data(int(n), config.p, rank, 0.01, config.seed);

        using clock = std::chrono::steady_clock;
        std::vector<double> cov_times, svd_times;
        Matrix cov_embedding, svd_embedding;
        for (int r = 0; r < config.repeats; ++r) {
            auto t0 = clock::now();
            auto cov = pca(sample.data, config.d);
            auto t1 = clock::now();
            auto svd = pca_svd(sample.data, config.d);
            auto t2 = clock::now();
            cov_times.push_back(std::chrono::duration<double>(t1 - t0).count());
            svd_times.push_back(std::chrono::duration<double>(t2 - t1).count());
            if (r == 0) {
                cov_embedding = std::move(cov.embedding);
                svd_embedding = std::move(svd.embedding);
            }
        }

        double mismatch = sign_aligned_mismatch(cov_embedding, svd_embedding);
        records.push_back({"pca-cov", n, config.p, config.d, median(cov_times),
                           mismatch, 1});
        records.push_back({"pca-svd", n, config.p, config.d, median(svd_times),
                           mismatch, 1});
    }

    // ascending n within each method
    std::stable_sort(records.begin(), records.end(),
                     [](const BenchRecord& a, const BenchRecord& b) {
                         if (a.method != b.method) return a.method < b.method;
                         return a.n < b.n;
                     });
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "method,n,p,d,wall_time_seconds,mismatch,threads\n";
    for (const auto& r : records)
        out << r.method << ',' << r.n << ',' << r.p << ',' << r.d << ','
            << format_double(r.wall_time_seconds) << ','
            << format_double(r.mismatch) << ',' << r.threads << "\n";
}

}  // namespace dimkit
