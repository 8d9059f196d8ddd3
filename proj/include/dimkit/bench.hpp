#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dimkit/types.hpp"

namespace dimkit {

struct BenchRecord {
    std::string method;  // "pca-cov" or "pca-svd"
    long n = 0;
    int p = 72;
    int d = 12;
    double wall_time_seconds = 0.0;
    double mismatch = 0.0;  // max sign-aligned deviation between the two paths
    int threads = 1;
};

struct BenchConfig {
    std::vector<long> sizes;
    int p = 72;
    int d = 12;
    int repeats = 3;
    std::uint64_t seed = 42;
    std::size_t memory_cap_bytes = std::size_t(4) << 30;
};

/// Times the covariance-spectral and SVD PCA paths on low-rank data with
/// noise 0.01; median wall time over `repeats`, records in ascending n.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// CSV with header method,n,p,d,wall_time_seconds,mismatch,threads.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace dimkit
