#include "dimkit/generate.hpp"

#include <cmath>

#include "dimkit/rng.hpp"

namespace dimkit {

const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names = {
        "swissroll", "scurve", "helix",  "twinpeaks", "mobius",
        "sphere",    "saddle", "ribbon", "gaussmix",  "lowrank"};
    return names;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

void add_noise(Matrix& data, double noise, Rng& rng) {
    if (noise <= 0.0) return;
    for (Index i = 0; i < data.rows(); ++i)
        for (Index j = 0; j < data.cols(); ++j)
            data(i, j) += noise * rng.normal();
}

Sample two_param_surface(int n, Rng& rng, double a_lo, double a_hi, double b_lo,
                         double b_hi, auto&& point) {
    Matrix data(n, 3), latent(n, 2);
    for (int i = 0; i < n; ++i) {
        double a = rng.uniform(a_lo, a_hi);
        double b = rng.uniform(b_lo, b_hi);
        latent(i, 0) = a;
        latent(i, 1) = b;
        auto [x, y, z] = point(a, b);
        data(i, 0) = x;
        data(i, 1) = y;
        data(i, 2) = z;
    }
    return {std::move(data), {std::move(latent), 2}};
}

}  // namespace

Sample low_rank_data(int n, int p, int r, double noise, std::uint64_t seed) {
    if (n < 2) throw Error("BadSampleCount", "need n >= 2");
    if (r < 1 || r >= p)
        throw Error("InvalidParameter", "need 1 <= rank < ambient dim");
    // Basis is tied to its own fixed seed so every call shares one subspace.
    Rng basis_rng(0x1f2e3d4c5b6a7988ULL ^ std::uint64_t(p) ^
                  (std::uint64_t(r) << 32));
    Matrix raw(p, r);
    for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < r; ++j) raw(i, j) = basis_rng.normal();
    Eigen::HouseholderQR<Matrix> qr(raw);
    Matrix q = qr.householderQ() * Matrix::Identity(p, r);
    Matrix basis = q.transpose();  // r x p, orthonormal rows

    Rng rng(seed);
    Matrix latent(n, r);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < r; ++j) latent(i, j) = rng.normal();
    Matrix data = latent * basis;
    add_noise(data, noise, rng);
    return {std::move(data), {std::move(latent), r}};
}

Sample generate(const std::string& model, int n, double noise,
                std::uint64_t seed, int gaussmix_dim) {
    if (n < 2) throw Error("BadSampleCount", "need n >= 2");
    if (noise < 0.0) throw Error("InvalidParameter", "noise must be >= 0");
    Rng rng(seed);
    Sample s;

    if (model == "swissroll") {
        s = two_param_surface(n, rng, 1.5 * kPi, 4.5 * kPi, 0.0, 21.0,
                              [](double t, double h) {
                                  return std::tuple{t * std::cos(t), h,
                                                    t * std::sin(t)};
                              });
    } else if (model == "scurve") {
        s = two_param_surface(
            n, rng, -1.5 * kPi, 1.5 * kPi, 0.0, 2.0, [](double t, double h) {
                double sign = (t >= 0.0) ? 1.0 : -1.0;
                return std::tuple{std::sin(t), h, sign * (std::cos(t) - 1.0)};
            });
    } else if (model == "helix") {
        Matrix data(n, 3), latent(n, 1);
        for (int i = 0; i < n; ++i) {
            double t = rng.uniform(0.0, 6.0 * kPi);
            latent(i, 0) = t;
            data(i, 0) = std::cos(t);
            data(i, 1) = std::sin(t);
            data(i, 2) = 0.2 * t;
        }
        s = {std::move(data), {std::move(latent), 1}};
    } else if (model == "twinpeaks") {
        s = two_param_surface(n, rng, -1.0, 1.0, -1.0, 1.0,
                              [](double u, double v) {
                                  return std::tuple{u, v,
                                                    std::sin(kPi * u) *
                                                        std::tanh(3.0 * v)};
                              });
    } else if (model == "mobius") {
        s = two_param_surface(n, rng, 0.0, 2.0 * kPi, -0.4, 0.4,
                              [](double theta, double w) {
                                  double rad = 1.0 + w * std::cos(theta / 2.0);
                                  return std::tuple{rad * std::cos(theta),
                                                    rad * std::sin(theta),
                                                    w * std::sin(theta / 2.0)};
                              });
    } else if (model == "sphere") {
        Matrix data(n, 3), latent(n, 3);
        for (int i = 0; i < n; ++i) {
            Eigen::Vector3d v;
            do {
                v << rng.normal(), rng.normal(), rng.normal();
            } while (v.norm() == 0.0);
            v.normalize();
            data.row(i) = v.transpose();
            latent.row(i) = v.transpose();
        }
        s = {std::move(data), {std::move(latent), 2}};
    } else if (model == "saddle") {
        s = two_param_surface(n, rng, -1.0, 1.0, -1.0, 1.0,
                              [](double u, double v) {
                                  return std::tuple{u, v, u * u - v * v};
                              });
    } else if (model == "ribbon") {
        s = two_param_surface(n, rng, 0.0, kPi, 0.0, 2.0,
                              [](double t, double h) {
                                  return std::tuple{std::cos(t), std::sin(t), h};
                              });
    } else if (model == "gaussmix") {
        int p = gaussmix_dim;
        if (p < 1) throw Error("InvalidParameter", "gaussmix dimension must be >= 1");
        Matrix centers = Matrix::Zero(3, p);
        centers(1, 0) = 5.0;
        centers(2, p > 1 ? 1 : 0) = p > 1 ? 5.0 : -5.0;
        Matrix data(n, p), latent(n, 1);
        for (int i = 0; i < n; ++i) {
            int c = int(rng.uniform() * 3.0);
            if (c > 2) c = 2;
            latent(i, 0) = c;
            for (int j = 0; j < p; ++j) data(i, j) = centers(c, j) + rng.normal();
        }
        s = {std::move(data), {std::move(latent), p}};
    } else if (model == "lowrank") {
        return low_rank_data(n, 72, 12, noise, seed);
    } else {
        throw Error("UnknownModel", "no data model named '" + model + "'");
    }

    add_noise(s.data, noise, rng);
    return s;
}

}  // namespace dimkit
