#include <doctest.h>

#include <cmath>

#include "dimkit/generate.hpp"
#include "test_util.hpp"

using namespace dimkit;

TEST_CASE("determinism: same arguments, identical bytes") {
    for (const auto& model : model_names()) {
        CAPTURE(model);
        auto a = generate(model, 50, 0.05, 1234);
        auto b = generate(model, 50, 0.05, 1234);
        CHECK((a.data - b.data).cwiseAbs().maxCoeff() == 0.0);
        CHECK((a.truth.latent - b.truth.latent).cwiseAbs().maxCoeff() == 0.0);
        auto c = generate(model, 50, 0.05, 1235);
        CHECK((a.data - c.data).cwiseAbs().maxCoeff() > 0.0);
    }
}

TEST_CASE("expected shapes and intrinsic dimensions") {
    struct Expect {
        const char* model;
        Index ambient;
        int intrinsic;
    };
    const Expect table[] = {
        {"swissroll", 3, 2}, {"scurve", 3, 2}, {"helix", 3, 1},
        {"twinpeaks", 3, 2}, {"mobius", 3, 2}, {"sphere", 3, 2},
        {"saddle", 3, 2},    {"ribbon", 3, 2}, {"gaussmix", 3, 3},
        {"lowrank", 72, 12},
    };
    for (const auto& e : table) {
        CAPTURE(e.model);
        auto s = generate(e.model, 40, 0.0, 7);
        CHECK(s.data.rows() == 40);
        CHECK(s.data.cols() == e.ambient);
        CHECK(s.truth.intrinsic_dim == e.intrinsic);
    }
}

TEST_CASE("sphere samples sit on the unit sphere") {
    auto s = generate("sphere", 1000, 0.0, 3);
    for (Index i = 0; i < 1000; ++i)
        CHECK(std::abs(s.data.row(i).norm() - 1.0) <= 1e-12);
}

TEST_CASE("noiseless closed-form residuals vanish") {
    auto saddle = generate("saddle", 200, 0.0, 4);
    for (Index i = 0; i < 200; ++i) {
        double u = saddle.data(i, 0), v = saddle.data(i, 1);
        CHECK(std::abs(saddle.data(i, 2) - (u * u - v * v)) <= 1e-10);
    }

    auto peaks = generate("twinpeaks", 200, 0.0, 4);
    for (Index i = 0; i < 200; ++i) {
        double u = peaks.data(i, 0), v = peaks.data(i, 1);
        CHECK(std::abs(peaks.data(i, 2) -
                       std::sin(M_PI * u) * std::tanh(3 * v)) <= 1e-10);
    }

    auto helix = generate("helix", 200, 0.0, 4);
    for (Index i = 0; i < 200; ++i) {
        double t = helix.truth.latent(i, 0);
        CHECK(std::abs(helix.data(i, 0) - std::cos(t)) <= 1e-10);
        CHECK(std::abs(helix.data(i, 1) - std::sin(t)) <= 1e-10);
        CHECK(std::abs(helix.data(i, 2) - 0.2 * t) <= 1e-10);
    }
}

TEST_CASE("lowrank has numerical rank 12") {
    auto s = generate("lowrank", 500, 0.0, 5);
    Eigen::BDCSVD<Matrix> svd(s.data);
    const auto& sv = svd.singularValues();
    CHECK(sv[12] <= 1e-8 * sv[0]);
    CHECK(sv[11] > 1e-8 * sv[0]);
}

TEST_CASE("noise perturbs in ambient space") {
    auto clean = generate("sphere", 100, 0.0, 9);
    auto noisy = generate("sphere", 100, 0.1, 9);
    CHECK((clean.data - noisy.data).cwiseAbs().maxCoeff() > 0.0);
    // same latent draw, bounded perturbation
    CHECK((clean.data - noisy.data).cwiseAbs().maxCoeff() < 1.0);
}

TEST_CASE("error paths") {
    CHECK(testutil::error_code([] { generate("nosuch", 10, 0, 1); }) ==
          "UnknownModel");
    CHECK(testutil::error_code([] { generate("sphere", 1, 0, 1); }) ==
          "BadSampleCount");
    CHECK(testutil::error_code([] { generate("sphere", 10, -0.1, 1); }) ==
          "InvalidParameter");
}
