#include <doctest.h>

#include <cmath>

#include "frustra/errors.hpp"
#include "frustra/topology.hpp"
#include "oracle/oracles.hpp"

using namespace frustra;

TEST_CASE("bloch vector examples") {
    const ModelParams p(5, 1.0, 0.5, 0.5);
    auto b = bloch_vector(p, 0.0);
    CHECK(std::abs(b.hx) == 0.0);
    CHECK(b.hy == 0.0);
    CHECK(b.hz == doctest::Approx(0.5));

    b = bloch_vector(p, kPi / 2);
    CHECK(b.hx.real() == 0.0);
    CHECK(b.hx.imag() == doctest::Approx(-0.5));
    CHECK(b.hy == doctest::Approx(1.0));
    CHECK(b.hz == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::abs(b.norm - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("property: bilinear square of h equals f") {
    oracle::Rng rng(43);
    for (int draw = 0; draw < 500; ++draw) {
        const ModelParams p(5, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-3, 3));
        const double q = rng.uniform(-kPi, kPi);
        const auto b = bloch_vector(p, q);
        const cplx sq = bilinear_dot(b.vector(), b.vector());
        CHECK(std::abs(sq - reality_function(p, q)) < 1e-13 * (1 + p.h() * p.h() + std::abs(p.gap_product())));
        CHECK(std::abs(b.norm * b.norm - sq) < 1e-12 * (1 + p.h() * p.h() + std::abs(p.gap_product())));
    }
}

TEST_CASE("winding number by phase") {
    CHECK(winding_number(ModelParams(5, 1.0, 0.5, 0.5), 10000).rounded == 1);
    CHECK(winding_number(ModelParams(5, 1.0, 0.5, 2.0), 10000).rounded == 0);
    CHECK(winding_number(ModelParams(5, -1.0, 0.5, 0.5), 10000).rounded == -1);
    CHECK(winding_number(ModelParams(5, 1.0, 0.5, 0.5), 10000).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(winding_number(ModelParams(5, 1.0, 0.5, 2.0), 10000).value) < 1e-10);
}

TEST_CASE("winding number refinement is stable") {
    oracle::Rng rng(47);
    for (int draw = 0; draw < 50; ++draw) {
        const ModelParams p(5, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-3, 3));
        if (p.gap_product() <= 0.05 || std::abs(std::abs(p.h()) - 1.0) < 0.05)
            continue;
        const double a = winding_number(p, 4096).value;
        const double b = winding_number(p, 8192).value;
        CHECK(std::abs(a - b) < 1e-8);
    }
}

TEST_CASE("property: rounded winding equals the phase label") {
    oracle::Rng rng(53);
    int checked = 0;
    while (checked < 1000) {
        const ModelParams p(5, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-3, 3));
        if (p.gap_product() <= 1e-3 || std::abs(std::abs(p.h()) - 1.0) < 1e-3)
            continue;
        const PhaseLabel label = classify_phase(p);
        REQUIRE(label.winding_hint.has_value());
        const auto w = winding_number(p, 10000);
        REQUIRE_MESSAGE(w.rounded == *label.winding_hint,
                        "g=" << p.gamma() << " d=" << p.delta() << " h=" << p.h() << " w=" << w.value);
        ++checked;
    }
}

TEST_CASE("normalized bloch vector") {
    oracle::Rng rng(59);
    for (int draw = 0; draw < 200; ++draw) {
        const ModelParams p(5, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-3, 3));
        const double q = rng.uniform(-kPi, kPi);
        if (std::abs(reality_function(p, q)) < 1e-3)
            continue;
        const cvec3 n = normalized_bloch(p, q);
        CHECK(std::abs(bilinear_dot(n, n) - 1.0) < 1e-12);

        // Lagrange identity (a x b).(a x b) = (a.a)(b.b) - (a.b)^2 for bilinear products
        const cvec3 m = normalized_bloch(p, q + 0.3);
        const cvec3 x = bilinear_cross(n, m);
        const cplx lhs = bilinear_dot(x, x);
        const cplx ab = bilinear_dot(n, m);
        CHECK(std::abs(lhs - (bilinear_dot(n, n) * bilinear_dot(m, m) - ab * ab)) < 1e-10);

        // analytic derivative against central differences
        if (std::abs(reality_function(p, q + 1e-4)) < 1e-2 || std::abs(reality_function(p, q - 1e-4)) < 1e-2)
            continue;
        const cvec3 d = normalized_bloch_derivative(p, q);
        const cvec3 fd = oracle::central_difference([&](double x) { return normalized_bloch(p, x); }, q);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(d[i] - fd[i]) < 1e-5 * (1.0 + std::abs(d[i])));
    }
}

TEST_CASE("trajectory") {
    const auto t = trajectory(ModelParams(5, 1.0, 0.5, 0.5), 201);
    CHECK(t.q.size() == 201);
    CHECK(t.q.front() == 0.0);
    CHECK(t.q.back() == 2.0 * kPi);
    CHECK(t.closed);
    const auto im = t.imag_stream();
    for (std::size_t i = 0; i < im.size(); ++i) {
        // only the x component carries an imaginary part
        CHECK(im[i][1] == 0.0);
        CHECK(im[i][2] == 0.0);
    }
    CHECK(std::abs(im.front()[0]) == 0.0);
    CHECK(std::abs(im[100][0]) < 1e-15);  // q = pi
}

TEST_CASE("topology error paths") {
    CHECK_THROWS_AS(winding_number(ModelParams(5, 1.0, 0.5, 0.5), 63), ParameterError);
    CHECK_THROWS_AS(winding_number(ModelParams(5, 1.0, 1.5, 0.5), 1000), DomainError);
    CHECK_THROWS_AS(winding_number(ModelParams(5, 1.0, 0.5, 1.0), 1000), SingularLoopError);
    CHECK_THROWS_AS(normalized_bloch(ModelParams(5, 1.0, 0.5, 1.0), 0.0), SingularLoopError);
    CHECK_THROWS_AS(trajectory(ModelParams(5, 1.0, 0.5, 1.0), 201), SingularLoopError);
    CHECK_THROWS_AS(trajectory(ModelParams(5, 1.0, 0.5, 0.5), 3), ParameterError);
}
