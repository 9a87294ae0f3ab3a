#include <doctest.h>

#include <cmath>

#include "frustra/errors.hpp"
#include "frustra/phase_map.hpp"

using namespace frustra;

TEST_CASE("axis linspace hits its endpoints") {
    const auto a = Axis::linspace(-2, 2, 101);
    CHECK(a.size() == 101);
    CHECK(a.values.front() == -2.0);
    CHECK(a.values.back() == 2.0);
    CHECK(a.values[50] == 0.0);
    CHECK_THROWS_AS(Axis::linspace(0, 1, 1), ParameterError);
}

TEST_CASE("single cells") {
    ScanSpec spec;
    spec.h_axis = Axis{{0.5, 2.0}};
    spec.delta_axis = Axis{{0.5, 1.2}};
    const auto cells = scan(spec);
    REQUIRE(cells.size() == 4);
    // delta slow, h fast
    CHECK(cells[0].delta == 0.5);
    CHECK(cells[0].h == 0.5);
    CHECK(cells[1].h == 2.0);
    CHECK(cells[0].phase.kind == PhaseKind::KinkPlus);
    CHECK(cells[0].im_ground < 1e-10);
    CHECK(cells[1].phase.kind == PhaseKind::Paramagnetic);
    CHECK(cells[2].phase.kind == PhaseKind::TBreaking);
    CHECK(cells[2].im_ground > 1e-6);
}

TEST_CASE("inverse axis") {
    ScanSpec spec;
    spec.h_axis = Axis{{0.5, 2.0}};
    spec.h_is_inverse = true;
    spec.delta_axis = Axis{{0.0, 0.5}};
    const auto cells = scan(spec);
    CHECK(cells[0].h == 2.0);
    CHECK(cells[1].h == 0.5);
}

TEST_CASE("analytic and ED engines agree on a coarse grid") {
    ScanSpec spec;
    spec.L = 7;
    spec.h_axis = Axis::linspace(-1.8, 1.8, 5);
    spec.delta_axis = Axis::linspace(0.1, 1.9, 5);
    const auto analytic = scan(spec);
    spec.engine = Engine::ED;
    const auto ed = scan(spec);
    REQUIRE(analytic.size() == ed.size());
    for (std::size_t i = 0; i < ed.size(); ++i)
        CHECK_MESSAGE(std::abs(analytic[i].im_ground - ed[i].im_ground) < 1e-8,
                      "h=" << ed[i].h << " delta=" << ed[i].delta);
}

TEST_CASE("delta -> -delta leaves |Im E0| unchanged") {
    for (double d : {0.3, 0.9, 1.4})
        for (double h : {-1.5, -0.2, 0.4, 2.5})
            CHECK(im_ground(ModelParams(9, 1.0, d, h), Engine::Analytic) ==
                  doctest::Approx(im_ground(ModelParams(9, 1.0, -d, h), Engine::Analytic)).epsilon(1e-12));
}

TEST_CASE("boundary curves") {
    const auto curves = boundary_curves(1.0, -2.0, 2.0, 401);
    REQUIRE(curves.size() == 6);
    for (const auto& c : curves) {
        REQUIRE_FALSE(c.points.empty());
        for (auto [d, h] : c.points) {
            const double p = 1.0 - d * d;
            if (c.label.rfind("abs_h_eq_1", 0) == 0) {
                CHECK(std::abs(h) == 1.0);
                CHECK(p > 0.0);
            } else {
                CHECK(p + h * h == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(std::abs(h) >= 1.0);
            }
        }
    }
    CHECK(curves[0].label == "abs_h_eq_1:h=+1#0");
}

TEST_CASE("scan validation") {
    ScanSpec spec;
    spec.h_axis = Axis{{0.5}};
    spec.delta_axis = Axis{{0.0, 1.0}};
    CHECK_THROWS_AS(scan(spec), ParameterError);
    spec.h_axis = Axis{{0.0, 1.0}};
    spec.h_is_inverse = true;
    CHECK_THROWS_AS(scan(spec), ParameterError);
    spec.h_is_inverse = false;
    spec.engine = Engine::ED;
    spec.L = 15;
    CHECK_THROWS_AS(scan(spec), CapacityError);
}
