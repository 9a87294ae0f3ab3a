#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "frustra/errors.hpp"
#include "frustra/spectrum.hpp"
#include "frustra/verification.hpp"
#include "oracle/oracles.hpp"

using namespace frustra;

TEST_CASE("match_multisets basics") {
    const std::vector<cplx> a{{0, 0}, {1, 0}, {2, -1}, {2, 1}};
    auto r = match_multisets(a, a, 1e-12);
    CHECK(r.pass);
    CHECK(r.max_residual == 0.0);
    CHECK(r.n_levels == 4);

    CHECK(match_multisets({{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}, 1e-12).pass);

    r = match_multisets({{0, 0}, {1, 0}}, {{0, 0}, {1.1, 0}}, 1e-3);
    CHECK_FALSE(r.pass);
    CHECK(r.unmatched == 1);

    r = match_multisets({{0, 0}, {1, 0}}, {{0, 0}}, 1e-3);
    CHECK_FALSE(r.pass);
    CHECK(r.size_mismatch);
    CHECK(r.unmatched == 1);
}

TEST_CASE("match_multisets pairs conjugates whose real parts differ by rounding") {
    // sorted naively, b would interleave +i and -i in the opposite order
    const std::vector<cplx> a{{1.0, -2.0}, {1.0, 2.0}};
    const std::vector<cplx> b{{1.0 + 1e-15, -2.0}, {1.0, 2.0}};
    const auto r = match_multisets(a, b, 1e-10);
    CHECK(r.pass);
    CHECK(r.max_residual < 1e-14);
}

TEST_CASE("property: match_multisets is symmetric") {
    oracle::Rng rng(41);
    for (int draw = 0; draw < 300; ++draw) {
        std::vector<cplx> a;
        const int n = rng.integer(1, 40);
        for (int i = 0; i < n; ++i)
            a.emplace_back(std::round(rng.uniform(-5, 5)), std::round(rng.uniform(-2, 2)));
        std::vector<cplx> b = a;
        std::shuffle(b.begin(), b.end(), rng.engine);
        for (auto& x : b)
            x += cplx(rng.uniform(-1e-9, 1e-9), rng.uniform(-1e-9, 1e-9));
        if (draw % 3 == 0)
            b[0] += cplx(0.5, 0.0);
        const auto ab = match_multisets(a, b, 1e-8);
        const auto ba = match_multisets(b, a, 1e-8);
        CHECK(ab.pass == ba.pass);
        CHECK(ab.pass == (draw % 3 != 0));
    }
}

TEST_CASE("channel_match worked cases") {
    auto r = channel_match(ModelParams(3, 1, 0, 0));
    CHECK(r.pass);
    REQUIRE(r.channel_breakdown.size() == 2);
    CHECK(r.channel_breakdown[0].name == "(O,o)");
    CHECK(r.channel_breakdown[0].n_levels == 4);

    CHECK(channel_match(ModelParams(4, 1, 0, 0)).pass);
    const auto odd4 = channel_levels(ModelParams(4, 1, 0, 0), {SiteParity::Even, FermionParity::Even});
    int zeros = 0;
    for (const auto& l : odd4)
        zeros += std::abs(l.energy) < 1e-12;
    CHECK(zeros == 6);

    r = channel_match(ModelParams(7, 1, 1.2, 0.5));
    CHECK(r.pass);
    CHECK(channel_match(ModelParams(5, 1, 0.5, 0.5), 1e-8).pass);
    CHECK_THROWS_AS(channel_match(ModelParams(13, 1, 0, 0)), CapacityError);
}

TEST_CASE("swapping channels breaks the match") {
    // the odd channel against the even sector fails: the channel/sector assignment matters
    const ModelParams p(5, 1.0, 0.5, 0.3);
    std::vector<cplx> odd;
    for (const auto& l : channel_levels(p, {SiteParity::Odd, FermionParity::Odd}))
        odd.push_back(l.energy);
    std::vector<cplx> even;
    for (const auto& l : channel_levels(p, {SiteParity::Odd, FermionParity::Even}))
        even.push_back(l.energy);
    CHECK_FALSE(match_multisets(odd, even, 1e-8).pass);
}

TEST_CASE("report json") {
    const auto j = to_json(channel_match(ModelParams(3, 1, 0, 0)));
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("channels").size() == 2);
    CHECK(to_json(ModelParams(3, 1, 0.5, 0)).at("delta_alpha").get<double>() == 1.5);
}
