#include "frustra/verification.hpp"

#include <algorithm>
#include <cmath>

#include "frustra/ed.hpp"
#include "frustra/errors.hpp"
#include "frustra/spectrum.hpp"

namespace frustra {

MatchReport match_multisets(std::vector<cplx> a, std::vector<cplx> b, double tol) {
    MatchReport report;
    report.tolerance = tol;
    report.n_levels = std::max(a.size(), b.size());
    report.size_mismatch = a.size() != b.size();
    sort_lex(a);
    sort_lex(b);

    std::vector<bool> used(b.size(), false);
    std::size_t first_free = 0;
    for (const cplx& x : a) {
        while (first_free < b.size() && used[first_free])
            ++first_free;
        // b is sorted by real part: scan forward from the first candidate inside the window.
        auto lo = std::lower_bound(b.begin() + static_cast<std::ptrdiff_t>(first_free), b.end(), x.real() - tol,
                                   [](const cplx& y, double re) { return y.real() < re; });
        std::size_t best = b.size();
        double best_dist = 0.0;
        for (auto it = lo; it != b.end() && it->real() <= x.real() + tol; ++it) {
            const auto j = static_cast<std::size_t>(it - b.begin());
            if (used[j])
                continue;
            const double d = std::abs(*it - x);
            if (best == b.size() || d < best_dist) {
                best = j;
                best_dist = d;
            }
        }
        if (best == b.size() || best_dist > tol) {
            ++report.unmatched;
            continue;
        }
        used[best] = true;
        report.max_residual = std::max(report.max_residual, best_dist);
    }
    if (b.size() > a.size())
        report.unmatched += b.size() - a.size();
    report.pass = !report.size_mismatch && report.unmatched == 0 && report.max_residual <= tol;
    return report;
}

double oracle_tolerance(const ModelParams& params) {
    return 1e-8 * (1.0 + std::abs(params.gamma()) + std::abs(params.delta()) + std::abs(params.h())) * params.L();
}

MatchReport channel_match(const ModelParams& params) { return channel_match(params, oracle_tolerance(params)); }

MatchReport channel_match(const ModelParams& params, double tol) {
    if (params.L() > kChannelMatchCapL)
        throw CapacityError("channel_match is capped at L = " + std::to_string(kChannelMatchCapL));

    MatchReport total;
    total.tolerance = tol;
    total.pass = true;
    for (const Channel& ch : channels_for(params.L())) {
        std::vector<cplx> analytic;
        for (const auto& level : channel_levels(params, ch))
            analytic.push_back(level.energy);
        const auto numeric = ed::eigenvalues(ed::build_sector(params, ch.fermion_parity));
        const MatchReport r = match_multisets(std::move(analytic), numeric, tol);

        total.channel_breakdown.push_back(SectorResidual{to_string(ch), r.n_levels, r.max_residual, r.unmatched});
        total.n_levels += r.n_levels;
        total.unmatched += r.unmatched;
        total.size_mismatch = total.size_mismatch || r.size_mismatch;
        total.max_residual = std::max(total.max_residual, r.max_residual);
        total.pass = total.pass && r.pass;
    }
    return total;
}

nlohmann::json to_json(const ModelParams& params) {
    return {{"L", params.L()}, {"gamma", params.gamma()}, {"delta", params.delta()}, {"h", params.h()},
            {"delta_alpha", params.delta_alpha()}, {"delta_beta", params.delta_beta()}};
}

nlohmann::json to_json(const MatchReport& report) {
    nlohmann::json channels = nlohmann::json::array();
    for (const auto& c : report.channel_breakdown)
        channels.push_back({{"channel", c.name}, {"n_levels", c.n_levels}, {"max_residual", c.max_residual},
                            {"unmatched", c.unmatched}});
    return {{"n_levels", report.n_levels},   {"tolerance", report.tolerance}, {"max_residual", report.max_residual},
            {"unmatched", report.unmatched}, {"size_mismatch", report.size_mismatch},
            {"channels", channels},          {"pass", report.pass}};
}

} // namespace frustra
