#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frustra/model.hpp"

namespace frustra {

struct SectorResidual {
    std::string name;
    std::size_t n_levels = 0;
    double max_residual = 0.0;
    std::size_t unmatched = 0;
};

struct MatchReport {
    std::size_t n_levels = 0;
    double tolerance = 0.0;
    double max_residual = 0.0;
    std::size_t unmatched = 0;
    bool size_mismatch = false;
    std::vector<SectorResidual> channel_breakdown;
    bool pass = false;
};

// Sorts both multisets by (Re, Im) and pairs every element of `a` with the
// nearest still-free element of `b` whose real part lies within `tol`.
// Unequal sizes fail the report; the surplus counts as unmatched.
MatchReport match_multisets(std::vector<cplx> a, std::vector<cplx> b, double tol);

// Default tolerance for analytic-vs-ED comparison: 1e-8 (1 + |g| + |d| + |h|) L.
double oracle_tolerance(const ModelParams& params);

inline constexpr int kChannelMatchCapL = 12;

// Odd channel against the odd up-spin sector, even against even.
MatchReport channel_match(const ModelParams& params);
MatchReport channel_match(const ModelParams& params, double tol);

nlohmann::json to_json(const MatchReport& report);
nlohmann::json to_json(const ModelParams& params);

} // namespace frustra
