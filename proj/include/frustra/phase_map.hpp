#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frustra/model.hpp"

namespace frustra {

struct Axis {
    std::vector<double> values;

    // count points from start to stop inclusive, each computed from its index.
    static Axis linspace(double start, double stop, int count);
    std::size_t size() const noexcept { return values.size(); }
};

enum class Engine { Analytic, ED };

// |Im E0| above this colors a cell as complex.
inline constexpr double kComplexThreshold = 1e-6;

struct ScanSpec {
    double gamma = 1.0;
    Axis h_axis;          // values of h, or of 1/h when h_is_inverse
    bool h_is_inverse = false;
    Axis delta_axis;
    int L = 11;
    Engine engine = Engine::Analytic;

    // Throws ParameterError (axes shorter than 2, zero on an inverse axis) or
    // CapacityError (ED engine above the dense cap).
    void validate() const;
};

struct ScanCell {
    double h;
    double delta;
    double im_ground;  // |Im E0|
    PhaseLabel phase;
};

// Ground state of every grid point; delta is the slow (row) index, h the fast one.
std::vector<ScanCell> scan(const ScanSpec& spec);

// |Im E0| by either engine.
double im_ground(const ModelParams& params, Engine engine);

struct BoundaryCurve {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (delta, h)
};

// Phase boundaries in the (delta, h) plane at fixed gamma: |h| = 1 where
// gamma^2 - delta^2 > 0, and gamma^2 - delta^2 + h^2 = 1 where that forces |h| > 1.
// Each contiguous piece is returned as its own labeled curve.
std::vector<BoundaryCurve> boundary_curves(double gamma, double delta_min = -2.0, double delta_max = 2.0,
                                           int samples = 401);

} // namespace frustra
