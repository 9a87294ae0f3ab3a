#include "frustra/phase_map.hpp"

#include <cmath>

#include "frustra/ed.hpp"
#include "frustra/errors.hpp"
#include "frustra/parallel.hpp"
#include "frustra/spectrum.hpp"

namespace frustra {

Axis Axis::linspace(double start, double stop, int count) {
    if (count < 2)
        throw ParameterError("axis needs at least 2 points");
    Axis a;
    a.values.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        a.values.push_back(i + 1 == count ? stop : start + (stop - start) * i / (count - 1));
    return a;
}

void ScanSpec::validate() const {
    if (h_axis.size() < 2 || delta_axis.size() < 2)
        throw ParameterError("scan axes need at least 2 points each");
    if (h_is_inverse)
        for (double v : h_axis.values)
            if (v == 0.0)
                throw ParameterError("1/h axis contains 0");
    if (L < 3)
        throw ParameterError("scan needs L >= 3");
    if (engine == Engine::ED && L > ed::kDenseCapL)
        throw CapacityError("ED engine is capped at L = " + std::to_string(ed::kDenseCapL));
}

double im_ground(const ModelParams& params, Engine engine) {
    if (engine == Engine::Analytic)
        return std::abs(ground_state(params).energy.imag());
    const auto levels = ed::spectrum(params);
    return std::abs(levels[ground_index(levels)].imag());
}

std::vector<ScanCell> scan(const ScanSpec& spec) {
    spec.validate();
    const std::size_t nh = spec.h_axis.size();
    const std::size_t n = nh * spec.delta_axis.size();
    return parallel_map<ScanCell>(n, [&](std::size_t i) {
        const double delta = spec.delta_axis.values[i / nh];
        const double x = spec.h_axis.values[i % nh];
        const double h = spec.h_is_inverse ? 1.0 / x : x;
        const ModelParams params(spec.L, spec.gamma, delta, h);
        return ScanCell{h, delta, im_ground(params, spec.engine), classify_phase(params)};
    });
}

std::vector<BoundaryCurve> boundary_curves(double gamma, double delta_min, double delta_max, int samples) {
    if (samples < 2)
        throw ParameterError("boundary curves need at least 2 samples");
    const Axis deltas = Axis::linspace(delta_min, delta_max, samples);

    std::vector<BoundaryCurve> curves;
    // Appends (delta, h) to the open piece of `family`, starting a new piece after a gap.
    auto sweep = [&](const std::string& family, auto&& h_of) {
        bool open = false;
        int piece = 0;
        for (double d : deltas.values) {
            const auto h = h_of(d);
            if (!h) {
                open = false;
                continue;
            }
            if (!open) {
                curves.push_back({family + "#" + std::to_string(piece++), {}});
                open = true;
            }
            curves.back().points.emplace_back(d, *h);
        }
    };
    const double g2 = gamma * gamma;
    sweep("abs_h_eq_1:h=+1", [&](double d) { return g2 - d * d > 0.0 ? std::optional<double>(1.0) : std::nullopt; });
    sweep("abs_h_eq_1:h=-1", [&](double d) { return g2 - d * d > 0.0 ? std::optional<double>(-1.0) : std::nullopt; });
    sweep("paramagnetic:h>0", [&](double d) {
        const double h2 = 1.0 - (g2 - d * d);
        return h2 >= 1.0 ? std::optional<double>(std::sqrt(h2)) : std::nullopt;
    });
    sweep("paramagnetic:h<0", [&](double d) {
        const double h2 = 1.0 - (g2 - d * d);
        return h2 >= 1.0 ? std::optional<double>(-std::sqrt(h2)) : std::nullopt;
    });
    return curves;
}

} // namespace frustra
