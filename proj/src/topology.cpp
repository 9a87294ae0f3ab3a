#include "frustra/topology.hpp"

#include <algorithm>
#include <cmath>

#include "frustra/errors.hpp"

namespace frustra {

namespace {

// Loops closer than this to the origin are rejected as singular.
constexpr double kSingularF = 1e-14;

} // namespace

BlochSample bloch_vector(const ModelParams& params, double q) noexcept {
    const double s = std::sin(q);
    BlochSample b{q, cplx(0.0, -params.delta() * s), params.gamma() * s, std::cos(q) - params.h(), {}};
    // hx^2 + hy^2 + hz^2 = -d^2 s^2 + g^2 s^2 + (cos q - h)^2 = f(q)
    b.norm = omega(params, q);
    return b;
}

cplx bilinear_dot(const cvec3& a, const cvec3& b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

cvec3 bilinear_cross(const cvec3& a, const cvec3& b) noexcept {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

cvec3 normalized_bloch(const ModelParams& params, double q) {
    const BlochSample b = bloch_vector(params, q);
    if (std::abs(b.norm) * std::abs(b.norm) <= kSingularF)
        throw SingularLoopError("Bloch vector has zero bilinear norm at q = " + std::to_string(q));
    const cvec3 v = b.vector();
    return {v[0] / b.norm, v[1] / b.norm, v[2] / b.norm};
}

cvec3 normalized_bloch_derivative(const ModelParams& params, double q) {
    const BlochSample b = bloch_vector(params, q);
    const double f = reality_function(params, q);
    if (std::abs(f) <= kSingularF)
        throw SingularLoopError("Bloch vector has zero bilinear norm at q = " + std::to_string(q));
    const double s = std::sin(q);
    const double c = std::cos(q);
    const cvec3 v = b.vector();
    const cvec3 dv{cplx(0.0, -params.delta() * c), cplx(params.gamma() * c, 0.0), cplx(-s, 0.0)};
    // d/dq (v / w) = dv / w - v w' / w^2 with w' = f' / (2 w).
    const double df = -2.0 * (c - params.h()) * s + 2.0 * params.gap_product() * s * c;
    const cplx w = b.norm;
    const cplx dw = df / (2.0 * w);
    cvec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = dv[i] / w - v[i] * dw / (w * w);
    return out;
}

WindingResult winding_number(const ModelParams& params, int n_grid) {
    if (n_grid < 64)
        throw ParameterError("winding_number needs n_grid >= 64");
    const double p = params.gap_product();
    if (!(p > 0.0))
        throw DomainError("winding number needs d_alpha * d_beta > 0");
    if (f_min(params) <= kSingularF)
        throw SingularLoopError("Bloch loop passes through the origin (|h| = 1)");

    // x = cos q - h, y = sqrt(p) sin q:  x y' - y x' = sqrt(p) (1 - h cos q),  x^2 + y^2 = f(q).
    const double root_p = std::sqrt(p);
    const double step = 2.0 * kPi / n_grid;
    double sum = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double q = -kPi + step * i;
        sum += root_p * (1.0 - params.h() * std::cos(q)) / reality_function(params, q);
    }
    const double sign = params.delta_alpha() > 0.0 ? 1.0 : -1.0;
    const double value = sign * sum * step / (2.0 * kPi);
    return {value, static_cast<int>(std::lround(value))};
}

std::vector<std::array<double, 3>> Trajectory::real_stream() const {
    std::vector<std::array<double, 3>> out;
    out.reserve(normalized.size());
    for (const auto& v : normalized)
        out.push_back({v[0].real(), v[1].real(), v[2].real()});
    return out;
}

std::vector<std::array<double, 3>> Trajectory::imag_stream() const {
    std::vector<std::array<double, 3>> out;
    out.reserve(normalized.size());
    for (const auto& v : normalized)
        out.push_back({v[0].imag(), v[1].imag(), v[2].imag()});
    return out;
}

Trajectory trajectory(const ModelParams& params, int n_samples) {
    if (n_samples < 16)
        throw ParameterError("trajectory needs at least 16 samples");
    Trajectory t;
    t.q.reserve(static_cast<std::size_t>(n_samples));
    t.normalized.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double q = i + 1 == n_samples ? 2.0 * kPi : 2.0 * kPi * i / (n_samples - 1);
        t.q.push_back(q);
        t.normalized.push_back(normalized_bloch(params, q));
    }
    double gap = 0.0;
    for (int i = 0; i < 3; ++i)
        gap = std::max(gap, std::abs(t.normalized.front()[i] - t.normalized.back()[i]));
    t.closed = gap <= 1e-12;
    return t;
}

} // namespace frustra
