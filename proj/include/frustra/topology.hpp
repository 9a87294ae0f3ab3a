#pragma once

#include <array>
#include <vector>

#include "frustra/model.hpp"

namespace frustra {

using cvec3 = std::array<cplx, 3>;

// h(q) = (-i d sin q, g sin q, cos q - h); norm is the bilinear sqrt(h . h) = omega(q).
struct BlochSample {
    double q;
    cplx hx;
    double hy;
    double hz;
    cplx norm;

    cvec3 vector() const noexcept { return {hx, cplx(hy, 0.0), cplx(hz, 0.0)}; }
};

BlochSample bloch_vector(const ModelParams& params, double q) noexcept;

// Bilinear (non-conjugating) products.
cplx bilinear_dot(const cvec3& a, const cvec3& b) noexcept;
cvec3 bilinear_cross(const cvec3& a, const cvec3& b) noexcept;

// h(q) / omega(q) and its q-derivative. Throw SingularLoopError where omega = 0.
cvec3 normalized_bloch(const ModelParams& params, double q);
cvec3 normalized_bloch_derivative(const ModelParams& params, double q);

struct WindingResult {
    double value;
    int rounded;
};

// Signed rotation number of the planar loop (cos q - h, sqrt(d_a d_b) sin q)
// around the origin, times sgn(d_alpha); trapezoid rule on n_grid points.
// Requires d_a d_b > 0 (DomainError) and n_grid >= 64 (ParameterError);
// throws SingularLoopError when the loop passes through the origin.
WindingResult winding_number(const ModelParams& params, int n_grid);

struct Trajectory {
    std::vector<double> q;
    std::vector<cvec3> normalized;
    bool closed = false;

    std::vector<std::array<double, 3>> real_stream() const;
    std::vector<std::array<double, 3>> imag_stream() const;
};

// n_samples points on q in [0, 2 pi], both endpoints included.
Trajectory trajectory(const ModelParams& params, int n_samples);

} // namespace frustra
