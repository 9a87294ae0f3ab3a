#pragma once

// Test-only reference computations. None of these call into the library's
// spectrum or ED code paths.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// gamma = 1, delta = 0, h = 0 leaves H = sum_j sx_j sx_{j+1}, which is diagonal
// in the sx basis: E = sum_j s_j s_{j+1} over classical s in {+1, -1}^L.
inline std::vector<double> classical_xx_ring(int L) {
    std::vector<double> out;
    for (unsigned cfg = 0; cfg < (1U << L); ++cfg) {
        double e = 0.0;
        for (int j = 0; j < L; ++j) {
            const int sj = (cfg >> j) & 1U ? -1 : 1;
            const int sk = (cfg >> ((j + 1) % L)) & 1U ? -1 : 1;
            e += sj * sk;
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Full 4x4 Fock-space Hamiltonian of the two modes q and -q, written as the
// two separate momentum terms
//   2(cos k - h) c_k^+ c_k + i sin k (da c_{-k}^+ c_k^+ + db c_{-k} c_k) + h,  k = q, -q,
// with explicit Jordan-Wigner matrices for the two modes. Eigenvalues via Eigen.
inline std::vector<cplx> fock_pair_eigenvalues(double q, double gamma, double delta, double h) {
    using M = Eigen::Matrix4cd;
    const double da = gamma + delta;
    const double db = gamma - delta;
    // Mode 0 = q, mode 1 = -q. Basis |n1 n0>, index n0 + 2 n1.
    Eigen::Matrix2cd a;
    a << 0, 1, 0, 0;  // annihilator on one mode: |1> -> |0>
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    // c_0 = id (x) a,  c_1 = a (x) z  (string through mode 0)
    auto kron = [](const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
        M out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
        return out;
    };
    const M c0 = kron(id, a);
    const M c1 = kron(a, z);
    const M c0d = c0.adjoint();
    const M c1d = c1.adjoint();
    const cplx I(0.0, 1.0);

    M H = M::Zero();
    // k = q: c_k = c0, c_{-k} = c1
    H += 2.0 * (std::cos(q) - h) * c0d * c0 + I * std::sin(q) * (da * c1d * c0d + db * c1 * c0) + h * M::Identity();
    // k = -q: c_k = c1, c_{-k} = c0
    H += 2.0 * (std::cos(-q) - h) * c1d * c1 + I * std::sin(-q) * (da * c0d * c1d + db * c0 * c1) +
         h * M::Identity();

    Eigen::ComplexEigenSolver<M> es(H);
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return ev;
}

// Minimum of f over a uniform grid of n points, refined by golden-section
// search around the best grid point.
inline double dense_f_min(double gamma, double delta, double h, int n = 200000) {
    const double p = gamma * gamma - delta * delta;
    auto f = [&](double q) {
        const double c = std::cos(q) - h;
        const double s = std::sin(q);
        return c * c + p * s * s;
    };
    const double pi = 3.141592653589793238462643383279502884;
    double best_q = -pi;
    double best = f(best_q);
    for (int i = 1; i < n; ++i) {
        const double q = -pi + 2.0 * pi * i / n;
        if (f(q) < best) {
            best = f(q);
            best_q = q;
        }
    }
    double lo = best_q - 2.0 * pi / n;
    double hi = best_q + 2.0 * pi / n;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 200; ++it) {
        const double x1 = hi - g * (hi - lo);
        const double x2 = lo + g * (hi - lo);
        if (f(x1) < f(x2))
            hi = x2;
        else
            lo = x1;
    }
    return std::min(best, f(0.5 * (lo + hi)));
}

// Central finite difference of a vector-valued function.
template <typename Fn>
auto central_difference(Fn&& fn, double x, double step = 1e-5) {
    auto plus = fn(x + step);
    auto minus = fn(x - step);
    decltype(plus) out{};
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (plus[i] - minus[i]) / (2.0 * step);
    return out;
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
};

} // namespace oracle
