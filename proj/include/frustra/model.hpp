#pragma once

// Ring-frustrated XY chain with the imaginary symmetric off-diagonal coupling:
//
//   H = sum_j [ (1+g)/2 sx_j sx_{j+1} + (1-g)/2 sy_j sy_{j+1} - h sz_j ]
//     + i d/2 sum_j ( sx_j sy_{j+1} + sy_j sx_{j+1} )
//
// on a periodic ring of L sites. After Jordan-Wigner the pairing amplitudes are
// d_alpha = g + d (creation) and d_beta = g - d (annihilation).

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frustra {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// |h| - 1 below this counts as sitting on the critical line.
inline constexpr double kCriticalTolerance = 1e-12;

class ModelParams {
public:
    // Throws ParameterError for L < 3 or non-finite couplings.
    ModelParams(int L, double gamma, double delta, double h);

    int L() const noexcept { return L_; }
    double gamma() const noexcept { return gamma_; }
    double delta() const noexcept { return delta_; }
    double h() const noexcept { return h_; }
    double delta_alpha() const noexcept { return gamma_ + delta_; }
    double delta_beta() const noexcept { return gamma_ - delta_; }
    // d_alpha * d_beta, computed as g^2 - d^2 (the two agree in exact arithmetic).
    double gap_product() const noexcept { return gamma_ * gamma_ - delta_ * delta_; }

    ModelParams with_L(int L) const { return {L, gamma_, delta_, h_}; }
    ModelParams with_h(double h) const { return {L_, gamma_, delta_, h}; }
    ModelParams with_delta(double delta) const { return {L_, gamma_, delta, h_}; }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    int L_;
    double gamma_;
    double delta_;
    double h_;
};

enum class SiteParity { Odd, Even };
enum class FermionParity { Odd, Even };

struct Channel {
    SiteParity site_parity;
    FermionParity fermion_parity;

    friend bool operator==(const Channel&, const Channel&) = default;
};

SiteParity site_parity_of(int L) noexcept;
// The two channels (odd fermion number first) that exist for a given L.
std::vector<Channel> channels_for(int L);
// "(O,o)", "(E,e)", ...
std::string to_string(const Channel& channel);
inline int parity_bit(FermionParity p) noexcept { return p == FermionParity::Odd ? 1 : 0; }

struct MomentumGrid {
    Channel channel;
    std::vector<double> values;  // ascending, in (-pi, pi]
    bool has_zero = false;
    bool has_pi = false;
    std::vector<double> paired;  // positive q in (0, pi), ascending
};

// Allowed wave numbers for the channel: integer multiples of 2pi/L in the PBC
// channels (odd fermion number) and odd multiples of pi/L otherwise.
MomentumGrid momentum_grid(int L, Channel channel);

// f(q) = (cos q - h)^2 + d_alpha d_beta sin^2 q.
double reality_function(const ModelParams& params, double q) noexcept;

// sqrt(f) on the branch that is real non-negative for f >= 0 and +i sqrt(-f) for f < 0.
cplx omega(const ModelParams& params, double q) noexcept;
cplx omega_from_f(double f) noexcept;

// Minimum of f over the Brillouin zone, from q = 0, q = pi and the interior
// stationary point cos q* = h / (1 - d_alpha d_beta).
double f_min(const ModelParams& params) noexcept;

enum class PhaseKind { KinkPlus, KinkMinus, Critical, Paramagnetic, TBreaking };

struct PhaseLabel {
    PhaseKind kind;
    std::optional<int> winding_hint;

    friend bool operator==(const PhaseLabel&, const PhaseLabel&) = default;
};

PhaseLabel classify_phase(const ModelParams& params) noexcept;
std::string_view to_string(PhaseKind kind) noexcept;
inline bool has_real_spectrum(PhaseKind kind) noexcept {
    return kind == PhaseKind::KinkPlus || kind == PhaseKind::KinkMinus || kind == PhaseKind::Paramagnetic;
}

// Replaces the pairing amplitudes by their geometric mean: gamma' = sqrt(d_alpha d_beta), delta' = 0.
// Throws DomainError when d_alpha d_beta <= 0.
ModelParams hermitian_counterpart(const ModelParams& params);

} // namespace frustra
