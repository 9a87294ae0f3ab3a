#pragma once

// Many-body spectrum of the ring from its free-fermion solution.
//
// Each +-q pair (0 < q < pi) of a channel's grid spans a four-state Fock space:
// the even-number states mix into 2cos q -/+ 2 omega(q), the two singly
// occupied states sit at 2cos q. The unpaired q = 0 and q = pi modes contribute
// 2(+-1 - h) n + h. A channel keeps only the combinations whose total fermion
// parity equals its own.

#include <cstdint>
#include <optional>
#include <vector>

#include "frustra/model.hpp"

namespace frustra {

// Absolute tolerance for grouping levels into degenerate manifolds.
inline constexpr double kDegeneracyTolerance = 1e-8;
// Largest L for which enumerate_spectrum materialises all 2^L levels.
inline constexpr int kDefaultEnumerationCap = 16;

struct PairBlock {
    double q;
    cplx even_low;   // 2cos q - 2 omega
    cplx even_high;  // 2cos q + 2 omega
    double odd_level;  // 2cos q, two-fold
};

// Throws ParameterError unless 0 < q < pi.
PairBlock pair_block(const ModelParams& params, double q);

enum class SpecialMode { Zero, Pi };

double special_mode_energy(const ModelParams& params, SpecialMode mode, int occupation);

enum class PairChoice : std::uint8_t { EvenLow, EvenHigh, OddA, OddB };

// Fermion number contributed by a pair choice (EvenHigh fills both modes).
inline int occupation_of(PairChoice c) noexcept {
    switch (c) {
    case PairChoice::EvenLow: return 0;
    case PairChoice::EvenHigh: return 2;
    default: return 1;
    }
}

struct LevelDescriptor {
    cplx energy;
    Channel channel;
    // Aligned with momentum_grid(L, channel).paired.
    std::vector<PairChoice> pair_choices;
    std::optional<int> n_zero;
    std::optional<int> n_pi;

    int fermion_number() const noexcept;
};

struct ChannelConstants {
    Channel channel;
    // -sum of omega over the full grid, special modes included.
    cplx lambda;
    // Additive constant and special-mode coefficients of the diagonal form,
    // H = 2 sum' omega nbar + lambda + constant + zero_coeff n_0 + pi_coeff n_pi.
    double constant = 0.0;
    double zero_coeff = 0.0;
    double pi_coeff = 0.0;
};

ChannelConstants channel_constants(const ModelParams& params, Channel channel);

struct SpectrumSet {
    ModelParams params;
    std::vector<LevelDescriptor> levels;

    std::size_t count() const noexcept { return levels.size(); }
    std::vector<cplx> energies() const;
};

// All 2^(L-1) levels of one channel.
std::vector<LevelDescriptor> channel_levels(const ModelParams& params, Channel channel, int cap = kDefaultEnumerationCap);

// Both channels merged, 2^L levels. Throws CapacityError above the cap; use
// ground_state / spectral_gap / lowest_levels for larger rings.
SpectrumSet enumerate_spectrum(const ModelParams& params, int cap = kDefaultEnumerationCap);

// Energy of a level written as lambda + constants + 2 omega per occupied
// quasiparticle + special-mode term. Odd L only; the pi-channel constant
// 2(h + 1) stands in for |h + 1|, so h < -1 is rejected.
cplx closed_form_energy(const ModelParams& params, const LevelDescriptor& level);

// A set of levels of one channel that share the same energy.
struct LevelCluster {
    cplx energy;
    std::uint64_t multiplicity;
    LevelDescriptor representative;
};

// The `count` lowest distinct energies of each channel, merged and ordered by
// (Re, Im). Clusters from different channels are kept separate even when equal.
std::vector<LevelCluster> lowest_levels(const ModelParams& params, std::size_t count);

// Lowest real part; among levels whose real part lies within
// kDegeneracyTolerance of it, the smallest imaginary part.
LevelDescriptor ground_state(const ModelParams& params);

struct GroundManifold {
    LevelDescriptor ground;
    std::uint64_t degeneracy;      // levels with Re within tolerance of Re(E0)
    std::optional<cplx> second;    // second-lowest level counted with multiplicity
    std::optional<double> gap;     // Re(E1) - Re(E0), E1 the lowest level above the manifold
};

GroundManifold ground_manifold(const ModelParams& params);

// Re(E1) - Re(E0); 0 when every level lies in the ground manifold.
double spectral_gap(const ModelParams& params);

struct BogoliubovCoeffs {
    double q;
    // Complex where d_alpha d_beta < 0 pushes |cos q - h| above omega; u^2 + v^2 = 1 still holds.
    cplx u;
    cplx v;  // carries sgn(sin q)
    cplx prefactor_ratio;  // sqrt(d_alpha / d_beta)
};

// Throws ParameterError at q = 0, pi and DomainError where omega is imaginary or zero.
BogoliubovCoeffs bogoliubov_coeffs(const ModelParams& params, double q);

// Diagonalizes the 2x2 even-occupancy block of the +-q pair directly and
// checks it against pair_block to 1e-10.
bool verify_bdg_block(const ModelParams& params, double q);

// (Re, Im) lexicographic order.
bool lex_less(cplx a, cplx b) noexcept;
void sort_lex(std::vector<cplx>& values);

// Index of the ground level in an arbitrary list, same rule as ground_state.
std::size_t ground_index(const std::vector<cplx>& energies, double tol = kDegeneracyTolerance);

} // namespace frustra
