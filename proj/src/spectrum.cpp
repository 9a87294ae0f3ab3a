#include "frustra/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>

#include "frustra/errors.hpp"

namespace frustra {

namespace {

// Values closer than this are treated as the same energy while building clusters.
constexpr double kMergeTolerance = 1e-11;

bool is_interior(double q) noexcept { return q > 0.0 && q < kPi; }

// One independent factor of a channel's Fock space: a +-q pair or a special mode.
struct Factor {
    enum class Kind { Pair, Zero, Pi } kind;
    std::array<cplx, 4> energies{};
    std::array<int, 4> parities{};
    int n_options = 0;
};

std::vector<Factor> channel_factors(const ModelParams& params, const MomentumGrid& grid) {
    std::vector<Factor> factors;
    factors.reserve(grid.paired.size() + 2);
    for (double q : grid.paired) {
        const PairBlock b = pair_block(params, q);
        Factor f{Factor::Kind::Pair};
        f.energies = {b.even_low, b.even_high, cplx(b.odd_level, 0.0), cplx(b.odd_level, 0.0)};
        f.parities = {0, 0, 1, 1};
        f.n_options = 4;
        factors.push_back(f);
    }
    auto add_special = [&](Factor::Kind kind, SpecialMode mode) {
        Factor f{kind};
        f.energies[0] = special_mode_energy(params, mode, 0);
        f.energies[1] = special_mode_energy(params, mode, 1);
        f.parities[0] = 0;
        f.parities[1] = 1;
        f.n_options = 2;
        factors.push_back(f);
    };
    if (grid.has_zero)
        add_special(Factor::Kind::Zero, SpecialMode::Zero);
    if (grid.has_pi)
        add_special(Factor::Kind::Pi, SpecialMode::Pi);
    return factors;
}

LevelDescriptor describe(const std::vector<Factor>& factors, std::span<const std::uint8_t> options,
                         const Channel& channel, cplx energy) {
    LevelDescriptor level{energy, channel, {}, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        switch (factors[i].kind) {
        case Factor::Kind::Pair: level.pair_choices.push_back(static_cast<PairChoice>(options[i])); break;
        case Factor::Kind::Zero: level.n_zero = options[i]; break;
        case Factor::Kind::Pi: level.n_pi = options[i]; break;
        }
    }
    return level;
}

struct Partial {
    cplx energy;
    std::uint64_t multiplicity;
    std::vector<std::uint8_t> options;
};

bool partial_less(const Partial& a, const Partial& b) noexcept { return lex_less(a.energy, b.energy); }

// Keeps the `keep` lowest distinct energies, accumulating multiplicities of merged entries.
void compress(std::vector<Partial>& list, std::size_t keep) {
    std::sort(list.begin(), list.end(), partial_less);
    std::vector<Partial> out;
    out.reserve(std::min(keep, list.size()));
    for (auto& p : list) {
        if (!out.empty() && std::abs(out.back().energy - p.energy) <= kMergeTolerance) {
            out.back().multiplicity += p.multiplicity;
            continue;
        }
        if (out.size() == keep)
            break;
        out.push_back(std::move(p));
    }
    list = std::move(out);
}

// Lowest `keep` distinct energies of one channel, by dynamic programming over
// factors with the running fermion parity as state. The k smallest distinct
// sums of A + B only involve the k smallest distinct members of A and of B, so
// truncating after every factor is exact.
std::vector<LevelCluster> channel_lowest(const ModelParams& params, Channel channel, std::size_t keep) {
    const MomentumGrid grid = momentum_grid(params.L(), channel);
    const auto factors = channel_factors(params, grid);

    std::array<std::vector<Partial>, 2> state;
    state[0].push_back(Partial{cplx(0.0, 0.0), 1, {}});
    for (const Factor& f : factors) {
        std::array<std::vector<Partial>, 2> next;
        for (int from = 0; from < 2; ++from) {
            for (const Partial& p : state[from]) {
                for (int o = 0; o < f.n_options; ++o) {
                    Partial q{p.energy + f.energies[o], p.multiplicity, p.options};
                    q.options.push_back(static_cast<std::uint8_t>(o));
                    next[from ^ f.parities[o]].push_back(std::move(q));
                }
            }
        }
        compress(next[0], keep);
        compress(next[1], keep);
        state = std::move(next);
    }

    std::vector<LevelCluster> out;
    for (const Partial& p : state[parity_bit(channel.fermion_parity)])
        out.push_back(LevelCluster{p.energy, p.multiplicity, describe(factors, p.options, channel, p.energy)});
    return out;
}

std::uint64_t channel_size(int L) { return std::uint64_t{1} << (L - 1); }

} // namespace

bool lex_less(cplx a, cplx b) noexcept {
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

void sort_lex(std::vector<cplx>& values) { std::sort(values.begin(), values.end(), lex_less); }

std::size_t ground_index(const std::vector<cplx>& energies, double tol) {
    if (energies.empty())
        throw ParameterError("ground_index of an empty spectrum");
    double re_min = std::numeric_limits<double>::infinity();
    for (const cplx& e : energies)
        re_min = std::min(re_min, e.real());
    std::size_t best = energies.size();
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (energies[i].real() > re_min + tol)
            continue;
        if (best == energies.size() || energies[i].imag() < energies[best].imag())
            best = i;
    }
    return best;
}

int LevelDescriptor::fermion_number() const noexcept {
    int n = n_zero.value_or(0) + n_pi.value_or(0);
    for (PairChoice c : pair_choices)
        n += occupation_of(c);
    return n;
}

PairBlock pair_block(const ModelParams& params, double q) {
    if (!is_interior(q))
        throw ParameterError("pair_block needs 0 < q < pi; use special_mode_energy for q = 0, pi");
    const double two_cos = 2.0 * std::cos(q);
    const cplx two_omega = 2.0 * omega(params, q);
    return {q, two_cos - two_omega, two_cos + two_omega, two_cos};
}

double special_mode_energy(const ModelParams& params, SpecialMode mode, int occupation) {
    if (occupation != 0 && occupation != 1)
        throw ParameterError("special mode occupation must be 0 or 1");
    const double h = params.h();
    const double eps = mode == SpecialMode::Zero ? 2.0 * (1.0 - h) : 2.0 * (-1.0 - h);
    return eps * occupation + h;
}

ChannelConstants channel_constants(const ModelParams& params, Channel channel) {
    const MomentumGrid grid = momentum_grid(params.L(), channel);
    ChannelConstants c{channel, cplx(0.0, 0.0)};
    for (double q : grid.values)
        c.lambda -= omega(params, q);

    const double h = params.h();
    const bool odd_channel = channel.fermion_parity == FermionParity::Odd;
    if (channel.site_parity == SiteParity::Odd) {
        if (odd_channel) {
            c.constant = std::abs(h - 1.0) + (h - 1.0);
            c.zero_coeff = -2.0 * (h - 1.0);
        } else {
            c.constant = 2.0 * (h + 1.0);
            c.pi_coeff = -2.0 * (h + 1.0);
        }
    } else if (odd_channel) {
        // Even-L constants of the closed form. They do not reproduce the spectrum and
        // are kept for reference only (closed_form_energy rejects even L).
        c.constant = std::abs(h - 1.0) + 3.0 + h;
        c.zero_coeff = 2.0 * (h - 1.0);
        c.pi_coeff = -2.0 * (h + 1.0);
    }
    return c;
}

std::vector<cplx> SpectrumSet::energies() const {
    std::vector<cplx> e;
    e.reserve(levels.size());
    for (const auto& l : levels)
        e.push_back(l.energy);
    return e;
}

std::vector<LevelDescriptor> channel_levels(const ModelParams& params, Channel channel, int cap) {
    if (params.L() > cap)
        throw CapacityError("full enumeration is capped at L = " + std::to_string(cap) + " (got L = " +
                            std::to_string(params.L()) + "); use ground_state / spectral_gap instead");
    const MomentumGrid grid = momentum_grid(params.L(), channel);
    const auto factors = channel_factors(params, grid);
    const int target = parity_bit(channel.fermion_parity);

    std::vector<LevelDescriptor> levels;
    levels.reserve(channel_size(params.L()));
    std::vector<std::uint8_t> options(factors.size(), 0);
    for (;;) {
        int parity = 0;
        cplx energy(0.0, 0.0);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            energy += factors[i].energies[options[i]];
            parity ^= factors[i].parities[options[i]];
        }
        if (parity == target)
            levels.push_back(describe(factors, options, channel, energy));

        // mixed-radix increment
        std::size_t i = 0;
        for (; i < factors.size(); ++i) {
            if (++options[i] < factors[i].n_options)
                break;
            options[i] = 0;
        }
        if (i == factors.size())
            break;
    }
    if (levels.size() != channel_size(params.L()))
        throw InternalError("channel " + to_string(channel) + " produced " + std::to_string(levels.size()) + " levels");
    return levels;
}

SpectrumSet enumerate_spectrum(const ModelParams& params, int cap) {
    SpectrumSet set{params, {}};
    for (const Channel& ch : channels_for(params.L())) {
        auto part = channel_levels(params, ch, cap);
        set.levels.insert(set.levels.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return set;
}

cplx closed_form_energy(const ModelParams& params, const LevelDescriptor& level) {
    if (params.L() % 2 == 0)
        throw ParameterError("the closed diagonal form is only available for odd L");
    if (params.h() < -1.0)
        throw DomainError("the pi-channel constant 2(h + 1) equals omega(pi) only for h >= -1");
    const MomentumGrid grid = momentum_grid(params.L(), level.channel);
    if (level.pair_choices.size() != grid.paired.size())
        throw ParameterError("level descriptor does not match the channel grid");

    const ChannelConstants c = channel_constants(params, level.channel);
    cplx e = c.lambda + c.constant;
    for (std::size_t i = 0; i < grid.paired.size(); ++i)
        e += 2.0 * omega(params, grid.paired[i]) * static_cast<double>(occupation_of(level.pair_choices[i]));
    e += c.zero_coeff * level.n_zero.value_or(0);
    e += c.pi_coeff * level.n_pi.value_or(0);
    return e;
}

std::vector<LevelCluster> lowest_levels(const ModelParams& params, std::size_t count) {
    std::vector<LevelCluster> all;
    for (const Channel& ch : channels_for(params.L())) {
        auto part = channel_lowest(params, ch, count);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const LevelCluster& a, const LevelCluster& b) { return lex_less(a.energy, b.energy); });
    if (all.size() > count)
        all.resize(count);
    return all;
}

GroundManifold ground_manifold(const ModelParams& params) {
    const auto channels = channels_for(params.L());
    std::size_t keep = 16;
    for (;;) {
        std::vector<LevelCluster> all;
        std::vector<bool> exhausted;
        std::vector<double> last_re;
        for (const Channel& ch : channels) {
            auto part = channel_lowest(params, ch, keep);
            exhausted.push_back(part.size() < keep);
            last_re.push_back(part.back().energy.real());
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        double re0 = std::numeric_limits<double>::infinity();
        for (const auto& c : all)
            re0 = std::min(re0, c.energy.real());

        // Every channel must either be exhausted or show a level above the manifold,
        // otherwise a manifold member or the first excited level may be missing.
        bool complete = true;
        for (std::size_t i = 0; i < channels.size(); ++i)
            complete = complete && (exhausted[i] || last_re[i] > re0 + kDegeneracyTolerance);
        if (!complete) {
            keep *= 2;
            continue;
        }

        std::stable_sort(all.begin(), all.end(),
                         [](const LevelCluster& a, const LevelCluster& b) { return lex_less(a.energy, b.energy); });

        GroundManifold m{all.front().representative, 0, std::nullopt, std::nullopt};
        for (const auto& c : all) {
            if (c.energy.real() <= re0 + kDegeneracyTolerance) {
                m.degeneracy += c.multiplicity;
                if (c.energy.imag() < m.ground.energy.imag())
                    m.ground = c.representative;
            } else if (!m.gap) {
                m.gap = c.energy.real() - re0;
            }
        }
        if (all.front().multiplicity >= 2)
            m.second = all.front().energy;
        else if (all.size() >= 2)
            m.second = all[1].energy;
        return m;
    }
}

LevelDescriptor ground_state(const ModelParams& params) { return ground_manifold(params).ground; }

double spectral_gap(const ModelParams& params) { return ground_manifold(params).gap.value_or(0.0); }

BogoliubovCoeffs bogoliubov_coeffs(const ModelParams& params, double q) {
    if (std::sin(q) == 0.0 || std::abs(std::remainder(q, 2.0 * kPi)) == kPi)
        throw ParameterError("Bogoliubov coefficients are not defined for the special modes q = 0, pi");
    const double f = reality_function(params, q);
    if (!(f > 0.0))
        throw DomainError("Bogoliubov coefficients need a real, nonzero omega(q)");
    const double w = std::sqrt(f);
    const double ratio = (std::cos(q) - params.h()) / w;
    const double sign = std::sin(q) > 0.0 ? 1.0 : -1.0;

    BogoliubovCoeffs c{q, std::sqrt(cplx(0.5 * (1.0 + ratio), 0.0)), std::sqrt(cplx(0.5 * (1.0 - ratio), 0.0)) * sign,
                       cplx(std::numeric_limits<double>::quiet_NaN(), 0.0)};
    if (params.delta_beta() != 0.0)
        c.prefactor_ratio = std::sqrt(cplx(params.delta_alpha() / params.delta_beta(), 0.0));
    return c;
}

bool verify_bdg_block(const ModelParams& params, double q) {
    if (!is_interior(q))
        throw ParameterError("verify_bdg_block needs 0 < q < pi");
    const double s = std::sin(q);
    const double c = std::cos(q);
    const double h = params.h();

    // Fock block on {|0>, c_{-q}^+ c_q^+ |0>} of the pair Hamiltonian
    // 2(cos q - h)(n_q + n_-q) + 2h + 2i sin q (d_a c_{-q}^+ c_q^+ + d_b c_{-q} c_q).
    const cplx a = 2.0 * h;
    const cplx d = 4.0 * c - 2.0 * h;
    const cplx b = cplx(0.0, -2.0 * params.delta_beta() * s);
    const cplx cc = cplx(0.0, 2.0 * params.delta_alpha() * s);
    const cplx mean = 0.5 * (a + d);
    const cplx root = std::sqrt(0.25 * (a - d) * (a - d) + b * cc);
    const cplx l1 = mean - root;
    const cplx l2 = mean + root;
    // Singly occupied states are diagonal.
    const double single = 2.0 * (c - h) + 2.0 * h;

    const PairBlock pb = pair_block(params, q);
    constexpr double tol = 1e-10;
    const double direct = std::max(std::abs(l1 - pb.even_low), std::abs(l2 - pb.even_high));
    const double swapped = std::max(std::abs(l1 - pb.even_high), std::abs(l2 - pb.even_low));
    return std::min(direct, swapped) <= tol && std::abs(single - pb.odd_level) <= tol;
}

} // namespace frustra
