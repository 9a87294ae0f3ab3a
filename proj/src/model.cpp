#include "frustra/model.hpp"

#include <algorithm>
#include <cmath>

#include "frustra/errors.hpp"

namespace frustra {

ModelParams::ModelParams(int L, double gamma, double delta, double h)
    : L_(L), gamma_(gamma), delta_(delta), h_(h) {
    if (L < 3)
        throw ParameterError("L must be at least 3 (got " + std::to_string(L) + ")");
    if (!std::isfinite(gamma) || !std::isfinite(delta) || !std::isfinite(h))
        throw ParameterError("couplings must be finite");
}

SiteParity site_parity_of(int L) noexcept { return L % 2 != 0 ? SiteParity::Odd : SiteParity::Even; }

std::vector<Channel> channels_for(int L) {
    const SiteParity sp = site_parity_of(L);
    return {Channel{sp, FermionParity::Odd}, Channel{sp, FermionParity::Even}};
}

std::string to_string(const Channel& channel) {
    std::string s = "(";
    s += channel.site_parity == SiteParity::Odd ? 'O' : 'E';
    s += ',';
    s += channel.fermion_parity == FermionParity::Odd ? 'o' : 'e';
    s += ')';
    return s;
}

MomentumGrid momentum_grid(int L, Channel channel) {
    if (L < 3)
        throw ParameterError("momentum grid needs L >= 3");
    if (site_parity_of(L) != channel.site_parity)
        throw ParameterError("channel " + to_string(channel) + " does not match L = " + std::to_string(L));

    MomentumGrid grid;
    grid.channel = channel;
    grid.values.reserve(static_cast<std::size_t>(L));

    // Odd fermion number: periodic fermions, q = 2 pi k / L.
    // Even fermion number: antiperiodic fermions, q = (2k + 1) pi / L.
    // Each value is computed from its integer numerator so that q and -q are exact negatives.
    const bool periodic = channel.fermion_parity == FermionParity::Odd;
    int lo = 0;
    int hi = 0;
    if (channel.site_parity == SiteParity::Odd) {
        lo = -(L - 1) / 2;
        hi = (L - 1) / 2;
    } else if (periodic) {
        lo = -L / 2 + 1;
        hi = L / 2;
    } else {
        lo = -L / 2;
        hi = L / 2 - 1;
    }
    for (int k = lo; k <= hi; ++k) {
        const int numerator = periodic ? 2 * k : 2 * k + 1;  // q = numerator * pi / L
        double q = 0.0;
        if (numerator == L)
            q = kPi;
        else if (numerator != 0)
            q = kPi * static_cast<double>(numerator) / static_cast<double>(L);
        grid.values.push_back(q);
        if (numerator == 0)
            grid.has_zero = true;
        else if (numerator == L)
            grid.has_pi = true;
        else if (numerator > 0)
            grid.paired.push_back(q);
    }
    return grid;
}

double reality_function(const ModelParams& params, double q) noexcept {
    const double c = std::cos(q) - params.h();
    const double s = std::sin(q);
    return c * c + params.gap_product() * s * s;
}

cplx omega_from_f(double f) noexcept {
    if (f >= 0.0)
        return {std::sqrt(f), 0.0};
    return {0.0, std::sqrt(-f)};
}

cplx omega(const ModelParams& params, double q) noexcept { return omega_from_f(reality_function(params, q)); }

double f_min(const ModelParams& params) noexcept {
    const double h = params.h();
    const double p = params.gap_product();
    // As a function of c = cos q, f = (1 - p) c^2 - 2 h c + h^2 + p on [-1, 1].
    double best = std::min((1.0 - h) * (1.0 - h), (1.0 + h) * (1.0 + h));
    if (p != 1.0) {
        const double c_star = h / (1.0 - p);
        if (std::abs(c_star) <= 1.0)
            best = std::min(best, p * (p + h * h - 1.0) / (p - 1.0));
    }
    return best;
}

PhaseLabel classify_phase(const ModelParams& params) noexcept {
    const double da = params.delta_alpha();
    const double db = params.delta_beta();
    const double p = params.gap_product();
    const double abs_h = std::abs(params.h());

    if (p > 0.0 && std::abs(abs_h - 1.0) <= kCriticalTolerance)
        return {PhaseKind::Critical, std::nullopt};
    if (abs_h < 1.0 && da > 0.0 && db > 0.0)
        return {PhaseKind::KinkPlus, 1};
    if (abs_h < 1.0 && da < 0.0 && db < 0.0)
        return {PhaseKind::KinkMinus, -1};
    if (abs_h > 1.0 && p + params.h() * params.h() > 1.0)
        return {PhaseKind::Paramagnetic, 0};
    return {PhaseKind::TBreaking, std::nullopt};
}

std::string_view to_string(PhaseKind kind) noexcept {
    switch (kind) {
    case PhaseKind::KinkPlus: return "kink+";
    case PhaseKind::KinkMinus: return "kink-";
    case PhaseKind::Critical: return "critical";
    case PhaseKind::Paramagnetic: return "paramagnetic";
    case PhaseKind::TBreaking: return "t-breaking";
    }
    return "unknown";
}

ModelParams hermitian_counterpart(const ModelParams& params) {
    const double p = params.gap_product();
    if (!(p > 0.0))
        throw DomainError("hermitian counterpart needs d_alpha * d_beta > 0 (got " + std::to_string(p) + ")");
    return {params.L(), std::sqrt(p), 0.0, params.h()};
}

} // namespace frustra
