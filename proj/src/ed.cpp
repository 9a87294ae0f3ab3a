#include "frustra/ed.hpp"

#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "frustra/errors.hpp"
#include "frustra/spectrum.hpp"

namespace frustra::ed {

namespace {

void check_dense_cap(int L) {
    if (L > kDenseCapL)
        throw CapacityError("dense exact diagonalization is capped at L = " + std::to_string(kDenseCapL) +
                            " (got L = " + std::to_string(L) + ")");
}

// Nonzero actions of the Hamiltonian on one basis state, as (target, amplitude).
// Bond basis {up-up, up-down, down-up, down-down}: flip-flop with amplitude 1,
// down-down -> up-up with d_alpha, up-up -> down-down with d_beta.
template <typename Emit>
void apply(const ModelParams& params, std::uint32_t s, Emit&& emit) {
    const int L = params.L();
    const int up = L - std::popcount(s);
    emit(s, -params.h() * static_cast<double>(up - (L - up)));
    for (int j = 0; j < L; ++j) {
        const int k = (j + 1) % L;
        const std::uint32_t bj = (s >> j) & 1U;
        const std::uint32_t bk = (s >> k) & 1U;
        const std::uint32_t t = s ^ (1U << j) ^ (1U << k);
        if (bj != bk)
            emit(t, 1.0);
        else if (bj == 1U)
            emit(t, params.delta_alpha());
        else
            emit(t, params.delta_beta());
    }
}

std::string condition_report(const DenseOperator& op) {
    double norm1 = 0.0;
    for (std::size_t c = 0; c < op.dim(); ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < op.dim(); ++r)
            col += std::abs(op(r, c));
        norm1 = std::max(norm1, col);
    }
    std::ostringstream os;
    os << "dim " << op.dim() << ", 1-norm " << norm1 << ", symmetric " << (op.is_symmetric(1e-14) ? "yes" : "no");
    return os.str();
}

} // namespace

SpinBasisIndex SpinBasisIndex::from_bits(std::uint32_t bits, int L) noexcept {
    return {bits, L - std::popcount(bits)};
}

double DenseOperator::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

bool DenseOperator::is_symmetric(double tol) const noexcept {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r + 1; c < dim_; ++c)
            if (std::abs((*this)(r, c) - (*this)(c, r)) > tol)
                return false;
    return true;
}

DenseOperator build_hamiltonian(const ModelParams& params) {
    check_dense_cap(params.L());
    const std::size_t dim = std::size_t{1} << params.L();
    DenseOperator op(dim);
    for (std::uint32_t s = 0; s < dim; ++s)
        apply(params, s, [&](std::uint32_t t, double amp) { op(t, s) += amp; });
    return op;
}

ParitySector build_sector(const ModelParams& params, FermionParity parity) {
    check_dense_cap(params.L());
    const int L = params.L();
    const int want = parity_bit(parity);
    const std::uint32_t dim = 1U << L;

    std::vector<SpinBasisIndex> indices;
    std::unordered_map<std::uint32_t, std::size_t> position;
    for (std::uint32_t s = 0; s < dim; ++s) {
        const auto idx = SpinBasisIndex::from_bits(s, L);
        if (idx.up_count % 2 == want) {
            position.emplace(s, indices.size());
            indices.push_back(idx);
        }
    }

    DenseOperator block(indices.size());
    for (std::size_t col = 0; col < indices.size(); ++col) {
        apply(params, indices[col].bits, [&](std::uint32_t t, double amp) {
            const auto it = position.find(t);
            if (it == position.end())
                throw InternalError("Hamiltonian leaves the fermion parity sector");
            block(it->second, col) += amp;
        });
    }
    return ParitySector{parity, std::move(indices), std::move(block)};
}

std::pair<ParitySector, ParitySector> parity_sectors(const DenseOperator& op) {
    const std::size_t dim = op.dim();
    if (dim < 8 || !std::has_single_bit(dim))
        throw ParameterError("operator dimension is not 2^L with L >= 3");
    const int L = std::countr_zero(dim);

    std::vector<SpinBasisIndex> odd;
    std::vector<SpinBasisIndex> even;
    for (std::uint32_t s = 0; s < dim; ++s) {
        const auto idx = SpinBasisIndex::from_bits(s, L);
        (idx.up_count % 2 != 0 ? odd : even).push_back(idx);
    }

    double residual = 0.0;
    for (const auto& r : odd)
        for (const auto& c : even)
            residual = std::max({residual, std::abs(op(r.bits, c.bits)), std::abs(op(c.bits, r.bits))});
    if (residual > 1e-14)
        throw InternalError("parity sectors are coupled (off-block residual " + std::to_string(residual) + ")");

    auto extract = [&](FermionParity p, std::vector<SpinBasisIndex> idx) {
        DenseOperator block(idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                block(r, c) = op(idx[r].bits, idx[c].bits);
        return ParitySector{p, std::move(idx), std::move(block)};
    };
    return {extract(FermionParity::Odd, std::move(odd)), extract(FermionParity::Even, std::move(even))};
}

std::vector<cplx> eigenvalues(const DenseOperator& op) {
    const std::size_t n = op.dim();
    if (n > kEigenCapDim)
        throw CapacityError("dense eigensolve is capped at dimension " + std::to_string(kEigenCapDim) + " (got " +
                            std::to_string(n) + ")");
    // Row-major storage read as column-major is the transpose, which has the same spectrum.
    std::vector<double> a = op.entries();
    std::vector<double> wr(n);
    std::vector<double> wi(n);
    const auto ni = static_cast<lapack_int>(n);
    const lapack_int info =
        LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', ni, a.data(), ni, wr.data(), wi.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw ConvergenceError("dgeev failed with info " + std::to_string(info) + " (" + condition_report(op) + ")");

    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = cplx(wr[i], wi[i]);
    sort_lex(out);
    return out;
}

std::vector<cplx> eigenvalues(const ParitySector& sector) { return eigenvalues(sector.block); }

std::vector<cplx> spectrum(const ModelParams& params) {
    auto odd = eigenvalues(build_sector(params, FermionParity::Odd));
    const auto even = eigenvalues(build_sector(params, FermionParity::Even));
    odd.insert(odd.end(), even.begin(), even.end());
    sort_lex(odd);
    return odd;
}

} // namespace frustra::ed
