#pragma once

// Brute-force exact diagonalization of the spin Hamiltonian on the full 2^L basis.
//
// Basis convention: bit j of a state index is 1 when spin j points down.
// The Jordan-Wigner fermion number is therefore the number of up spins.

#include <cstdint>
#include <utility>
#include <vector>

#include "frustra/model.hpp"

namespace frustra::ed {

inline constexpr int kDenseCapL = 14;
inline constexpr std::size_t kEigenCapDim = 4096;

struct SpinBasisIndex {
    std::uint32_t bits;
    int up_count;

    static SpinBasisIndex from_bits(std::uint32_t bits, int L) noexcept;
};

// Real, row-major. The model has only real matrix elements: the imaginary
// coupling multiplies imaginary sigma^y entries.
class DenseOperator {
public:
    explicit DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * dim_ + col]; }
    double& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * dim_ + col]; }
    const std::vector<double>& entries() const noexcept { return entries_; }

    double trace() const noexcept;
    bool is_symmetric(double tol = 0.0) const noexcept;

private:
    std::size_t dim_;
    std::vector<double> entries_;
};

struct ParitySector {
    FermionParity parity;
    std::vector<SpinBasisIndex> indices;
    DenseOperator block;
};

// Throws CapacityError for L > kDenseCapL.
DenseOperator build_hamiltonian(const ModelParams& params);

// Builds one parity block directly, without the full 2^L matrix.
ParitySector build_sector(const ModelParams& params, FermionParity parity);

// Splits a full operator into (odd, even) blocks of up-spin count parity.
// Throws InternalError if any matrix element connects the two sectors.
std::pair<ParitySector, ParitySector> parity_sectors(const DenseOperator& op);

// General real nonsymmetric eigensolve, sorted by (Re, Im).
// Throws CapacityError above kEigenCapDim and ConvergenceError on failure.
std::vector<cplx> eigenvalues(const DenseOperator& op);
std::vector<cplx> eigenvalues(const ParitySector& sector);

// Union of both sector spectra, sorted by (Re, Im).
std::vector<cplx> spectrum(const ModelParams& params);

} // namespace frustra::ed
