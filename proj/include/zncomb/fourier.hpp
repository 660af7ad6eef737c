#pragma once

/**
 * @file fourier.hpp
 * @brief Fourier analysis of indicator functions on Z_n.
 *
 * Coefficients use the normalization
 *
 *     1_S^(xi) = (1/n) * sum_{x in S} conj(exp(2 pi i xi x / n)),
 *
 * so 1_S^(0) = |S|/n and sum_xi |1_S^(xi)|^2 = |S|/n (Parseval).
 * The transform is the direct O(n |S|) sum over a table of n-th roots of
 * unity; no FFT.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "zncomb/additive_stats.hpp"
#include "zncomb/zn_core.hpp"

namespace zn {

struct Spectrum {
    std::size_t modulus;
    std::vector<std::complex<double>> coefficients;

    double magnitude(Residue xi) const {
        return std::abs(coefficients[static_cast<std::size_t>(reduce(xi, modulus))]);
    }
};

Spectrum dft_indicator(const ResidueSet& s);

struct DftReconstruction {
    std::uint64_t value;
    /// Distance of the complex inversion sum from `value`.
    double residual;
};

/// Tolerance on DftReconstruction::residual before reconstruction is
/// treated as a numerical failure.
inline constexpr double kReconstructionTolerance = 1e-6;

/// r_{U+V}(lambda) from the inversion formula, rounded to the nearest
/// integer. Throws std::runtime_error when the residual exceeds
/// kReconstructionTolerance.
std::uint64_t rep_via_dft(const ResidueSet& u, const ResidueSet& v, Residue lambda);
DftReconstruction rep_via_dft_detail(const ResidueSet& u, const ResidueSet& v, Residue lambda);

/// Every r_{U+V}(lambda) at once, sharing the two spectra.
RepProfile rep_profile_via_dft(const ResidueSet& u, const ResidueSet& v);

/// r_{U+V}(lambda) - n/4, defined only for |U| = |V| = n/2.
double error_term(const ResidueSet& u, const ResidueSet& v, Residue lambda);

/// n * sum_{xi=1}^{n-1} |1_U^(xi)| |1_V^(xi)|; dominates |error_term|.
double error_bound(const ResidueSet& u, const ResidueSet& v);

/// 1 / (2k sin(pi xi / 2k)) + 1/k for 1 <= xi <= 2k - 1.
double vinogradov_bound(Residue xi, std::size_t k);

/// sum_{xi=1}^{n-1} |1_S^(xi)|^2 = |S|/n - (|S|/n)^2.
double tail_energy(const ResidueSet& s);

/// sum_{xi=1}^{2k-1} vinogradov_bound(xi, k)^2.
double bound_tail_sum(std::size_t k);

}  // namespace zn
