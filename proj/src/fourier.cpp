#include "zncomb/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace zn {

namespace {

// roots[j] = exp(-2 pi i j / n).
std::vector<std::complex<double>> root_table(std::size_t n) {
    std::vector<std::complex<double>> roots(n);
    for (std::size_t j = 0; j < n; ++j) {
        roots[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) /
                                       static_cast<double>(n));
    }
    return roots;
}

Spectrum transform(const ResidueSet& s, const std::vector<std::complex<double>>& roots) {
    const std::size_t n = s.modulus();
    const auto members = s.members();
    Spectrum out{n, std::vector<std::complex<double>>(n)};
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t xi = 0; xi < n; ++xi) {
        std::complex<double> acc{0.0, 0.0};
        for (Residue x : members) acc += roots[(xi * static_cast<std::size_t>(x)) % n];
        out.coefficients[xi] = acc * scale;
    }
    return out;
}

DftReconstruction invert_at(const Spectrum& su, const Spectrum& sv,
                            const std::vector<std::complex<double>>& roots, std::size_t lambda) {
    const std::size_t n = su.modulus;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t xi = 0; xi < n; ++xi) {
        acc += std::conj(su.coefficients[xi] * sv.coefficients[xi]) * roots[(xi * lambda) % n];
    }
    acc *= static_cast<double>(n);
    const double rounded = std::round(acc.real());
    const auto value = rounded < 0 ? std::uint64_t{0} : static_cast<std::uint64_t>(rounded);
    return {value, std::abs(acc - static_cast<double>(value))};
}

void require_same_modulus(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
}

std::uint64_t checked(const DftReconstruction& r, Residue lambda) {
    if (r.residual > kReconstructionTolerance) {
        throw std::runtime_error(fmt::format(
            "inverse DFT at lambda={} left residual {:.3e}", lambda, r.residual));
    }
    return r.value;
}

}  // namespace

Spectrum dft_indicator(const ResidueSet& s) { return transform(s, root_table(s.modulus())); }

DftReconstruction rep_via_dft_detail(const ResidueSet& u, const ResidueSet& v, Residue lambda) {
    require_same_modulus(u, v);
    const auto roots = root_table(u.modulus());
    return invert_at(transform(u, roots), transform(v, roots), roots,
                     static_cast<std::size_t>(reduce(lambda, u.modulus())));
}

std::uint64_t rep_via_dft(const ResidueSet& u, const ResidueSet& v, Residue lambda) {
    return checked(rep_via_dft_detail(u, v, lambda), lambda);
}

RepProfile rep_profile_via_dft(const ResidueSet& u, const ResidueSet& v) {
    require_same_modulus(u, v);
    const std::size_t n = u.modulus();
    const auto roots = root_table(n);
    const Spectrum su = transform(u, roots);
    const Spectrum sv = transform(v, roots);
    RepProfile out{n, std::vector<std::uint64_t>(n)};
    for (std::size_t t = 0; t < n; ++t) {
        out.counts[t] = checked(invert_at(su, sv, roots, t), static_cast<Residue>(t));
    }
    return out;
}

double error_term(const ResidueSet& u, const ResidueSet& v, Residue lambda) {
    require_same_modulus(u, v);
    const std::size_t n = u.modulus();
    if (n % 2 != 0 || u.size() * 2 != n || v.size() * 2 != n) {
        throw std::invalid_argument(fmt::format(
            "error_term needs |U| = |V| = n/2 (got |U|={}, |V|={}, n={})", u.size(), v.size(), n));
    }
    std::uint64_t count = 0;
    for (Residue a : u.members()) count += v.contains(lambda - a) ? 1 : 0;
    return static_cast<double>(count) - static_cast<double>(n) / 4.0;
}

double error_bound(const ResidueSet& u, const ResidueSet& v) {
    require_same_modulus(u, v);
    const std::size_t n = u.modulus();
    const auto roots = root_table(n);
    const Spectrum su = transform(u, roots);
    const Spectrum sv = u == v ? su : transform(v, roots);
    double sum = 0.0;
    for (std::size_t xi = 1; xi < n; ++xi) {
        sum += std::abs(su.coefficients[xi]) * std::abs(sv.coefficients[xi]);
    }
    return static_cast<double>(n) * sum;
}

double vinogradov_bound(Residue xi, std::size_t k) {
    const auto n = static_cast<Residue>(2 * k);
    if (k == 0 || xi < 1 || xi > n - 1) {
        throw std::invalid_argument(
            fmt::format("vinogradov_bound needs 1 <= xi <= 2k-1 (xi={}, k={})", xi, k));
    }
    const double kd = static_cast<double>(k);
    return 1.0 / (2.0 * kd * std::sin(std::numbers::pi * static_cast<double>(xi) / (2.0 * kd))) +
           1.0 / kd;
}

double tail_energy(const ResidueSet& s) {
    const Spectrum sp = dft_indicator(s);
    double sum = 0.0;
    for (std::size_t xi = 1; xi < sp.modulus; ++xi) sum += std::norm(sp.coefficients[xi]);
    return sum;
}

double bound_tail_sum(std::size_t k) {
    double sum = 0.0;
    for (std::size_t xi = 1; xi < 2 * k; ++xi) {
        const double b = vinogradov_bound(static_cast<Residue>(xi), k);
        sum += b * b;
    }
    return sum;
}

}  // namespace zn
