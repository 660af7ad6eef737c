#include "zncomb/additive_stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zn {

namespace {

void require_nonempty(const ResidueSet& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty operand");
}

std::uint64_t dot(const RepProfile& a, const RepProfile& b) {
    std::uint64_t sum = 0;
    for (std::size_t t = 0; t < a.counts.size(); ++t) sum += a.counts[t] * b.counts[t];
    return sum;
}

}  // namespace

std::uint64_t RepProfile::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ResidueSet RepProfile::support() const {
    std::vector<Residue> members;
    for (std::size_t t = 0; t < counts.size(); ++t) {
        if (counts[t] > 0) members.push_back(static_cast<Residue>(t));
    }
    return ResidueSet(modulus, members);
}

RepProfile rep_function(const ResidueSet& u, const ResidueSet& v) {
    if (u.modulus() != v.modulus()) throw ModulusMismatch(u.modulus(), v.modulus());
    const std::size_t n = u.modulus();
    RepProfile out{n, std::vector<std::uint64_t>(n, 0)};
    const auto um = u.members();
    const auto vm = v.members();
    for (Residue a : um) {
        const auto base = static_cast<std::size_t>(a);
        for (Residue b : vm) {
            std::size_t t = base + static_cast<std::size_t>(b);
            if (t >= n) t -= n;
            ++out.counts[t];
        }
    }
    return out;
}

std::uint64_t additive_energy(const ResidueSet& u, const ResidueSet& v) {
    if (u.modulus() != v.modulus()) throw ModulusMismatch(u.modulus(), v.modulus());
    const RepProfile ru = rep_function(u, u);
    if (u == v) return dot(ru, ru);
    return dot(ru, rep_function(v, v));
}

std::uint64_t mixed_energy(const ResidueSet& u, const ResidueSet& v) {
    const RepProfile r = rep_function(u, v);
    return dot(r, r);
}

double ruzsa_distance(const ResidueSet& u, const ResidueSet& v) {
    require_nonempty(u, "ruzsa_distance");
    require_nonempty(v, "ruzsa_distance");
    const auto diff = static_cast<double>(difference(u, v).size());
    return std::log(diff / std::sqrt(static_cast<double>(u.size()) * static_cast<double>(v.size())));
}

double doubling_constant(const ResidueSet& u) {
    require_nonempty(u, "doubling_constant");
    return static_cast<double>(sumset(u, u).size()) / static_cast<double>(u.size());
}

double energy_sum_bound(const ResidueSet& u, const ResidueSet& v) {
    require_nonempty(u, "energy_sum_bound");
    require_nonempty(v, "energy_sum_bound");
    const double product = static_cast<double>(u.size()) * static_cast<double>(v.size());
    return product * product / static_cast<double>(mixed_energy(u, v));
}

double ruzsa_sum_bound(const ResidueSet& u, const ResidueSet& v) {
    require_nonempty(u, "ruzsa_sum_bound");
    require_nonempty(v, "ruzsa_sum_bound");
    return std::sqrt(static_cast<double>(u.size()) *
                     static_cast<double>(difference(v, v).size()));
}

}  // namespace zn
