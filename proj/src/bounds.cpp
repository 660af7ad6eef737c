#include "zncomb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "zncomb/additive_stats.hpp"
#include "zncomb/family_a.hpp"
#include "zncomb/fourier.hpp"

namespace zn {

OlsonCheck olson_check(const ResidueSet& u, const ResidueSet& v) {
    if (u.modulus() != v.modulus()) throw ModulusMismatch(u.modulus(), v.modulus());
    if (u.empty()) throw std::invalid_argument("olson_check: empty U");
    const std::size_t sum_size = sumset(u, v).size();
    const bool full = sum_size == u.modulus();
    const bool generating = smallest_coset(u).subgroup.is_full();
    OlsonCheck out{};
    out.sumset_full = full;
    // The theorem says nothing about an empty V.
    out.applicable = !full && generating && !v.empty();
    out.bound = static_cast<double>(u.size()) / 2.0 + static_cast<double>(v.size());
    out.satisfied = !out.applicable || static_cast<double>(sum_size) >= out.bound;
    return out;
}

std::vector<SubgroupViolation> mann_check(const ResidueSet& s, MannThreshold threshold) {
    if (s.empty()) throw std::invalid_argument("mann_check: empty set");
    const std::size_t n = s.modulus();
    std::vector<SubgroupViolation> out;
    for (std::size_t d : divisors(n)) {
        if (d == 1) continue;  // <1> is the whole group
        // The in-text variant only concerns non-trivial subgroups.
        if (d == n && threshold == MannThreshold::kInText) continue;
        const ResidueSet h = subgroup_generated(static_cast<Residue>(d), n);
        const std::size_t sum = sumset(s, h).size();
        // Both thresholds compared without unsigned underflow.
        const bool violates = threshold == MannThreshold::kTheorem
                                  ? sum + 1 < s.size() + h.size()
                                  : sum < s.size() + h.size() + 1;
        // A subgroup with S + H = G cannot be the period of a proper sumset.
        if (violates && sum < n) out.push_back({d, h.size(), sum});
    }
    return out;
}

std::vector<std::string> BoundReport::violations() const {
    std::vector<std::string> out;
    const auto act = static_cast<double>(actual);
    if (ruzsa > act) out.emplace_back("ruzsa");
    if (energy > act) out.emplace_back("energy");
    if (olson_applicable && olson > act) out.emplace_back("olson");
    if (mann_applicable && mann > static_cast<std::int64_t>(actual)) out.emplace_back("mann");
    if (fourier > static_cast<double>(min_representation)) out.emplace_back("fourier");
    return out;
}

BoundReport bound_report(std::size_t k, Residue v) {
    if (k < 3) throw std::invalid_argument(fmt::format("bound_report needs k >= 3 (got {})", k));
    const std::size_t n = 2 * k;
    if (!is_unit(v, n)) {
        throw std::invalid_argument(fmt::format("{} is not a unit of Z_{}", v, n));
    }
    const ResidueSet a = build_family_a(k);
    const ResidueSet b = dilate(complement(a), v);
    const RepProfile reps = rep_function(a, b);
    const ResidueSet sum = reps.support();
    const OlsonCheck olson = olson_check(a, b);
    const double kd = static_cast<double>(k);

    BoundReport r{};
    r.k = k;
    r.v = reduce(v, n);
    r.actual = sum.size();
    r.full = sum.is_full();
    r.ruzsa = ruzsa_sum_bound(b, a);
    r.energy = kd * kd * kd * kd / static_cast<double>(additive_energy(a, a));
    r.olson = olson.bound;
    r.olson_applicable = olson.applicable;
    r.mann = 2 * static_cast<std::int64_t>(k) - 1;
    r.mann_applicable = mann_check(a).empty();
    r.mann_intext_empty = mann_check(a, MannThreshold::kInText).empty();
    // error_bound(A, v.C(A)) >= k/2 by Cauchy-Schwarz, with equality for
    // v = +-1; rounding can leave a positive residue of order 1e-15.
    const double slack = kd / 2.0 - error_bound(a, b);
    r.fourier = slack > 1e-9 * kd ? slack : 0.0;
    r.min_representation = *std::min_element(reps.counts.begin(), reps.counts.end());
    return r;
}

}  // namespace zn
