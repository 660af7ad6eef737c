#include "zncomb/dichotomy.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace zn {

namespace {

void require_half(const ResidueSet& s, const char* what) {
    if (s.modulus() % 2 != 0 || 2 * s.size() != s.modulus()) {
        throw std::invalid_argument(fmt::format("{} needs |A| = n/2 (got |A|={}, n={})", what,
                                                s.size(), s.modulus()));
    }
}

// Maps e^u.v sending `source` into `target`, assuming |source| == |target|.
// For a fixed v the first member s0 pins u to target - v*s0, leaving
// |target| candidates per unit.
std::vector<AffineMap> maps_onto(const ResidueSet& source, const ResidueSet& target) {
    const std::size_t n = source.modulus();
    const auto m = static_cast<Residue>(n);
    std::vector<AffineMap> out;
    if (source.size() != target.size()) return out;
    const auto src = source.members();
    const auto dst = target.members();
    std::vector<Residue> candidates;
    for (Residue v : units(n)) {
        if (src.empty()) {
            for (Residue u = 0; u < m; ++u) out.emplace_back(n, u, v);
            continue;
        }
        candidates.clear();
        const Residue image0 = (v * src.front()) % m;
        for (Residue t : dst) candidates.push_back(reduce(t - image0, n));
        std::sort(candidates.begin(), candidates.end());
        for (Residue u : candidates) {
            const bool ok = std::all_of(src.begin() + 1, src.end(), [&](Residue x) {
                return target.contains((v * x + u) % m);
            });
            if (ok) out.emplace_back(n, u, v);
        }
    }
    return out;
}

}  // namespace

std::vector<AffineMap> affine_stabilizer(const ResidueSet& s) { return maps_onto(s, s); }

std::vector<AffineMap> polarities(const ResidueSet& s) {
    if (2 * s.size() != s.modulus()) return {};
    return maps_onto(s, complement(s));
}

DichotomyVerdict is_counterpoint_dichotomy(const ResidueSet& s) {
    const auto stab = affine_stabilizer(s);
    const auto pol = polarities(s);
    DichotomyVerdict out{false, std::nullopt, stab.size(), pol.size(), {}};
    if (2 * s.size() != s.modulus()) {
        out.reason = fmt::format("|S| = {} is not n/2 = {}/2", s.size(), s.modulus());
        return out;
    }
    if (pol.size() == 1) out.polarity = pol.front();
    if (stab.size() != 1) {
        out.reason = fmt::format("stabilizer has {} maps", stab.size());
    } else if (pol.size() != 1) {
        out.reason = fmt::format("{} polarities", pol.size());
    } else {
        out.verdict = true;
    }
    return out;
}

CondfStatus condf_status(const ResidueSet& a) {
    require_half(a, "condf_status");
    const std::size_t n = a.modulus();
    const ResidueSet comp = complement(a);
    CondfStatus out{n / 2, {}, true};
    for (Residue v : units(n)) {
        const ResidueSet sum = sumset(a, dilate(comp, v));
        const bool minus_one = v == reduce(-1, n);
        UnitCoverage cov{v, true, sum.size(), {}};
        for (Residue t = minus_one ? 1 : 0; t < static_cast<Residue>(n); ++t) {
            if (!sum.contains(t)) cov.missing.push_back(t);
        }
        // For v = -1 the target excludes 0, which must then be absent too.
        cov.covers = cov.missing.empty() && !(minus_one && sum.contains(0));
        out.overall = out.overall && cov.covers;
        out.units.push_back(std::move(cov));
    }
    return out;
}

KempermanCheck kemperman_translate_check(const ResidueSet& a, Residue v) {
    require_half(a, "kemperman_translate_check");
    const std::size_t n = a.modulus();
    if (!is_unit(v, n)) throw std::invalid_argument(fmt::format("{} is not a unit of Z_{}", v, n));
    const ResidueSet comp = complement(a);
    const ResidueSet target = dilate(comp, v);
    KempermanCheck out{sumset(a, target).is_full(), std::nullopt};
    if (out.full) return out;
    // u - C(A) == target forces u = t + c0 for some t in target, c0 = min C(A).
    const ResidueSet negated = dilate(comp, -1);
    const Residue c0 = comp.members().front();
    std::vector<Residue> candidates;
    for (Residue t : target.members()) candidates.push_back(reduce(t + c0, n));
    std::sort(candidates.begin(), candidates.end());
    const auto neg = negated.members();
    for (Residue u : candidates) {
        const bool ok = std::all_of(neg.begin(), neg.end(),
                                    [&](Residue x) { return target.contains(x + u); });
        if (ok) {
            out.translate_witness = u;
            break;
        }
    }
    return out;
}

}  // namespace zn
