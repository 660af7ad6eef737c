#include "zncomb/family_a.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "zncomb/additive_stats.hpp"
#include "zncomb/bounds.hpp"
#include "zncomb/dichotomy.hpp"

namespace zn {

ResidueSet build_family_a(std::size_t k) {
    if (k < 3) throw std::invalid_argument(fmt::format("A(k) needs k >= 3 (got {})", k));
    std::vector<Residue> members{0, 1};
    for (std::size_t x = 3; x < k; ++x) members.push_back(static_cast<Residue>(x));
    members.push_back(static_cast<Residue>(k + 2));
    return ResidueSet(2 * k, members);
}

StructuralCheck structural_check(std::size_t k) {
    const ResidueSet a = build_family_a(k);
    const std::size_t n = 2 * k;
    ResidueSet all_but_k = complement(ResidueSet(n, {static_cast<Residue>(k)}));
    return {
        complement(a) == translate(a, static_cast<Residue>(k)),
        sumset(a, a).is_full(),
        difference(a, a) == all_but_k,
    };
}

std::int64_t energy_closed_form(std::size_t k) {
    const auto kk = static_cast<std::int64_t>(k);
    return (2 * kk * kk * kk - 47 * kk) / 3 + 80;
}

std::vector<Table1Row> table1(const std::vector<std::size_t>& ks) {
    std::vector<Table1Row> rows;
    rows.reserve(ks.size());
    for (std::size_t k : ks) {
        const ResidueSet a = build_family_a(k);
        const std::uint64_t e = additive_energy(a, a);
        const double kd = static_cast<double>(k);
        const double ed = static_cast<double>(e);
        rows.push_back({k, e, kd * kd * kd * kd / ed, kd * kd * kd / (2.0 * ed)});
    }
    return rows;
}

ScanRecord scan_record(std::size_t k) {
    const ResidueSet a = build_family_a(k);
    const std::size_t n = 2 * k;
    const Residue minus_one = static_cast<Residue>(n - 1);
    ScanRecord rec{};
    rec.k = k;
    auto finding = [&](std::string claim, std::string witness) {
        rec.findings.push_back({std::move(claim), k, std::move(witness)});
    };

    const StructuralCheck sc = structural_check(k);
    if (!sc.complement_is_translate) finding("complement_is_translate", "C(A) != A + k");
    if (!sc.sumset_full) {
        finding("sumset_full", fmt::format("|A+A| = {}", sumset(a, a).size()));
    }
    if (!sc.difference_misses_k) {
        finding("difference_misses_k", fmt::format("A-A = {}", format_set(difference(a, a))));
    }
    if (const Coset c = smallest_coset(a); !c.subgroup.is_full()) {
        finding("generating_coset", fmt::format("[A] has subgroup of order {}", c.subgroup.size()));
    }
    if (const ResidueSet p = period(a); p.size() != 1) {
        finding("aperiodic", fmt::format("period {}", format_set(p)));
    }

    const CondfStatus condf = condf_status(a);
    rec.condf_overall = condf.overall;
    rec.min_sumset_size = n;
    const bool generating = smallest_coset(a).subgroup.is_full();
    for (const UnitCoverage& cov : condf.units) {
        rec.min_sumset_size = std::min(rec.min_sumset_size, cov.sumset_size);
        if (!cov.covers) rec.failing_units.push_back(cov.v);
        if (cov.v == minus_one && !cov.covers) {
            finding("difference_with_complement",
                    fmt::format("A - C(A) misses {}", fmt::join(cov.missing, ",")));
        }
        if (cov.sumset_size == n) continue;
        if (generating && 2 * cov.sumset_size < 3 * k) {
            finding("olson", fmt::format("v={} |A+vC(A)|={} < 3k/2", cov.v, cov.sumset_size));
        }
        if (kemperman_translate_check(a, cov.v).finding()) {
            finding("kemperman_translate",
                    fmt::format("v={} not full and no u with vC(A) = u - C(A)", cov.v));
        }
    }

    const auto violations = mann_check(a);
    rec.mann_empty = violations.empty();
    if (!rec.mann_empty) {
        std::vector<std::size_t> gens;
        for (const auto& vi : violations) gens.push_back(vi.generator);
        finding("mann_alternative", fmt::format("violating <d> for d in {}", fmt::join(gens, ",")));
    } else if (rec.min_sumset_size + 1 < n) {
        finding("mann_bound", fmt::format("min |A+vC(A)| = {} < 2k-1", rec.min_sumset_size));
    }

    const DichotomyVerdict dv = is_counterpoint_dichotomy(a);
    rec.dichotomy_verdict = dv.verdict;
    rec.stabilizer_size = dv.stabilizer_size;
    rec.polarity_count = dv.polarity_count;
    if (!dv.verdict) {
        std::string witness = dv.reason;
        if (dv.stabilizer_size > 1) {
            witness += fmt::format(", e.g. {}", affine_stabilizer(a)[1].to_string());
        }
        finding("counterpoint_dichotomy", std::move(witness));
    }

    rec.energy = additive_energy(a, a);
    const std::int64_t poly = energy_closed_form(k);
    rec.energy_matches_poly = poly >= 0 && rec.energy == static_cast<std::uint64_t>(poly);
    if (!rec.energy_matches_poly) {
        finding("energy_closed_form", fmt::format("E(A,A) = {} but polynomial gives {}", rec.energy, poly));
    }
    if (3 * rec.energy > 2 * static_cast<std::uint64_t>(k * k * k)) {
        finding("energy_cubic_bound", fmt::format("E(A,A) = {} > 2k^3/3", rec.energy));
    }
    return rec;
}

std::vector<ScanRecord> scan(std::size_t k_min, std::size_t k_max, std::size_t jobs) {
    if (k_min < 3 || k_min > k_max) {
        throw std::invalid_argument(fmt::format("scan needs 3 <= k_min <= k_max (got {}..{})", k_min, k_max));
    }
    const std::size_t count = k_max - k_min + 1;
    std::vector<ScanRecord> out(count);
    jobs = std::clamp<std::size_t>(jobs, 1, count);
    // Largest k first: per-k cost grows roughly cubically.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            const std::size_t slot = count - 1 - i;
            out[slot] = scan_record(k_min + slot);
        }
    };
    if (jobs == 1) {
        worker();
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    pool.clear();  // joins
    return out;
}

}  // namespace zn
