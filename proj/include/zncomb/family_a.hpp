#pragma once

/**
 * @file family_a.hpp
 * @brief The family A(k) = {0,1} u {3,...,k-1} u {k+2} in Z_2k.
 *
 * Besides the constructor this module checks the structural identities the
 * family is known for, the closed form of its additive energy, the energy
 * table for selected k, and a k-range scan that turns every claimed property
 * into a predicate. A failed predicate is recorded as a Finding carrying a
 * witness; the scan itself never fails on a mathematical surprise.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "zncomb/zn_core.hpp"

namespace zn {

/// Throws std::invalid_argument for k < 3.
ResidueSet build_family_a(std::size_t k);

struct StructuralCheck {
    bool complement_is_translate;  // C(A) == A + k
    bool sumset_full;              // A + A == Z_2k
    bool difference_misses_k;      // A - A == Z_2k \ {k}
};

StructuralCheck structural_check(std::size_t k);

/// (2k^3 - 47k)/3 + 80 in exact integer arithmetic.
std::int64_t energy_closed_form(std::size_t k);

struct Table1Row {
    std::size_t k;
    std::uint64_t energy;      // E(A, A)
    double energy_bound;       // k^4 / E
    double coverage_fraction;  // k^3 / (2E)
};

std::vector<Table1Row> table1(const std::vector<std::size_t>& ks);

struct Finding {
    std::string claim;
    std::size_t k;
    std::string witness;

    bool operator==(const Finding&) const = default;
};

struct ScanRecord {
    std::size_t k;
    bool condf_overall;
    std::vector<Residue> failing_units;
    std::size_t min_sumset_size;
    bool mann_empty;
    bool dichotomy_verdict;
    std::size_t stabilizer_size;
    std::size_t polarity_count;
    std::uint64_t energy;
    bool energy_matches_poly;
    std::vector<Finding> findings;

    bool operator==(const ScanRecord&) const = default;
};

ScanRecord scan_record(std::size_t k);

/// One record per k in [k_min, k_max], ascending, computed on `jobs`
/// worker threads. Output does not depend on `jobs`.
std::vector<ScanRecord> scan(std::size_t k_min, std::size_t k_max, std::size_t jobs = 1);

}  // namespace zn
