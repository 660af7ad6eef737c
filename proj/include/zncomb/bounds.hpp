#pragma once

// Structure-theorem lower bounds for |A + v.C(A)|: Olson's coset gate,
// Mann's subgroup alternative and a consolidated report for the family A(k).

#include <cstdint>
#include <vector>

#include "zncomb/zn_core.hpp"

namespace zn {

struct OlsonCheck {
    /// U + V != Z_n, [U] == Z_n and V non-empty.
    bool applicable;
    /// |U|/2 + |V|.
    double bound;
    /// |U + V| >= bound; vacuously true when not applicable.
    bool satisfied;
    /// U + V == Z_n, the reason the theorem was not needed.
    bool sumset_full;
};

OlsonCheck olson_check(const ResidueSet& u, const ResidueSet& v);

struct SubgroupViolation {
    /// H = <generator>, generator a divisor of n.
    std::size_t generator;
    std::size_t subgroup_size;
    std::size_t sum_size;  // |S + H|
};

enum class MannThreshold {
    /// |S + H| < |S| + |H| - 1, the theorem's second alternative.
    kTheorem,
    /// |S + H| < |S| + |H| + 1, the looser in-text variant used for A(k).
    kInText,
};

/// Proper subgroups H of Z_n with S + H != Z_n and |S + H| below the
/// threshold. An empty
/// result under kTheorem certifies |S + T| >= |S| + |T| - 1 for every T
/// with S + T != Z_n. Throws std::invalid_argument for empty S.
std::vector<SubgroupViolation> mann_check(const ResidueSet& s,
                                          MannThreshold threshold = MannThreshold::kTheorem);

struct BoundReport {
    std::size_t k;
    Residue v;
    std::size_t actual;  // |A + v.C(A)|
    double ruzsa;        // sqrt(|B| |A - A|)
    double energy;       // k^4 / E(A, A)
    double olson;        // 3k/2
    bool olson_applicable;
    std::int64_t mann;  // 2k - 1
    bool mann_applicable;
    /// max(0, k/2 - error_bound(A, B)): a lower bound on min_t r_{A+B}(t).
    /// Positive values imply A + B == Z_2k.
    double fourier;
    bool full;
    /// Smallest representation count, the quantity `fourier` bounds.
    std::uint64_t min_representation;
    /// Whether the in-text Mann threshold is also free of violations.
    bool mann_intext_empty;

    /// Applicable bounds that exceed the actual value, by name.
    std::vector<std::string> violations() const;
};

/// Throws std::invalid_argument for k < 3 or v not a unit of Z_2k.
BoundReport bound_report(std::size_t k, Residue v);

}  // namespace zn
