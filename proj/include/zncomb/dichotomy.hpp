#pragma once

/**
 * @file dichotomy.hpp
 * @brief Affine symmetries of half-density sets in Z_n.
 *
 * A set S with |S| = n/2 is a counterpoint dichotomy when the only affine
 * map fixing it is the identity and exactly one affine map (its polarity)
 * sends it onto its complement. Searches here are exhaustive over the
 * n * phi(n) maps e^u.v, reported in ascending (v, u) order.
 */

#include <optional>
#include <string>
#include <vector>

#include "zncomb/zn_core.hpp"

namespace zn {

/// All e^u.v with e^u.v(S) == S. Always contains the identity.
std::vector<AffineMap> affine_stabilizer(const ResidueSet& s);

/// All e^u.v with e^u.v(S) == C(S). Empty unless |S| == n/2.
std::vector<AffineMap> polarities(const ResidueSet& s);

struct DichotomyVerdict {
    bool verdict;
    std::optional<AffineMap> polarity;  // set when the polarity is unique
    std::size_t stabilizer_size;
    std::size_t polarity_count;
    std::string reason;  // empty when verdict is true
};

DichotomyVerdict is_counterpoint_dichotomy(const ResidueSet& s);

struct UnitCoverage {
    Residue v;
    /// A + v.C(A) equals its target: Z_2k, or Z_2k \ {0} when v == -1.
    bool covers;
    std::size_t sumset_size;
    /// Target residues absent from the sumset, ascending.
    std::vector<Residue> missing;
};

struct CondfStatus {
    std::size_t k;
    std::vector<UnitCoverage> units;  // ascending v
    bool overall;
};

/// Throws std::invalid_argument unless n is even and |A| == n/2.
CondfStatus condf_status(const ResidueSet& a);

struct KempermanCheck {
    bool full;  // A + v.C(A) == Z_n
    /// Least u with v.C(A) == u - C(A), searched only when not full.
    std::optional<Residue> translate_witness;

    /// Not full and no translate found.
    bool finding() const { return !full && !translate_witness; }
};

/// Throws std::invalid_argument unless |A| == n/2 and v is a unit.
KempermanCheck kemperman_translate_check(const ResidueSet& a, Residue v);

}  // namespace zn
