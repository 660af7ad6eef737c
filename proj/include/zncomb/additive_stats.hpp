#pragma once

// Representation counts, additive energy and Ruzsa-type cardinality bounds.

#include <cstdint>
#include <vector>

#include "zncomb/zn_core.hpp"

namespace zn {

/// counts[t] = #{(u, v) in U x V : u + v == t (mod n)}.
struct RepProfile {
    std::size_t modulus;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    /// The set of t with counts[t] > 0, i.e. U + V.
    ResidueSet support() const;
};

RepProfile rep_function(const ResidueSet& u, const ResidueSet& v);

/// E(U, V) = #{(u1, u2, v3, v4) : u1 + u2 == v3 + v4}, evaluated as
/// sum_t r_{U+U}(t) * r_{V+V}(t).
std::uint64_t additive_energy(const ResidueSet& u, const ResidueSet& v);

/// #{(u1, v1, u2, v2) : u1 + v1 == u2 + v2} = sum_t r_{U+V}(t)^2.
/// Coincides with additive_energy when U == V, and is the quantity that
/// controls both |U + V| and |U - V| through Cauchy-Schwarz.
std::uint64_t mixed_energy(const ResidueSet& u, const ResidueSet& v);

/// log(|U - V| / sqrt(|U||V|)), natural log. Throws on empty operands.
double ruzsa_distance(const ResidueSet& u, const ResidueSet& v);

/// |U + U| / |U|.
double doubling_constant(const ResidueSet& u);

/// (|U||V|)^2 / mixed_energy(U, V); never exceeds |U + V| or |U - V|.
double energy_sum_bound(const ResidueSet& u, const ResidueSet& v);

/// sqrt(|U| * |V - V|); never exceeds |U + V|.
double ruzsa_sum_bound(const ResidueSet& u, const ResidueSet& v);

}  // namespace zn
