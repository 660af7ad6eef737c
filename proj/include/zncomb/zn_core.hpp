#pragma once

/**
 * @file zn_core.hpp
 * @brief Residue sets in the cyclic group Z_n.
 *
 * A ResidueSet is a dense bit table over [0, n) tagged with its modulus.
 * Every binary operation checks that the moduli agree and throws
 * ModulusMismatch otherwise. Values are never mutated after construction,
 * so they can be shared freely between threads.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace zn {

using Residue = std::int64_t;

class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(std::size_t lhs, std::size_t rhs);
};

/// Reduces any integer into [0, n).
constexpr Residue reduce(Residue x, std::size_t n) {
    const auto m = static_cast<Residue>(n);
    x %= m;
    return x < 0 ? x + m : x;
}

std::size_t gcd(Residue a, std::size_t n);

class ResidueSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    /// Empty subset of Z_n. Throws std::invalid_argument when n == 0.
    explicit ResidueSet(std::size_t modulus);

    /// Members are reduced mod n; duplicates are ignored.
    ResidueSet(std::size_t modulus, std::span<const Residue> members);
    ResidueSet(std::size_t modulus, std::initializer_list<Residue> members);

    /// Adopts a raw word table; bits at or above n are cleared.
    static ResidueSet from_words(std::size_t modulus, std::vector<Word> words);
    static ResidueSet full(std::size_t modulus);

    std::size_t modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool is_full() const noexcept { return size_ == modulus_; }

    bool contains(Residue x) const noexcept {
        const auto r = static_cast<std::size_t>(reduce(x, modulus_));
        return (words_[r / kWordBits] >> (r % kWordBits)) & 1U;
    }

    /// Ascending list of members.
    std::vector<Residue> members() const;
    std::span<const Word> words() const noexcept { return words_; }

    bool operator==(const ResidueSet&) const = default;

private:
    ResidueSet(std::size_t modulus, std::vector<Word> words, int);
    void recount();

    std::size_t modulus_;
    std::vector<Word> words_;
    std::size_t size_ = 0;
};

/// The affine bijection e^u.v : x -> v*x + u of Z_n (v must be a unit).
class AffineMap {
public:
    /// Throws std::invalid_argument unless gcd(v, n) == 1.
    AffineMap(std::size_t modulus, Residue translation, Residue multiplier);

    static AffineMap identity(std::size_t modulus) { return {modulus, 0, 1}; }

    std::size_t modulus() const noexcept { return modulus_; }
    Residue translation() const noexcept { return u_; }
    Residue multiplier() const noexcept { return v_; }

    Residue operator()(Residue x) const noexcept;

    /// (*this o other)(x) == (*this)(other(x)).
    AffineMap compose(const AffineMap& other) const;
    AffineMap inverse() const;
    bool is_identity() const noexcept { return u_ == 0 && v_ == reduce(1, modulus_); }

    /// "e^{u}.{v}" with u in [0, n) and v in (-n/2, n/2]; a negative v is
    /// parenthesized, e.g. "e^2.5" and "e^1.(-1)" in Z_6.
    std::string to_string() const;

    bool operator==(const AffineMap&) const = default;
    auto operator<=>(const AffineMap& rhs) const {
        return std::tie(modulus_, v_, u_) <=> std::tie(rhs.modulus_, rhs.v_, rhs.u_);
    }

private:
    std::size_t modulus_;
    Residue u_;
    Residue v_;
};

// Set literals: SET := ITEM (',' ITEM)*, ITEM := INT | INT '-' INT.

/// Throws std::invalid_argument on a malformed literal or modulus < 1.
ResidueSet parse_set(std::string_view literal, std::size_t modulus);

/// Ascending, comma separated, runs of two or more collapsed to "a-b".
std::string format_set(const ResidueSet& s);

ResidueSet complement(const ResidueSet& s);
ResidueSet affine_image(const AffineMap& g, const ResidueSet& s);
ResidueSet dilate(const ResidueSet& s, Residue x);
ResidueSet translate(const ResidueSet& s, Residue u);
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
/// a - b == sumset(a, dilate(b, -1)).
ResidueSet difference(const ResidueSet& a, const ResidueSet& b);
ResidueSet set_union(const ResidueSet& a, const ResidueSet& b);
ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b);

ResidueSet subgroup_generated(Residue d, std::size_t modulus);

struct Coset {
    Residue representative;
    ResidueSet subgroup;
};

/// [S]: the coset of the smallest subgroup containing a translate of S.
/// The representative is reduced modulo the subgroup's generator.
/// Throws std::invalid_argument for the empty set.
Coset smallest_coset(const ResidueSet& s);

/// Stabilizer {h : S + h == S}. The empty set is stabilized by all of Z_n.
ResidueSet period(const ResidueSet& s);

/// Residues coprime to n, ascending.
std::vector<Residue> units(std::size_t modulus);

/// Positive divisors of n, ascending.
std::vector<std::size_t> divisors(std::size_t modulus);

bool is_unit(Residue v, std::size_t modulus);

}  // namespace zn
