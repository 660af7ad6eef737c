#include "zncomb/zn_core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include <fmt/format.h>

namespace zn {

namespace {

constexpr std::size_t word_count(std::size_t bits) {
    return (bits + ResidueSet::kWordBits - 1) / ResidueSet::kWordBits;
}

void require_same_modulus(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
}

// Bit table of length 2n holding the set twice, so that any cyclic rotation
// of the set is a contiguous window. One trailing zero word keeps reads of
// word w + 1 in bounds.
std::vector<ResidueSet::Word> doubled(const ResidueSet& s) {
    const std::size_t n = s.modulus();
    std::vector<ResidueSet::Word> d(word_count(2 * n) + 1, 0);
    for (Residue x : s.members()) {
        const auto i = static_cast<std::size_t>(x);
        d[i / 64] |= ResidueSet::Word{1} << (i % 64);
        d[(i + n) / 64] |= ResidueSet::Word{1} << ((i + n) % 64);
    }
    return d;
}

// ORs the window of `d` starting at bit `offset` into `out`.
void or_window(std::span<const ResidueSet::Word> d, std::size_t offset,
               std::span<ResidueSet::Word> out) {
    const std::size_t shift = offset % 64;
    std::size_t w = offset / 64;
    if (shift == 0) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] |= d[w + j];
        return;
    }
    const std::size_t back = 64 - shift;
    for (std::size_t j = 0; j < out.size(); ++j, ++w) {
        out[j] |= (d[w] >> shift) | (d[w + 1] << back);
    }
}

Residue parse_int(std::string_view text, std::string_view literal) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    Residue value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || text.front() == '-' || text.front() == '+' || ec != std::errc{} ||
        ptr != last) {
        throw std::invalid_argument(fmt::format("malformed set literal '{}'", literal));
    }
    return value;
}

}  // namespace

ModulusMismatch::ModulusMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument(fmt::format("modulus mismatch: Z_{} vs Z_{}", lhs, rhs)) {}

std::size_t gcd(Residue a, std::size_t n) {
    return std::gcd(static_cast<std::size_t>(reduce(a, n == 0 ? 1 : n)), n);
}

bool is_unit(Residue v, std::size_t modulus) { return modulus > 0 && gcd(v, modulus) == 1; }

// ---------------------------------------------------------------- ResidueSet

ResidueSet::ResidueSet(std::size_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be at least 1");
    words_.assign(word_count(modulus), 0);
}

ResidueSet::ResidueSet(std::size_t modulus, std::span<const Residue> members)
    : ResidueSet(modulus) {
    for (Residue x : members) {
        const auto r = static_cast<std::size_t>(reduce(x, modulus_));
        words_[r / kWordBits] |= Word{1} << (r % kWordBits);
    }
    recount();
}

ResidueSet::ResidueSet(std::size_t modulus, std::initializer_list<Residue> members)
    : ResidueSet(modulus, std::span<const Residue>(members.begin(), members.size())) {}

ResidueSet::ResidueSet(std::size_t modulus, std::vector<Word> words, int)
    : modulus_(modulus), words_(std::move(words)) {
    if (modulus == 0) throw std::invalid_argument("modulus must be at least 1");
    words_.resize(word_count(modulus), 0);
    if (const std::size_t tail = modulus % kWordBits; tail != 0) {
        words_.back() &= (Word{1} << tail) - 1;
    }
    recount();
}

ResidueSet ResidueSet::from_words(std::size_t modulus, std::vector<Word> words) {
    return ResidueSet(modulus, std::move(words), 0);
}

ResidueSet ResidueSet::full(std::size_t modulus) {
    return from_words(modulus, std::vector<Word>(word_count(modulus), ~Word{0}));
}

void ResidueSet::recount() {
    size_ = 0;
    for (Word w : words_) size_ += static_cast<std::size_t>(std::popcount(w));
}

std::vector<Residue> ResidueSet::members() const {
    std::vector<Residue> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<Residue>(i * kWordBits + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

// ----------------------------------------------------------------- AffineMap

AffineMap::AffineMap(std::size_t modulus, Residue translation, Residue multiplier)
    : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be at least 1");
    u_ = reduce(translation, modulus);
    v_ = reduce(multiplier, modulus);
    if (!is_unit(v_, modulus)) {
        throw std::invalid_argument(
            fmt::format("multiplier {} is not a unit of Z_{}", multiplier, modulus));
    }
}

Residue AffineMap::operator()(Residue x) const noexcept {
    const auto n = static_cast<Residue>(modulus_);
    return (v_ * reduce(x, modulus_) + u_) % n;
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    if (modulus_ != other.modulus_) throw ModulusMismatch(modulus_, other.modulus_);
    const auto n = static_cast<Residue>(modulus_);
    return {modulus_, (v_ * other.u_ + u_) % n, (v_ * other.v_) % n};
}

AffineMap AffineMap::inverse() const {
    // Extended Euclid for v^{-1} mod n.
    Residue r0 = static_cast<Residue>(modulus_), r1 = v_;
    Residue t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Residue q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const Residue vinv = reduce(t0, modulus_);
    return {modulus_, -vinv * u_, vinv};
}

std::string AffineMap::to_string() const {
    // Multipliers above n/2 print as their negative representative.
    const auto n = static_cast<Residue>(modulus_);
    if (2 * v_ > n) return fmt::format("e^{}.({})", u_, v_ - n);
    return fmt::format("e^{}.{}", u_, v_);
}

// ------------------------------------------------------------------ literals

ResidueSet parse_set(std::string_view literal, std::size_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    std::vector<Residue> members;
    std::string_view rest = literal;
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (rest.empty()) return ResidueSet(modulus);
    rest = literal;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            members.push_back(parse_int(item, literal));
        } else {
            const Residue lo = parse_int(item.substr(0, dash), literal);
            const Residue hi = parse_int(item.substr(dash + 1), literal);
            if (lo > hi) {
                throw std::invalid_argument(
                    fmt::format("descending range {}-{} in '{}'", lo, hi, literal));
            }
            // A range at least n long already covers every residue.
            const Residue stop = std::min(hi, lo + static_cast<Residue>(modulus) - 1);
            for (Residue x = lo; x <= stop; ++x) members.push_back(x);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return ResidueSet(modulus, members);
}

std::string format_set(const ResidueSet& s) {
    const auto m = s.members();
    std::string out;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j + 1 < m.size() && m[j + 1] == m[j] + 1) ++j;
        if (!out.empty()) out += ',';
        out += j > i ? fmt::format("{}-{}", m[i], m[j]) : fmt::format("{}", m[i]);
        i = j + 1;
    }
    return out;
}

// ---------------------------------------------------------------- operations

ResidueSet complement(const ResidueSet& s) {
    std::vector<ResidueSet::Word> w(s.words().begin(), s.words().end());
    for (auto& x : w) x = ~x;
    return ResidueSet::from_words(s.modulus(), std::move(w));
}

ResidueSet affine_image(const AffineMap& g, const ResidueSet& s) {
    if (g.modulus() != s.modulus()) throw ModulusMismatch(g.modulus(), s.modulus());
    std::vector<Residue> image;
    image.reserve(s.size());
    for (Residue x : s.members()) image.push_back(g(x));
    return ResidueSet(s.modulus(), image);
}

ResidueSet dilate(const ResidueSet& s, Residue x) {
    const std::size_t n = s.modulus();
    const Residue f = reduce(x, n);
    std::vector<Residue> image;
    image.reserve(s.size());
    for (Residue y : s.members()) image.push_back((f * y) % static_cast<Residue>(n));
    return ResidueSet(n, image);
}

ResidueSet translate(const ResidueSet& s, Residue u) {
    const std::size_t n = s.modulus();
    const auto shift = static_cast<std::size_t>(reduce(u, n));
    const auto d = doubled(s);
    std::vector<ResidueSet::Word> out(word_count(n), 0);
    or_window(d, n - shift, out);
    return ResidueSet::from_words(n, std::move(out));
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
    require_same_modulus(a, b);
    const std::size_t n = a.modulus();
    const ResidueSet& small = a.size() <= b.size() ? a : b;
    const ResidueSet& large = a.size() <= b.size() ? b : a;
    if (small.empty()) return ResidueSet(n);
    const auto d = doubled(large);
    std::vector<ResidueSet::Word> out(word_count(n), 0);
    // Bit t of the window at offset n - u is large[t - u].
    for (Residue u : small.members()) {
        or_window(d, n - static_cast<std::size_t>(u), out);
    }
    return ResidueSet::from_words(n, std::move(out));
}

ResidueSet difference(const ResidueSet& a, const ResidueSet& b) {
    return sumset(a, dilate(b, -1));
}

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
    require_same_modulus(a, b);
    std::vector<ResidueSet::Word> w(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= b.words()[i];
    return ResidueSet::from_words(a.modulus(), std::move(w));
}

ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b) {
    require_same_modulus(a, b);
    std::vector<ResidueSet::Word> w(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= b.words()[i];
    return ResidueSet::from_words(a.modulus(), std::move(w));
}

ResidueSet subgroup_generated(Residue d, std::size_t modulus) {
    const std::size_t step = gcd(d, modulus);
    std::vector<Residue> members;
    for (std::size_t x = 0; x < modulus; x += step) members.push_back(static_cast<Residue>(x));
    return ResidueSet(modulus, members);
}

Coset smallest_coset(const ResidueSet& s) {
    if (s.empty()) throw std::invalid_argument("smallest coset of the empty set is undefined");
    const std::size_t n = s.modulus();
    const auto m = s.members();
    std::size_t g = n;
    for (Residue x : m) g = std::gcd(g, static_cast<std::size_t>(x - m.front()));
    return {m.front() % static_cast<Residue>(g), subgroup_generated(static_cast<Residue>(g), n)};
}

ResidueSet period(const ResidueSet& s) {
    const std::size_t n = s.modulus();
    // The least positive period divides n; it generates the whole stabilizer.
    for (std::size_t d : divisors(n)) {
        if (translate(s, static_cast<Residue>(d)) == s) {
            return subgroup_generated(static_cast<Residue>(d), n);
        }
    }
    return ResidueSet(n, {0});
}

std::vector<Residue> units(std::size_t modulus) {
    std::vector<Residue> out;
    for (std::size_t x = 0; x < modulus; ++x) {
        if (std::gcd(x, modulus) == 1) out.push_back(static_cast<Residue>(x));
    }
    return out;
}

std::vector<std::size_t> divisors(std::size_t modulus) {
    std::vector<std::size_t> low, high;
    for (std::size_t d = 1; d * d <= modulus; ++d) {
        if (modulus % d != 0) continue;
        low.push_back(d);
        if (d != modulus / d) high.push_back(modulus / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

}  // namespace zn
