#include "quatsq/ternary.hpp"

#include "quatsq/integer_squares.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace quatsq {

TernaryDiagonalForm form_22() { return {2, 2, 4}; }
ExclusionPattern pattern_22() { return {{{2, 16, 14}}, {}, true}; }
TernaryDiagonalForm form_23() { return {2, 3, 6}; }
ExclusionPattern pattern_23() { return {{{1, 8, 7}}, {{3, 1}}, false}; }

std::optional<std::array<std::int64_t, 3>> represents(const TernaryDiagonalForm& f, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("quatsq: represents requires n >= 0");
    for (std::int64_t x = 0; f.r * x * x <= n; ++x) {
        const std::int64_t nx = n - f.r * x * x;
        for (std::int64_t y = 0; f.s * y * y <= nx; ++y) {
            const std::int64_t rem = nx - f.s * y * y;
            if (rem % f.t != 0) continue;
            const std::int64_t z2 = rem / f.t;
            const std::int64_t z = isqrt(z2);
            if (z * z == z2) return std::array<std::int64_t, 3>{x, y, z};
        }
    }
    return std::nullopt;
}

bool is_excluded(const ExclusionPattern& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("quatsq: is_excluded requires n >= 1");
    if (p.odd_excluded && n % 2 != 0) return true;
    for (const auto& [mod, res] : p.linear)
        if (n % mod == res % mod) return true;
    for (const GeometricFamily& g : p.geometric) {
        if (n % g.scale != 0) continue;
        // n/c = 4^k (m*l + d)? Test the residue at every 4-adic level.
        for (std::int64_t q = n / g.scale;; q /= 4) {
            if (q % g.modulus == g.residue % g.modulus && q >= g.residue) return true;
            if (q % 4 != 0) break;
        }
    }
    return false;
}

namespace {

// Residue classes mod m that contain at least one member of the family
// {c * 4^k (q*l + d) : k >= 0, l >= 0}. For fixed k the values cover the
// whole coset c*4^k*d + (c*4^k*q)Z mod m; 4^k mod m is eventually periodic,
// so iterating k until it repeats sees every coset.
std::set<std::int64_t> geometric_residues(const GeometricFamily& g, std::int64_t m) {
    std::set<std::int64_t> out;
    std::set<std::int64_t> seen_pow;
    std::int64_t pow = 1 % m;
    while (seen_pow.insert(pow).second) {
        const std::int64_t cpow = (g.scale % m) * pow % m;
        const std::int64_t base = cpow * (g.residue % m) % m;
        const std::int64_t step = std::gcd(cpow * (g.modulus % m) % m, m);
        for (std::int64_t r = base;;) {
            out.insert(r);
            r = (r + step) % m;
            if (r == base) break;
        }
        pow = pow * 4 % m;
    }
    return out;
}

}  // namespace

ResidueSet residue_set(const TernaryDiagonalForm& f, const ExclusionPattern& p, std::int64_t m,
                       std::int64_t validation_bound) {
    if (m < 1) throw std::invalid_argument("quatsq: residue_set requires m >= 1");

    std::set<std::int64_t> excluded;
    if (p.odd_excluded) {
        if (m % 2 != 0) {
            for (std::int64_t c = 0; c < m; ++c) excluded.insert(c);  // every class has odd members
        } else {
            for (std::int64_t c = 1; c < m; c += 2) excluded.insert(c);
        }
    }
    for (const auto& [mod, res] : p.linear) {
        const std::int64_t g = std::gcd(mod, m);
        for (std::int64_t c = 0; c < m; ++c)
            if (c % g == res % g) excluded.insert(c);
    }
    for (const GeometricFamily& fam : p.geometric)
        excluded.merge(geometric_residues(fam, m));

    ResidueSet out;
    out.modulus = m;
    for (std::int64_t c = 0; c < m; ++c)
        if (!excluded.count(c)) out.classes.push_back(c);

    // Cross-validation: every positive member of an included class up to the
    // bound must be represented.
    for (std::int64_t c : out.classes)
        for (std::int64_t n = (c == 0 ? m : c); n <= validation_bound; n += m)
            if (!represents(f, n))
                throw std::logic_error(
                    "quatsq: residue_set mismatch: symbolically included class has an "
                    "unrepresented member");
    return out;
}

}  // namespace quatsq
