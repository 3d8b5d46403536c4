#include "quatsq/integer_squares.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quatsq {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("quatsq: isqrt of negative value");
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

std::optional<FourPowForm> four_pow_form(std::int64_t n) {
    if (n == 0) return std::nullopt;
    int m = 0;
    while (n % 4 == 0) {
        n /= 4;
        ++m;
    }
    // n = 8l + 7 needs n odd with residue 7; C++ % keeps the sign, so
    // normalise before testing.
    const std::int64_t r = ((n % 8) + 8) % 8;
    if (r != 7) return std::nullopt;
    return FourPowForm{m, (n - 7) / 8};
}

bool is_legendre_excluded(std::int64_t n) {
    if (n < 0) return true;
    return four_pow_form(n).has_value();
}

namespace {

// Roots of n = x^2 + y^2 + z^2 with x >= y >= z >= 0, searching x downward.
// Assumes n is not of the excluded form.
std::vector<std::int64_t> three_square_roots(std::int64_t n) {
    if (n == 0) return {};
    // Representations of 4n are exactly doubled representations of n, so
    // strip powers of 4 first; keeps the search radius small.
    std::int64_t scale = 1;
    while (n % 4 == 0) {
        n /= 4;
        scale *= 2;
    }
    for (std::int64_t x = isqrt(n); x >= 0; --x) {
        const std::int64_t rem = n - x * x;
        if (rem > 2 * x * x) break;  // x fell below sqrt(n/3); no x>=y>=z left
        for (std::int64_t y = std::min(x, isqrt(rem)); y >= 0 && 2 * y * y >= rem; --y) {
            const std::int64_t z2 = rem - y * y;
            const std::int64_t z = isqrt(z2);
            if (z * z == z2) {
                std::vector<std::int64_t> roots{x * scale, y * scale, z * scale};
                std::erase(roots, 0);
                return roots;
            }
        }
    }
    throw std::logic_error("quatsq: three-square search exhausted on a representable value");
}

}  // namespace

IntegerSquaresResult three_squares(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("quatsq: three_squares requires n >= 0");
    if (is_legendre_excluded(n)) return {n, {}, IntegerSquaresResult::Status::Excluded};
    return {n, three_square_roots(n), IntegerSquaresResult::Status::Found};
}

IntegerSquaresResult four_squares(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("quatsq: four_squares requires n >= 0");
    for (std::int64_t w = isqrt(n); w >= 0; --w) {
        const std::int64_t rem = n - w * w;
        if (is_legendre_excluded(rem)) continue;
        std::vector<std::int64_t> roots = three_square_roots(rem);
        if (w > 0) roots.push_back(w);
        std::sort(roots.begin(), roots.end(), std::greater<>());
        return {n, std::move(roots), IntegerSquaresResult::Status::Found};
    }
    throw std::logic_error("quatsq: four-square descent failed");  // unreachable for n >= 0
}

}  // namespace quatsq
