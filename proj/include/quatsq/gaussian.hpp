#pragma once

#include <cstdint>
#include <optional>
#include <string>

// Sums of two squares in the Gaussian integers Z[sqrt(-1)].
//
// The target is always of the form a0 + 2*a1*sqrt(-1) (sums of two Gaussian
// squares have even imaginary part). Writing x^2 + y^2 = (x + iy)(x - iy)
// with i = sqrt(-1), every representation corresponds to a divisor pair
// u*v of the target with u = v mod 2, so the solver enumerates Gaussian
// divisor pairs; the enumeration is complete and deterministic.

namespace quatsq {

struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
    std::string to_string() const;
};

GaussianInt gadd(GaussianInt u, GaussianInt v);
GaussianInt gsub(GaussianInt u, GaussianInt v);
GaussianInt gmul(GaussianInt u, GaussianInt v);
GaussianInt gconj(GaussianInt u);
std::int64_t gnorm(GaussianInt u);

// Exact quotient u / v when v divides u; empty otherwise.
std::optional<GaussianInt> gdiv_exact(GaussianInt u, GaussianInt v);

struct GaussianPair {
    GaussianInt x, y;  // x^2 + y^2 equals the requested target
};

// Solves x^2 + y^2 = a0 + 2*a1*sqrt(-1).
//
// Returns empty (NotCovered) when a0 is even and a0/2 and a1 are both odd:
// the two-square criterion gives no guarantee there, and indeed no divisor
// pair exists. In every other case a representation exists and is returned;
// failure to find one then indicates a bug and throws logic_error.
std::optional<GaussianPair> gaussian_two_squares(std::int64_t a0, std::int64_t a1);

}  // namespace quatsq
