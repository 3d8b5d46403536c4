#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

// Diagonal ternary quadratic forms f(x,y,z) = r x^2 + s y^2 + t z^2, the
// arithmetic-progression exclusion patterns of the two regular forms used
// here, and the completely-represented residue sets derived from them.

namespace quatsq {

struct TernaryDiagonalForm {
    std::int64_t r = 1, s = 1, t = 1;
    friend bool operator==(const TernaryDiagonalForm&, const TernaryDiagonalForm&) = default;
};

// One family c * 4^n (m*l + d) over all n >= 0 and l >= 0.
struct GeometricFamily {
    std::int64_t scale = 1;    // c
    std::int64_t modulus = 1;  // m
    std::int64_t residue = 0;  // d
};

// Describes exactly the positive integers NOT represented by a form.
struct ExclusionPattern {
    std::vector<GeometricFamily> geometric;
    std::vector<std::pair<std::int64_t, std::int64_t>> linear;  // (modulus, residue) classes
    bool odd_excluded = false;
};

// The two regular forms shipped with the library.
TernaryDiagonalForm form_22();     // 2x^2 + 2y^2 + 4z^2
ExclusionPattern pattern_22();     // misses exactly odd n and 2*4^n(16l+14)
TernaryDiagonalForm form_23();     // 2x^2 + 3y^2 + 6z^2
ExclusionPattern pattern_23();     // misses exactly 4^n(8l+7) and n = 1 mod 3

// First solution of f(x,y,z) = n in lexicographic order over
// 0 <= x <= sqrt(n/r), 0 <= y <= sqrt(n/s), 0 <= z <= sqrt(n/t).
std::optional<std::array<std::int64_t, 3>> represents(const TernaryDiagonalForm& f, std::int64_t n);

// Whether n (>= 1) matches the pattern (i.e. is NOT represented).
bool is_excluded(const ExclusionPattern& p, std::int64_t n);

struct ResidueSet {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> classes;  // sorted ascending
};

// Residue classes mod m whose every positive member avoids the pattern,
// computed symbolically from the pattern and cross-validated by searching
// represents(f, n) for each n <= validation_bound in each included class.
// Throws logic_error when the symbolic and empirical answers disagree.
ResidueSet residue_set(const TernaryDiagonalForm& f, const ExclusionPattern& p, std::int64_t m,
                       std::int64_t validation_bound = 2000);

}  // namespace quatsq
