#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "quatsq/quaternion.hpp"

// Constructive sum-of-squares algorithms for Q_{a,b}^2 and the dispatcher
// that picks the strongest applicable one.

namespace quatsq {

struct not_in_square_class_error : std::invalid_argument {
    not_in_square_class_error()
        : std::invalid_argument("quatsq: element has an odd pure coefficient (not in Q^2)") {}
};

struct wrong_ring_error : std::invalid_argument {
    explicit wrong_ring_error(const char* what) : std::invalid_argument(what) {}
};

struct search_exhausted_error : std::runtime_error {
    explicit search_exhausted_error(const char* what) : std::runtime_error(what) {}
};

// Book-keeping for the at-most-five-squares algorithm. Writing the target
// as c0 + 2h1 i + 2h2 j + 2h3 k, A = c0 - 1 + a h1^2 + b h2^2 + ab h3^2
// drives the case split.
struct CaseAnalysis {
    enum class Tag { Case1, Case2, Case3m0, Case3mPos };
    std::int64_t A = 0;
    std::int64_t U = 0;                // i-coefficient of the first square's root
    std::optional<std::int64_t> U1;    // case 3 offset
    std::optional<std::int64_t> c;     // case 2 chosen pure-imaginary root
    std::optional<int> e, e1, e2;      // case 2 power-of-four bookkeeping
    std::optional<int> m;              // from A = 4^m (8 ell + 7)
    std::optional<std::int64_t> ell;
    Tag tag = Tag::Case1;
    int retries = 0;  // fallback widenings needed (0 in every observed case)
};

// Every element of Q_{a,b}^2 as a sum of at most five squares.
Decomposition five_squares_general(const Quaternion& alpha, CaseAnalysis* analysis = nullptr);

// At most three squares in Q_{1,b}: peel one square to land in
// Z[sqrt(-1)], then split by the Gaussian two-square solver.
Decomposition three_squares_gaussian_ring(const Quaternion& alpha);

// At most four squares when a = n1^2 + n2^2 with gcd(n1,n2) = 1, or
// gcd(n1,n2) = 2 with a part divisible by 4 and b != 0 mod 4.
Decomposition four_squares_two_square_a(const Quaternion& alpha, std::int64_t n1, std::int64_t n2);

// Chosen residue data for the regular-form three-square algorithm (exposed
// for tests).
struct RegularChoice {
    std::int64_t A = 0;
    std::int64_t s = 0;   // completely-represented class
    std::int64_t y0 = 0;  // integer square root used
};

// At most three squares in Q_{2,2} and Q_{2,3} via the regular ternary
// forms 2x^2+2y^2+4z^2 and 2x^2+3y^2+6z^2.
Decomposition three_squares_regular(const Quaternion& alpha, RegularChoice* choice = nullptr);

// n1 <= n2 with n1^2 + n2^2 = a, preferring gcd 1, else gcd 2 with one
// part divisible by 4; empty when no qualifying representation exists.
std::optional<std::pair<std::int64_t, std::int64_t>> two_square_split(std::int64_t a);

// Routes to the strongest applicable algorithm, transporting through the
// Q_{a,b} ~ Q_{b,a} isomorphism when only the swapped orientation
// qualifies. The result is always verified before being returned.
Decomposition decompose(const Quaternion& alpha);

}  // namespace quatsq
