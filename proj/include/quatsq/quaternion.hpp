#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in the quaternion rings Q_{a,b}:
//
//   Q_{a,b} = { c0 + c1*i + c2*j + c3*k | cn in Z },  i^2 = -a, j^2 = -b,
//   ij = -ji = k  (and hence k^2 = -ab).
//
// All coefficients are 64-bit integers with overflow detection; arithmetic
// that would wrap throws overflow_error instead.

namespace quatsq {

struct overflow_error : std::overflow_error {
    overflow_error() : std::overflow_error("quatsq: integer overflow in exact arithmetic") {}
};

struct ring_mismatch_error : std::invalid_argument {
    ring_mismatch_error() : std::invalid_argument("quatsq: operands belong to different rings") {}
};

// Checked int64 helpers. Every arithmetic path in the library funnels
// through these; silent wraparound is forbidden.
inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw overflow_error{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw overflow_error{};
    return r;
}
inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw overflow_error{};
    return r;
}
inline std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

// The pair (a,b) of positive integers defining Q_{a,b}.
struct RingParams {
    std::int64_t a = 1;
    std::int64_t b = 1;

    RingParams() = default;
    RingParams(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("quatsq: ring parameters must be positive");
    }
    friend bool operator==(const RingParams&, const RingParams&) = default;

    RingParams swapped() const { return RingParams(b, a); }
};

struct Quaternion {
    RingParams ring;
    std::int64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;  // coefficients of 1, i, j, k

    Quaternion() = default;
    Quaternion(RingParams r, std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z)
        : ring(r), c0(w), c1(x), c2(y), c3(z) {}

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0; }
    bool is_scalar() const { return c1 == 0 && c2 == 0 && c3 == 0; }

    // "c0,c1,c2,c3" (signed decimal, no spaces)
    std::string to_string() const;
};

Quaternion add(const Quaternion& p, const Quaternion& q);
Quaternion sub(const Quaternion& p, const Quaternion& q);

// Bilinear product under i^2 = -a, j^2 = -b, ij = k, ji = -k, k^2 = -ab,
// ik = -a j, ki = a j, jk = b i, kj = -b i.
Quaternion mul(const Quaternion& p, const Quaternion& q);

// q^2 via the closed form: real part c0^2 - a c1^2 - b c2^2 - ab c3^2,
// pure part 2 c0 (c1, c2, c3). Agrees with mul(q, q).
Quaternion square(const Quaternion& q);

// Membership in Q_{a,b}^2 (the additive group generated by squares):
// true iff all three pure coefficients are even.
bool is_square_class(const Quaternion& q);

// Image of q under the isomorphism Q_{a,b} -> Q_{b,a} fixed by
// 1 -> 1, i -> j', j -> i', k -> -k'.
Quaternion ring_swap(const Quaternion& q);

// Parses the "c0,c1,c2,c3" text format; throws std::invalid_argument.
Quaternion parse_quaternion(const RingParams& ring, const std::string& text);

// Tag naming the algorithm that produced a decomposition.
enum class Method {
    FiveSquaresGeneral,
    ThreeSquaresGaussian,
    FourSquaresTwoSquareSplit,
    ThreeSquaresRegular,
};
const char* method_name(Method m);

// A target element together with quaternions whose squares sum to it.
// Zero parts are never stored, so parts.size() is the number of squares used.
struct Decomposition {
    Quaternion target;
    std::vector<Quaternion> parts;
    Method method = Method::FiveSquaresGeneral;
};

// True iff the parts' squares sum to the target, all rings agree and no
// part is zero.
bool verify_decomposition(const Decomposition& d);

}  // namespace quatsq
