#include "quatsq/quaternion.hpp"

#include <charconv>

namespace quatsq {

std::string Quaternion::to_string() const {
    return std::to_string(c0) + "," + std::to_string(c1) + "," + std::to_string(c2) + "," +
           std::to_string(c3);
}

Quaternion add(const Quaternion& p, const Quaternion& q) {
    if (p.ring != q.ring) throw ring_mismatch_error{};
    return {p.ring, checked_add(p.c0, q.c0), checked_add(p.c1, q.c1), checked_add(p.c2, q.c2),
            checked_add(p.c3, q.c3)};
}

Quaternion sub(const Quaternion& p, const Quaternion& q) {
    if (p.ring != q.ring) throw ring_mismatch_error{};
    return {p.ring, checked_sub(p.c0, q.c0), checked_sub(p.c1, q.c1), checked_sub(p.c2, q.c2),
            checked_sub(p.c3, q.c3)};
}

Quaternion mul(const Quaternion& p, const Quaternion& q) {
    if (p.ring != q.ring) throw ring_mismatch_error{};
    const std::int64_t a = p.ring.a, b = p.ring.b;
    const std::int64_t ab = checked_mul(a, b);

    // real: p0 q0 - a p1 q1 - b p2 q2 - ab p3 q3
    std::int64_t real = checked_mul(p.c0, q.c0);
    real = checked_sub(real, checked_mul(a, checked_mul(p.c1, q.c1)));
    real = checked_sub(real, checked_mul(b, checked_mul(p.c2, q.c2)));
    real = checked_sub(real, checked_mul(ab, checked_mul(p.c3, q.c3)));

    // i: p0 q1 + p1 q0 + b (p2 q3 - p3 q2)
    std::int64_t ci = checked_add(checked_mul(p.c0, q.c1), checked_mul(p.c1, q.c0));
    ci = checked_add(ci, checked_mul(b, checked_sub(checked_mul(p.c2, q.c3), checked_mul(p.c3, q.c2))));

    // j: p0 q2 + p2 q0 + a (p3 q1 - p1 q3)
    std::int64_t cj = checked_add(checked_mul(p.c0, q.c2), checked_mul(p.c2, q.c0));
    cj = checked_add(cj, checked_mul(a, checked_sub(checked_mul(p.c3, q.c1), checked_mul(p.c1, q.c3))));

    // k: p0 q3 + p3 q0 + p1 q2 - p2 q1
    std::int64_t ck = checked_add(checked_mul(p.c0, q.c3), checked_mul(p.c3, q.c0));
    ck = checked_add(ck, checked_sub(checked_mul(p.c1, q.c2), checked_mul(p.c2, q.c1)));

    return {p.ring, real, ci, cj, ck};
}

Quaternion square(const Quaternion& q) {
    const std::int64_t a = q.ring.a, b = q.ring.b;
    std::int64_t real = checked_mul(q.c0, q.c0);
    real = checked_sub(real, checked_mul(a, checked_mul(q.c1, q.c1)));
    real = checked_sub(real, checked_mul(b, checked_mul(q.c2, q.c2)));
    real = checked_sub(real, checked_mul(checked_mul(a, b), checked_mul(q.c3, q.c3)));
    const std::int64_t twice0 = checked_mul(2, q.c0);
    return {q.ring, real, checked_mul(twice0, q.c1), checked_mul(twice0, q.c2),
            checked_mul(twice0, q.c3)};
}

bool is_square_class(const Quaternion& q) {
    return q.c1 % 2 == 0 && q.c2 % 2 == 0 && q.c3 % 2 == 0;
}

Quaternion ring_swap(const Quaternion& q) {
    return {q.ring.swapped(), q.c0, q.c2, q.c1, checked_neg(q.c3)};
}

Quaternion parse_quaternion(const RingParams& ring, const std::string& text) {
    std::array<std::int64_t, 4> c{};
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int n = 0; n < 4; ++n) {
        if (n > 0) {
            if (p >= end || *p != ',')
                throw std::invalid_argument("quatsq: expected \"c0,c1,c2,c3\", got \"" + text + "\"");
            ++p;
        }
        auto [next, ec] = std::from_chars(p, end, c[n]);
        if (ec != std::errc{} || next == p)
            throw std::invalid_argument("quatsq: expected \"c0,c1,c2,c3\", got \"" + text + "\"");
        p = next;
    }
    if (p != end)
        throw std::invalid_argument("quatsq: trailing characters in quaternion \"" + text + "\"");
    return {ring, c[0], c[1], c[2], c[3]};
}

const char* method_name(Method m) {
    switch (m) {
        case Method::FiveSquaresGeneral: return "five-squares-general";
        case Method::ThreeSquaresGaussian: return "three-squares-gaussian";
        case Method::FourSquaresTwoSquareSplit: return "four-squares-two-square-split";
        case Method::ThreeSquaresRegular: return "three-squares-regular";
    }
    return "unknown";
}

bool verify_decomposition(const Decomposition& d) {
    Quaternion sum{d.target.ring, 0, 0, 0, 0};
    for (const Quaternion& part : d.parts) {
        if (part.ring != d.target.ring) return false;
        if (part.is_zero()) return false;
        sum = add(sum, square(part));
    }
    return sum == d.target;
}

}  // namespace quatsq
