#include "quatsq/decompose.hpp"

#include "quatsq/gaussian.hpp"
#include "quatsq/integer_squares.hpp"
#include "quatsq/ternary.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace quatsq {

namespace {

constexpr int kRetryCap = 10000;

std::int64_t mod_pos(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

struct Halves {
    std::int64_t h1 = 0, h2 = 0, h3 = 0;  // half pure coefficients
};

Halves halves_of(const Quaternion& q) {
    if (!is_square_class(q)) throw not_in_square_class_error{};
    return {q.c1 / 2, q.c2 / 2, q.c3 / 2};
}

// c0 - 1 + a h1^2 + b h2^2 + ab h3^2, the scalar left after peeling the
// canonical first square.
std::int64_t base_remainder(const Quaternion& q, const Halves& h) {
    const std::int64_t a = q.ring.a, b = q.ring.b;
    std::int64_t A = checked_sub(q.c0, 1);
    A = checked_add(A, checked_mul(a, checked_mul(h.h1, h.h1)));
    A = checked_add(A, checked_mul(b, checked_mul(h.h2, h.h2)));
    A = checked_add(A, checked_mul(checked_mul(a, b), checked_mul(h.h3, h.h3)));
    return A;
}

void push_scalar_roots(std::vector<Quaternion>& parts, const RingParams& ring,
                       const std::vector<std::int64_t>& roots) {
    for (std::int64_t r : roots) parts.push_back({ring, r, 0, 0, 0});
}

Decomposition finish(const Quaternion& target, Method method, std::vector<Quaternion> parts) {
    std::erase_if(parts, [](const Quaternion& q) { return q.is_zero(); });
    Decomposition d{target, std::move(parts), method};
    if (!verify_decomposition(d))
        throw std::logic_error("quatsq: decomposition failed verification");
    return d;
}

}  // namespace

Decomposition five_squares_general(const Quaternion& alpha, CaseAnalysis* analysis) {
    if (!is_square_class(alpha)) throw not_in_square_class_error{};
    if (alpha.is_zero()) return {alpha, {}, Method::FiveSquaresGeneral};

    const Halves h = halves_of(alpha);
    const std::int64_t a = alpha.ring.a;
    const std::int64_t A = base_remainder(alpha, h);
    CaseAnalysis ca;
    ca.A = A;

    auto done = [&](std::vector<Quaternion> parts) {
        Decomposition d = finish(alpha, Method::FiveSquaresGeneral, std::move(parts));
        if (analysis) *analysis = ca;
        return d;
    };

    if (A >= 0) {
        // Case 1: v = 1 + h1 i + h2 j + h3 k leaves exactly A.
        ca.tag = CaseAnalysis::Tag::Case1;
        ca.U = h.h1;
        std::vector<Quaternion> parts{{alpha.ring, 1, h.h1, h.h2, h.h3}};
        push_scalar_roots(parts, alpha.ring, four_squares(A).squares);
        return done(std::move(parts));
    }

    const auto form = four_pow_form(A);
    if (!form) {
        // Case 2: A < 0 but not 4^m(8l+7). v leaves A; add w = c i so that
        // A + a c^2 is a nonnegative three-square value. The first candidate
        // is 4^e with e = max(e1+1, e2); after that c scans upward from the
        // smallest value making the remainder nonnegative.
        ca.tag = CaseAnalysis::Tag::Case2;
        ca.U = h.h1;
        int e1 = 0;
        for (std::int64_t t = A; t % 4 == 0; t /= 4) ++e1;
        int e2 = 0;
        for (std::int64_t pw = 1; checked_add(checked_mul(pw, pw), A) < 0; pw = checked_mul(pw, 4))
            ++e2;
        const int e = std::max(e1 + 1, e2);
        ca.e = e;
        ca.e1 = e1;
        ca.e2 = e2;
        std::int64_t first = 1;
        for (int t = 0; t < e; ++t) first = checked_mul(first, 4);
        std::int64_t scan = isqrt((-A) / a);
        while (checked_mul(a, checked_mul(scan, scan)) < -A) ++scan;

        const Quaternion v{alpha.ring, 1, h.h1, h.h2, h.h3};
        for (int tries = 0;; ++tries) {
            if (tries >= kRetryCap)
                throw search_exhausted_error("quatsq: case-2 candidate scan exceeded the retry cap");
            std::int64_t c;
            if (tries == 0) {
                c = first;
            } else {
                if (scan == first) ++scan;
                c = scan++;
            }
            ca.retries = tries;
            const std::int64_t rem = checked_add(A, checked_mul(a, checked_mul(c, c)));
            if (rem < 0 || is_legendre_excluded(rem)) continue;
            std::vector<Quaternion> parts{v};
            if (c != 0) parts.push_back({alpha.ring, 0, c, 0, 0});
            push_scalar_roots(parts, alpha.ring, three_squares(rem).squares);
            ca.c = c;
            return done(std::move(parts));
        }
    }

    const int m = form->m;
    ca.m = m;
    ca.ell = form->ell;
    if (m > 0) {
        // Case 3, m > 0: U = h1 + 2^{m-1} U1 with U1 = 4^{m+1} |A| max(1,|h1|),
        // which satisfies the divisibility and positivity constraints; the
        // remainder is 4^{m-1} * (3 mod 8), hence a three-square value.
        ca.tag = CaseAnalysis::Tag::Case3mPos;
        const std::int64_t pow2 = std::int64_t{1} << (m - 1);
        std::int64_t pow4 = 1;
        for (int t = 0; t < m + 1; ++t) pow4 = checked_mul(pow4, 4);
        std::int64_t U1 = checked_mul(pow4, checked_mul(-A, std::max<std::int64_t>(1, std::abs(h.h1))));
        for (int tries = 0;; ++tries, U1 = checked_mul(U1, 2)) {
            if (tries >= kRetryCap)
                throw search_exhausted_error("quatsq: case-3 offset doubling exceeded the retry cap");
            ca.retries = tries;
            const std::int64_t U = checked_add(h.h1, checked_mul(pow2, U1));
            const Quaternion v{alpha.ring, 1, U, h.h2, h.h3};
            const Quaternion w{alpha.ring, pow2, checked_neg(U1), 0, 0};
            const Quaternion remq = sub(sub(alpha, square(v)), square(w));
            if (!remq.is_scalar())
                throw std::logic_error("quatsq: case-3 remainder is not a scalar");
            const std::int64_t rem = remq.c0;
            if (rem <= 0) continue;
            std::int64_t q = rem;
            int val = 0;
            while (q % 4 == 0) {
                q /= 4;
                ++val;
            }
            if (val != m - 1 || q % 8 != 3) continue;
            ca.U = U;
            ca.U1 = U1;
            std::vector<Quaternion> parts{v, w};
            push_scalar_roots(parts, alpha.ring, three_squares(rem).squares);
            return done(std::move(parts));
        }
    }

    // Case 3, m = 0: A = 8l+7 < 0. U = h1 + U1 and w = 1 - U1 i with U1 the
    // smallest multiple of 8 exceeding max(|A|, |h1|); the remainder is then
    // nonnegative and 6 mod 8.
    ca.tag = CaseAnalysis::Tag::Case3m0;
    const std::int64_t bound = std::max(std::abs(A), std::abs(h.h1));
    std::int64_t U1 = checked_mul(8, checked_add(bound / 8, 1));
    for (int tries = 0;; ++tries, U1 = checked_mul(U1, 2)) {
        if (tries >= kRetryCap)
            throw search_exhausted_error("quatsq: case-3 offset doubling exceeded the retry cap");
        ca.retries = tries;
        const std::int64_t U = checked_add(h.h1, U1);
        const Quaternion v{alpha.ring, 1, U, h.h2, h.h3};
        const Quaternion w{alpha.ring, 1, checked_neg(U1), 0, 0};
        const Quaternion remq = sub(sub(alpha, square(v)), square(w));
        if (!remq.is_scalar()) throw std::logic_error("quatsq: case-3 remainder is not a scalar");
        const std::int64_t rem = remq.c0;
        if (rem < 0 || rem % 8 != 6) continue;
        ca.U = U;
        ca.U1 = U1;
        std::vector<Quaternion> parts{v, w};
        push_scalar_roots(parts, alpha.ring, three_squares(rem).squares);
        return done(std::move(parts));
    }
}

Decomposition three_squares_gaussian_ring(const Quaternion& alpha) {
    if (!is_square_class(alpha)) throw not_in_square_class_error{};
    if (alpha.ring.a != 1)
        throw wrong_ring_error("quatsq: the Gaussian three-square algorithm needs a = 1");
    if (alpha.is_zero()) return {alpha, {}, Method::ThreeSquaresGaussian};

    const Halves h = halves_of(alpha);
    const std::int64_t U = mod_pos(h.h1, 2);  // 0 if h1 even, 1 if odd
    const Quaternion z{alpha.ring, 1, U, h.h2, h.h3};
    const Quaternion remq = sub(alpha, square(z));
    if (remq.c2 != 0 || remq.c3 != 0 || remq.c1 % 2 != 0)
        throw std::logic_error("quatsq: gaussian remainder left the subring Z[sqrt(-1)]");

    // The remainder's half imaginary part h1 - U is even, so the two-square
    // criterion always covers it.
    const auto pair = gaussian_two_squares(remq.c0, remq.c1 / 2);
    if (!pair) throw std::logic_error("quatsq: gaussian remainder outside the two-square criterion");
    std::vector<Quaternion> parts{z,
                                  {alpha.ring, pair->x.re, pair->x.im, 0, 0},
                                  {alpha.ring, pair->y.re, pair->y.im, 0, 0}};
    return finish(alpha, Method::ThreeSquaresGaussian, std::move(parts));
}

namespace {

struct Ext {
    std::int64_t g, x, y;  // x*a + y*b = g
};
Ext ext_gcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    const Ext e = ext_gcd(b, a % b);
    return {e.g, e.y, e.x - (a / b) * e.y};
}

enum class SplitCase { A, B, C };

// One attempt at representing the integer T as x^2 + y^2 + w^2 with
// x = n1 l + r, y = n2 l + s, w = l i + delta j, choosing (r, s, delta)
// by T's residue class. Returns the parts {x, y, w} or nothing when the
// residue bookkeeping does not line up (never expected for normalized
// Bezout data).
std::optional<std::array<Quaternion, 3>> toad_attempt(const RingParams& ring, std::int64_t T,
                                                      std::int64_t n1, std::int64_t n2,
                                                      std::int64_t r0, std::int64_t s0,
                                                      SplitCase cs) {
    const std::int64_t b = ring.b;
    std::int64_t delta = 0;
    std::int64_t target = T;
    std::int64_t r = 0, s = 0;
    switch (cs) {
        case SplitCase::A:
            if (mod_pos(target - (r0 * r0 + s0 * s0), 2) == 0) {
                r = r0;
                s = s0;
            } else {
                r = r0 - n2;
                s = s0 + n1;
            }
            break;
        case SplitCase::B:
            if (mod_pos(target, 2) == 1) {
                r = r0;
                s = s0;
            } else if (mod_pos(target, 4) == 0) {
                r = 2 * r0;
                s = 2 * s0;
            } else {
                r = 2 * r0 - n2;
                s = 2 * s0 + n1;
            }
            break;
        case SplitCase::C:
            if (mod_pos(target, 4) == 3) {
                if (b % 4 == 0) return std::nullopt;
                delta = 1;
                target = checked_add(target, b);
            }
            if (mod_pos(target, 4) == 1) {
                r = r0;
                s = s0;
            } else if (mod_pos(target, 4) == 2) {
                r = r0 - n2 / 2;
                s = s0 + n1 / 2;
            } else if (mod_pos(target, 8) == 4) {
                r = 2 * r0;
                s = 2 * s0;
            } else {
                r = 2 * r0 - n2;
                s = 2 * s0 + n1;
            }
            break;
    }
    const std::int64_t modulus = checked_mul(2, checked_add(checked_mul(r, n1), checked_mul(s, n2)));
    if (modulus == 0) return std::nullopt;
    const std::int64_t num =
        checked_sub(target, checked_add(checked_mul(r, r), checked_mul(s, s)));
    if (num % modulus != 0) return std::nullopt;
    const std::int64_t ell = num / modulus;
    return std::array<Quaternion, 3>{
        Quaternion{ring, checked_add(checked_mul(n1, ell), r), 0, 0, 0},
        Quaternion{ring, checked_add(checked_mul(n2, ell), s), 0, 0, 0},
        Quaternion{ring, 0, ell, delta, 0}};
}

}  // namespace

Decomposition four_squares_two_square_a(const Quaternion& alpha, std::int64_t n1, std::int64_t n2) {
    if (!is_square_class(alpha)) throw not_in_square_class_error{};
    const std::int64_t a = alpha.ring.a, b = alpha.ring.b;
    if (n1 < 0 || n2 < 0 || checked_add(checked_mul(n1, n1), checked_mul(n2, n2)) != a)
        throw wrong_ring_error("quatsq: need nonnegative n1, n2 with n1^2 + n2^2 = a");
    const std::int64_t g = std::gcd(n1, n2);
    if (g != 1 && g != 2)
        throw wrong_ring_error("quatsq: gcd(n1, n2) must be 1 or 2");
    if (g == 2) {
        if (n1 % 4 != 0 && n2 % 4 != 0)
            throw wrong_ring_error("quatsq: a gcd-2 split needs one part divisible by 4");
        if (b % 4 == 0)
            throw wrong_ring_error("quatsq: the gcd-2 split requires b != 0 mod 4");
    }
    if (alpha.is_zero()) return {alpha, {}, Method::FourSquaresTwoSquareSplit};

    const Halves h = halves_of(alpha);
    const Quaternion z{alpha.ring, 1, h.h1, h.h2, h.h3};
    const Quaternion remq = sub(alpha, square(z));
    if (!remq.is_scalar()) throw std::logic_error("quatsq: four-square remainder is not a scalar");
    const std::int64_t T = remq.c0;

    // Normalize labels: case A wants n1 odd / n2 even, case C wants n1 = 0 mod 4.
    std::int64_t m1 = n1, m2 = n2;
    SplitCase cs;
    if (g == 1) {
        if (m1 % 2 != 0 && m2 % 2 != 0) {
            cs = SplitCase::B;
        } else {
            cs = SplitCase::A;
            if (m1 % 2 == 0) std::swap(m1, m2);
        }
    } else {
        cs = SplitCase::C;
        if (m1 % 4 != 0) std::swap(m1, m2);
    }
    Ext e = ext_gcd(m1, m2);
    std::int64_t r0 = e.x, s0 = e.y;
    if (cs == SplitCase::B && r0 % 2 == 0) {
        std::swap(m1, m2);
        std::swap(r0, s0);  // exactly one of r0, s0 is odd
    }
    if (cs == SplitCase::C && r0 % 2 != 0) {
        r0 += m2 / 2;  // m2/2 is odd, so this fixes r0's parity
        s0 -= m1 / 2;  // m1/2 is even, s0 stays odd
    }

    for (int t = 0;; ++t) {
        if (t >= kRetryCap)
            throw search_exhausted_error("quatsq: Bezout alternative scan exceeded the retry cap");
        std::int64_t rr = r0, ss = s0;
        if (t > 0) {
            const std::int64_t shift = (t + 1) / 2 * (t % 2 == 1 ? 1 : -1);
            rr = r0 + shift * (m2 / g);
            ss = s0 - shift * (m1 / g);
            if (cs == SplitCase::B && rr % 2 == 0) continue;
            if (cs == SplitCase::C && rr % 2 != 0) continue;
        }
        const auto attempt = toad_attempt(alpha.ring, T, m1, m2, rr, ss, cs);
        if (!attempt) continue;
        std::vector<Quaternion> parts{z, (*attempt)[0], (*attempt)[1], (*attempt)[2]};
        std::erase_if(parts, [](const Quaternion& q) { return q.is_zero(); });
        Decomposition d{alpha, std::move(parts), Method::FourSquaresTwoSquareSplit};
        if (verify_decomposition(d)) return d;
    }
}

namespace {

struct RegularEntry {
    std::int64_t y0 = 0, s = 0;
};

// Case tables mapping A mod m to a square residue y0^2 and a completely
// represented class s with A = y0^2 - s mod m.
std::vector<RegularEntry> build_regular_table(std::int64_t m, const std::set<std::int64_t>& S,
                                              const std::vector<std::pair<std::int64_t, RegularEntry>>& specials) {
    std::vector<RegularEntry> table(static_cast<std::size_t>(m));
    std::set<std::int64_t> special_keys;
    for (const auto& [c, entry] : specials) {
        table[static_cast<std::size_t>(c)] = entry;
        special_keys.insert(c);
    }
    for (std::int64_t c = 0; c < m; ++c) {
        if (special_keys.count(c)) continue;
        if (S.count(mod_pos(-c, m))) {
            table[static_cast<std::size_t>(c)] = {0, mod_pos(-c, m)};
        } else {
            table[static_cast<std::size_t>(c)] = {1, mod_pos(1 - c, m)};
        }
    }
    for (std::int64_t c = 0; c < m; ++c) {
        const RegularEntry& t = table[static_cast<std::size_t>(c)];
        if (!S.count(t.s) || mod_pos(t.y0 * t.y0 - t.s, m) != c)
            throw std::logic_error("quatsq: regular case table is inconsistent");
    }
    return table;
}

const std::vector<RegularEntry>& table_22() {
    static const std::vector<RegularEntry> t = build_regular_table(
        32, {2, 4, 6, 8, 10, 12, 14, 18, 20, 22, 24, 26, 30},
        {{0, {2, 4}}, {16, {2, 20}}, {1, {3, 8}}, {5, {3, 4}}, {17, {3, 24}}, {4, {4, 12}}});
    return t;
}

const std::vector<RegularEntry>& table_23() {
    static const std::vector<RegularEntry> t = build_regular_table(
        24, {2, 3, 5, 6, 9, 11, 14, 17, 18, 21},
        {{1, {2, 3}}, {2, {2, 2}}, {17, {2, 11}}, {0, {3, 9}}, {12, {3, 21}}, {5, {4, 11}}, {9, {6, 3}}});
    return t;
}

}  // namespace

Decomposition three_squares_regular(const Quaternion& alpha, RegularChoice* choice) {
    if (!is_square_class(alpha)) throw not_in_square_class_error{};
    const std::int64_t a = alpha.ring.a, b = alpha.ring.b;
    TernaryDiagonalForm f;
    const std::vector<RegularEntry>* table;
    std::int64_t m;
    if (a == 2 && b == 2) {
        f = form_22();
        table = &table_22();
        m = 32;
    } else if (a == 2 && b == 3) {
        f = form_23();
        table = &table_23();
        m = 24;
    } else {
        throw wrong_ring_error("quatsq: the regular-form algorithm covers Q_{2,2} and Q_{2,3}");
    }
    if (alpha.is_zero()) return {alpha, {}, Method::ThreeSquaresRegular};

    const Halves h = halves_of(alpha);
    const Quaternion x{alpha.ring, 1, h.h1, h.h2, h.h3};
    const Quaternion remq = sub(alpha, square(x));
    if (!remq.is_scalar()) throw std::logic_error("quatsq: regular-form remainder is not a scalar");
    const std::int64_t A = remq.c0;

    const RegularEntry entry = (*table)[static_cast<std::size_t>(mod_pos(A, m))];
    std::int64_t y0 = entry.y0;
    // Adding m/2 preserves y0^2 mod m, so lift until y0^2 >= A.
    while (checked_sub(checked_mul(y0, y0), A) < 0) y0 = checked_add(y0, m / 2);
    const std::int64_t N = checked_sub(checked_mul(y0, y0), A);
    if (mod_pos(N, m) != entry.s)
        throw std::logic_error("quatsq: lifted square left its residue class");
    const auto xyz = represents(f, N);
    if (!xyz)
        throw std::logic_error("quatsq: regular form failed on a completely represented class");
    if (choice) *choice = {A, entry.s, y0};
    std::vector<Quaternion> parts{x,
                                  {alpha.ring, y0, 0, 0, 0},
                                  {alpha.ring, 0, (*xyz)[0], (*xyz)[1], (*xyz)[2]}};
    return finish(alpha, Method::ThreeSquaresRegular, std::move(parts));
}

std::optional<std::pair<std::int64_t, std::int64_t>> two_square_split(std::int64_t a) {
    if (a < 1) throw std::invalid_argument("quatsq: two_square_split requires a >= 1");
    std::optional<std::pair<std::int64_t, std::int64_t>> gcd2;
    for (std::int64_t n1 = 0; 2 * n1 * n1 <= a; ++n1) {
        const std::int64_t rem = a - n1 * n1;
        const std::int64_t n2 = isqrt(rem);
        if (n2 * n2 != rem) continue;
        const std::int64_t g = std::gcd(n1, n2);
        if (g == 1) return std::make_pair(n1, n2);
        if (g == 2 && !gcd2 && (n1 % 4 == 0 || n2 % 4 == 0)) gcd2 = std::make_pair(n1, n2);
    }
    return gcd2;
}

Decomposition decompose(const Quaternion& alpha) {
    if (!is_square_class(alpha)) throw not_in_square_class_error{};
    const std::int64_t a = alpha.ring.a, b = alpha.ring.b;

    const auto transported = [&alpha](auto&& algo) {
        Decomposition swapped = algo(ring_swap(alpha));
        Decomposition out{alpha, {}, swapped.method};
        out.parts.reserve(swapped.parts.size());
        for (const Quaternion& p : swapped.parts) out.parts.push_back(ring_swap(p));
        if (!verify_decomposition(out))
            throw std::logic_error("quatsq: swap transport failed verification");
        return out;
    };

    // Exact-3 algorithms first, then the four-square split, then the general
    // bound; the unswapped orientation wins ties.
    if (a == 1) return three_squares_gaussian_ring(alpha);
    if (b == 1)
        return transported([](const Quaternion& q) { return three_squares_gaussian_ring(q); });
    if (a == 2 && (b == 2 || b == 3)) return three_squares_regular(alpha);
    if (a == 3 && b == 2)
        return transported([](const Quaternion& q) { return three_squares_regular(q); });

    const auto toad_split = [](std::int64_t aa, std::int64_t bb)
        -> std::optional<std::pair<std::int64_t, std::int64_t>> {
        const auto split = two_square_split(aa);
        if (!split) return std::nullopt;
        if (std::gcd(split->first, split->second) == 2 && bb % 4 == 0) return std::nullopt;
        return split;
    };
    if (const auto sp = toad_split(a, b))
        return four_squares_two_square_a(alpha, sp->first, sp->second);
    if (const auto sp = toad_split(b, a)) {
        const auto [n1, n2] = *sp;
        return transported(
            [n1, n2](const Quaternion& q) { return four_squares_two_square_a(q, n1, n2); });
    }
    return five_squares_general(alpha);
}

}  // namespace quatsq
