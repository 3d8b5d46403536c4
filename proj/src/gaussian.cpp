#include "quatsq/gaussian.hpp"

#include "quatsq/quaternion.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace quatsq {

std::string GaussianInt::to_string() const {
    return std::to_string(re) + (im < 0 ? "" : "+") + std::to_string(im) + "*sqrt(-1)";
}

GaussianInt gadd(GaussianInt u, GaussianInt v) { return {checked_add(u.re, v.re), checked_add(u.im, v.im)}; }
GaussianInt gsub(GaussianInt u, GaussianInt v) { return {checked_sub(u.re, v.re), checked_sub(u.im, v.im)}; }

GaussianInt gmul(GaussianInt u, GaussianInt v) {
    return {checked_sub(checked_mul(u.re, v.re), checked_mul(u.im, v.im)),
            checked_add(checked_mul(u.re, v.im), checked_mul(u.im, v.re))};
}

GaussianInt gconj(GaussianInt u) { return {u.re, checked_neg(u.im)}; }

std::int64_t gnorm(GaussianInt u) {
    return checked_add(checked_mul(u.re, u.re), checked_mul(u.im, u.im));
}

std::optional<GaussianInt> gdiv_exact(GaussianInt u, GaussianInt v) {
    const __int128 n = static_cast<__int128>(v.re) * v.re + static_cast<__int128>(v.im) * v.im;
    if (n == 0) return std::nullopt;
    const __int128 re = static_cast<__int128>(u.re) * v.re + static_cast<__int128>(u.im) * v.im;
    const __int128 im = static_cast<__int128>(u.im) * v.re - static_cast<__int128>(u.re) * v.im;
    if (re % n != 0 || im % n != 0) return std::nullopt;
    const __int128 qre = re / n, qim = im / n;
    if (qre > INT64_MAX || qre < INT64_MIN || qim > INT64_MAX || qim < INT64_MIN) return std::nullopt;
    return GaussianInt{static_cast<std::int64_t>(qre), static_cast<std::int64_t>(qim)};
}

namespace {

std::int64_t round_div(__int128 num, __int128 den) {
    // den > 0; round to nearest, ties toward +inf (any fixed rule works)
    __int128 q = num >= 0 ? (num + den / 2) / den : -((-num + den / 2) / den);
    return static_cast<std::int64_t>(q);
}

// Euclidean gcd in Z[sqrt(-1)] with rounded division.
GaussianInt gauss_gcd(GaussianInt u, GaussianInt v) {
    while (!(v.re == 0 && v.im == 0)) {
        const __int128 n = static_cast<__int128>(v.re) * v.re + static_cast<__int128>(v.im) * v.im;
        const __int128 re = static_cast<__int128>(u.re) * v.re + static_cast<__int128>(u.im) * v.im;
        const __int128 im = static_cast<__int128>(u.im) * v.re - static_cast<__int128>(u.re) * v.im;
        const GaussianInt q{round_div(re, n), round_div(im, n)};
        const GaussianInt r{u.re - (q.re * v.re - q.im * v.im), u.im - (q.re * v.im + q.im * v.re)};
        u = v;
        v = r;
    }
    return u;
}

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// s with s^2 = -1 mod p, for prime p = 1 mod 4.
std::int64_t sqrt_minus_one(std::int64_t p) {
    const auto up = static_cast<std::uint64_t>(p);
    for (std::uint64_t a = 2;; ++a) {
        if (powmod(a, (up - 1) / 2, up) != up - 1) continue;  // want a non-residue
        const std::uint64_t s = powmod(a, (up - 1) / 4, up);
        if (mulmod(s, s, up) == up - 1) return static_cast<std::int64_t>(s);
    }
}

struct PrimePower {
    GaussianInt prime;
    int count;
};

GaussianInt must_div(GaussianInt u, GaussianInt v) {
    auto q = gdiv_exact(u, v);
    if (!q) throw std::logic_error("quatsq: expected exact Gaussian division");
    return *q;
}

// Gaussian prime-power factorisation of tau (up to a unit).
std::vector<PrimePower> factor_gaussian(GaussianInt tau) {
    std::vector<PrimePower> out;
    std::int64_t n = gnorm(tau);
    GaussianInt rest = tau;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p == 2) {
            out.push_back({GaussianInt{1, 1}, e});
            for (int t = 0; t < e; ++t) rest = must_div(rest, GaussianInt{1, 1});
        } else if (p % 4 == 3) {
            if (e % 2 != 0) throw std::logic_error("quatsq: inert prime with odd exponent in a norm");
            out.push_back({GaussianInt{p, 0}, e / 2});
            for (int t = 0; t < e / 2; ++t) rest = must_div(rest, GaussianInt{p, 0});
        } else {
            GaussianInt pi = gauss_gcd(GaussianInt{p, 0}, GaussianInt{sqrt_minus_one(p), 1});
            int alpha = 0;
            while (alpha < e) {
                auto q = gdiv_exact(rest, pi);
                if (!q) break;
                rest = *q;
                ++alpha;
            }
            const GaussianInt pibar = gconj(pi);
            for (int t = 0; t < e - alpha; ++t) rest = must_div(rest, pibar);
            if (alpha > 0) out.push_back({pi, alpha});
            if (e - alpha > 0) out.push_back({pibar, e - alpha});
        }
    }
    if (n > 1) {
        // leftover prime factor of the norm
        const std::int64_t p = n;
        if (p % 4 == 3) throw std::logic_error("quatsq: inert prime with odd exponent in a norm");
        if (p == 2) {
            out.push_back({GaussianInt{1, 1}, 1});
        } else {
            GaussianInt pi = gauss_gcd(GaussianInt{p, 0}, GaussianInt{sqrt_minus_one(p), 1});
            if (!gdiv_exact(rest, pi)) pi = gconj(pi);
            out.push_back({pi, 1});
        }
    }
    return out;
}

}  // namespace

std::optional<GaussianPair> gaussian_two_squares(std::int64_t a0, std::int64_t a1) {
    // Criterion: a0 + 2*a1*sqrt(-1) is a sum of two squares unless a0/2 and
    // a1 are both odd integers (vacuous when a0 is odd).
    if (a0 % 2 == 0 && ((a0 / 2) % 2 != 0) && (a1 % 2 != 0)) return std::nullopt;

    const GaussianInt tau{a0, checked_mul(2, a1)};
    if (tau.re == 0 && tau.im == 0) return GaussianPair{{0, 0}, {0, 0}};

    const std::vector<PrimePower> factors = factor_gaussian(tau);

    // Walk all divisors u (exponent vectors in mixed-radix order, then the
    // four units); accept the first with tau/u = u mod 2.
    std::vector<int> exp(factors.size(), 0);
    const GaussianInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    while (true) {
        GaussianInt base{1, 0};
        for (std::size_t t = 0; t < factors.size(); ++t)
            for (int e = 0; e < exp[t]; ++e) base = gmul(base, factors[t].prime);
        for (const GaussianInt& unit : units) {
            const GaussianInt u = gmul(base, unit);
            const auto v = gdiv_exact(tau, u);
            if (!v) continue;
            if ((u.re - v->re) % 2 != 0 || (u.im - v->im) % 2 != 0) continue;
            const GaussianInt x{(u.re + v->re) / 2, (u.im + v->im) / 2};
            const GaussianInt w{(u.re - v->re) / 2, (u.im - v->im) / 2};
            const GaussianInt y{w.im, -w.re};  // -sqrt(-1) * w
            return GaussianPair{x, y};
        }
        std::size_t t = 0;
        while (t < factors.size() && exp[t] == factors[t].count) {
            exp[t] = 0;
            ++t;
        }
        if (t == factors.size()) break;
        ++exp[t];
    }
    throw std::logic_error("quatsq: two-square criterion satisfied but no divisor pair found");
}

}  // namespace quatsq
