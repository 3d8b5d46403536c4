#include "quatsq/oracle.hpp"

#include "quatsq/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <unordered_set>
#include <vector>

#ifdef QUATSQ_HAVE_OPENMP
#include <omp.h>
#endif

namespace quatsq {

namespace {

// A square's value: real part (which can be large and negative) plus the
// three pure coefficients, which stay within 2B^2 for box bound B <= 31.
struct Val {
    std::int64_t w = 0;
    std::int16_t p1 = 0, p2 = 0, p3 = 0;
    friend bool operator==(const Val&, const Val&) = default;
    friend auto operator<=>(const Val&, const Val&) = default;
};

struct ValHash {
    std::size_t operator()(const Val& v) const {
        std::uint64_t x = static_cast<std::uint64_t>(v.w);
        x ^= (static_cast<std::uint64_t>(static_cast<std::uint16_t>(v.p1)) << 48) ^
             (static_cast<std::uint64_t>(static_cast<std::uint16_t>(v.p2)) << 32) ^
             (static_cast<std::uint64_t>(static_cast<std::uint16_t>(v.p3)) << 16);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

std::optional<Val> make_val(std::int64_t w, std::int64_t p1, std::int64_t p2, std::int64_t p3) {
    if (p1 < INT16_MIN || p1 > INT16_MAX || p2 < INT16_MIN || p2 > INT16_MAX || p3 < INT16_MIN ||
        p3 > INT16_MAX)
        return std::nullopt;
    return Val{w, static_cast<std::int16_t>(p1), static_cast<std::int16_t>(p2),
               static_cast<std::int16_t>(p3)};
}

// Subtraction that fails (returns nullopt) when a pure component leaves the
// representable range; such a remainder cannot be a sum of in-box squares.
std::optional<Val> vsub_checked(const Val& x, const Val& y) {
    return make_val(checked_sub(x.w, y.w), static_cast<std::int64_t>(x.p1) - y.p1,
                    static_cast<std::int64_t>(x.p2) - y.p2, static_cast<std::int64_t>(x.p3) - y.p3);
}

struct SquareBox {
    std::vector<Val> squares;  // distinct square values, small coefficients first
    std::unordered_set<Val, ValHash> set;
};

SquareBox enumerate_squares(const RingParams& ring, std::int64_t B) {
    SquareBox box;
    std::vector<std::pair<std::int64_t, Val>> keyed;
    for (std::int64_t q0 = 0; q0 <= B; ++q0) {
        for (std::int64_t q1 = -B; q1 <= B; ++q1) {
            for (std::int64_t q2 = -B; q2 <= B; ++q2) {
                for (std::int64_t q3 = -B; q3 <= B; ++q3) {
                    if (q0 == 0 && q1 == 0 && q2 == 0 && q3 == 0) continue;
                    if (q0 == 0) {
                        // q and -q square identically; keep one representative
                        const std::int64_t lead = q1 != 0 ? q1 : (q2 != 0 ? q2 : q3);
                        if (lead < 0) continue;
                    }
                    const Quaternion q{ring, q0, q1, q2, q3};
                    const Quaternion sq = square(q);
                    const auto val = make_val(sq.c0, sq.c1, sq.c2, sq.c3);
                    if (!val) throw enumeration_too_large_error("quatsq: oracle box out of range");
                    if (box.set.insert(*val).second) {
                        const std::int64_t key =
                            std::max({std::abs(q0), std::abs(q1), std::abs(q2), std::abs(q3)});
                        keyed.emplace_back(key, *val);
                    }
                }
            }
        }
    }
    std::sort(keyed.begin(), keyed.end());
    box.squares.reserve(keyed.size());
    for (const auto& [key, val] : keyed) box.squares.push_back(val);
    return box;
}

bool scan_k1(const SquareBox& box, const Val& target) { return box.set.count(target) != 0; }

bool scan_k2(const SquareBox& box, const Val& target, bool parallel) {
    const auto n = static_cast<std::int64_t>(box.squares.size());
    std::atomic<bool> found{false};
#ifdef QUATSQ_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        const auto rem = vsub_checked(target, box.squares[i]);
        if (rem && box.set.count(*rem)) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

bool scan_k3(const SquareBox& box, const Val& target, bool parallel) {
    const auto n = static_cast<std::int64_t>(box.squares.size());
    std::atomic<bool> found{false};
#ifdef QUATSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        const auto rem_i = vsub_checked(target, box.squares[i]);
        if (!rem_i) continue;
        for (std::int64_t j = i; j < n; ++j) {
            const auto rem = vsub_checked(*rem_i, box.squares[j]);
            if (rem && box.set.count(*rem)) {
                found.store(true, std::memory_order_relaxed);
                break;
            }
        }
    }
    return found.load();
}

// All distinct two-square sums, sorted for binary search.
std::vector<Val> pair_table(const SquareBox& box) {
    const auto n = static_cast<std::int64_t>(box.squares.size());
    std::vector<Val> t2;
    t2.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
    for (std::int64_t i = 0; i < n; ++i) {
        const Val& si = box.squares[i];
        for (std::int64_t j = i; j < n; ++j) {
            const Val& sj = box.squares[j];
            const std::int64_t p1 = si.p1 + sj.p1, p2 = si.p2 + sj.p2, p3 = si.p3 + sj.p3;
            const auto v = make_val(checked_add(si.w, sj.w), p1, p2, p3);
            if (!v) throw enumeration_too_large_error("quatsq: pair table out of range");
            t2.push_back(*v);
        }
    }
    std::sort(t2.begin(), t2.end());
    t2.erase(std::unique(t2.begin(), t2.end()), t2.end());
    return t2;
}

bool scan_k4(const std::vector<Val>& t2, const Val& target, bool parallel) {
    const auto n = static_cast<std::int64_t>(t2.size());
    std::atomic<bool> found{false};
#ifdef QUATSQ_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        const auto rem = vsub_checked(target, t2[i]);
        if (rem && std::binary_search(t2.begin(), t2.end(), *rem))
            found.store(true, std::memory_order_relaxed);
    }
    return found.load();
}

bool scan_k5(const SquareBox& box, const std::vector<Val>& t2, const Val& target, bool parallel) {
    const auto n = static_cast<std::int64_t>(box.squares.size());
    std::atomic<bool> found{false};
#ifdef QUATSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        const auto rem_i = vsub_checked(target, box.squares[i]);
        if (!rem_i) continue;
        for (std::int64_t j = i; j < n && !found.load(std::memory_order_relaxed); ++j) {
            const auto rem_j = vsub_checked(*rem_i, box.squares[j]);
            if (!rem_j) continue;
            for (std::int64_t l = j; l < n; ++l) {
                const auto rem = vsub_checked(*rem_j, box.squares[l]);
                if (rem && std::binary_search(t2.begin(), t2.end(), *rem)) {
                    found.store(true, std::memory_order_relaxed);
                    break;
                }
            }
        }
    }
    return found.load();
}

}  // namespace

OracleResult min_squares_oracle(const Quaternion& alpha, std::int64_t coeff_bound,
                                const OracleOptions& options) {
    if (!is_square_class(alpha)) throw not_in_square_class_error{};
    if (coeff_bound < 1 || coeff_bound > 31)
        throw std::invalid_argument("quatsq: oracle box bound must be in [1, 31]");

    OracleResult res;
    res.box = coeff_bound;
    if (alpha.is_zero()) {
        res.count = 0;
        res.lower_bound = 0;
        return res;
    }

    bool parallel = options.parallel;
#ifdef QUATSQ_HAVE_OPENMP
    if (const char* env = std::getenv("QUATSQ_THREADS"); env != nullptr && parallel)
        if (std::atoi(env) <= 1) parallel = false;
#endif

    const SquareBox box = enumerate_squares(alpha.ring, coeff_bound);
    const auto n = static_cast<std::int64_t>(box.squares.size());
    const auto target_opt = make_val(alpha.c0, alpha.c1, alpha.c2, alpha.c3);

    // A target with a pure coefficient beyond 5 * 2B^2 is out of reach of any
    // sum of five in-box squares; the scans degenerate to "not found".
    const bool reachable = target_opt.has_value();
    const Val target = reachable ? *target_opt : Val{};

    auto require_work = [&](__int128 estimate, const char* level) {
        if (estimate > options.work_ceiling)
            throw enumeration_too_large_error(level);
    };

    std::vector<Val> t2;
    for (int k = 1; reachable && k <= 5; ++k) {
        bool hit = false;
        switch (k) {
            case 1:
                hit = scan_k1(box, target);
                break;
            case 2:
                require_work(n, "quatsq: oracle k=2 scan exceeds the work ceiling");
                hit = scan_k2(box, target, parallel);
                break;
            case 3:
                require_work(n * (n + 1) / 2, "quatsq: oracle k=3 scan exceeds the work ceiling");
                hit = scan_k3(box, target, parallel);
                break;
            case 4:
            case 5: {
                if (n * (n + 1) / 2 > options.pair_table_cap)
                    throw enumeration_too_large_error(
                        "quatsq: oracle pair table exceeds its size cap");
                if (k == 4) {
                    t2 = pair_table(box);
                    require_work(static_cast<__int128>(t2.size()) * 8,
                                 "quatsq: oracle k=4 scan exceeds the work ceiling");
                    hit = scan_k4(t2, target, parallel);
                } else {
                    require_work(static_cast<__int128>(n) * n * n / 6 * 8,
                                 "quatsq: oracle k=5 scan exceeds the work ceiling");
                    hit = scan_k5(box, t2, target, parallel);
                }
                break;
            }
        }
        if (hit) {
            res.count = k;
            res.lower_bound = k;
            return res;
        }
    }
    res.count = std::nullopt;
    res.lower_bound = 6;
    return res;
}

}  // namespace quatsq
