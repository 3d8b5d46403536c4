#pragma once

#include <cstdint>
#include <optional>

#include "quatsq/quaternion.hpp"

// Brute-force minimum-squares oracle: the smallest k <= 5 such that alpha
// is a sum of k squares of quaternions whose coefficients all lie in
// [-B, B]. Independent of the constructive algorithms; used to cross-check
// them and the obstruction certificates.
//
// The search indexes candidate squares by value, enumerates k-subsets via
// meet-in-the-middle on the deepest level (pairs of squares are tabulated
// once and binary-searched), and runs the scan loops either serially or
// under OpenMP; both paths visit the same candidate set, so the result is
// schedule-independent.

namespace quatsq {

struct enumeration_too_large_error : std::runtime_error {
    explicit enumeration_too_large_error(const char* what) : std::runtime_error(what) {}
};

struct OracleOptions {
    bool parallel = true;
    // Upper bound on elementary scan steps per level; levels whose cost
    // estimate exceeds it are refused rather than run open-endedly.
    std::int64_t work_ceiling = 2'000'000'000;
    // Cap on the tabulated pair-sum table used by the k = 4 and k = 5 scans.
    std::int64_t pair_table_cap = 40'000'000;
};

struct OracleResult {
    std::optional<int> count;  // exact minimum when found
    int lower_bound = 0;       // count when exact; 6 when nothing found up to 5
    std::int64_t box = 0;      // the coefficient bound B searched

    bool exact() const { return count.has_value(); }
};

// Requires is_square_class(alpha) and 1 <= B <= 31.
OracleResult min_squares_oracle(const Quaternion& alpha, std::int64_t coeff_bound,
                                const OracleOptions& options = {});

}  // namespace quatsq
