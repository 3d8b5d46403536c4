#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Classical integer decompositions used as subroutines: three squares
// (with the 4^m(8l+7) exclusion test), four squares, and small integer
// helpers shared by the decomposition algorithms.

namespace quatsq {

// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

bool is_perfect_square(std::int64_t n);

// m and l such that n = 4^m (8l + 7), if n has that form (any sign of n;
// for n < 0 the quotient 8l+7 is negative). Empty otherwise.
struct FourPowForm {
    int m = 0;
    std::int64_t ell = 0;
};
std::optional<FourPowForm> four_pow_form(std::int64_t n);

// True iff N is not a sum of three integer squares. For N >= 0 this is the
// 4^m(8l+7) test; all N < 0 count as excluded.
bool is_legendre_excluded(std::int64_t n);

struct IntegerSquaresResult {
    enum class Status { Found, Excluded };
    std::int64_t value = 0;
    std::vector<std::int64_t> squares;  // nonnegative roots, sorted descending, zeros dropped
    Status status = Status::Found;

    bool found() const { return status == Status::Found; }
};

// N as x^2 + y^2 + z^2 (descending exhaustive search), or Excluded when N
// has the excluded form. Requires N >= 0.
IntegerSquaresResult three_squares(std::int64_t n);

// N as a sum of four squares; always Found for N >= 0 (greedy descent on
// the largest root, falling back until the remainder is three-square).
IntegerSquaresResult four_squares(std::int64_t n);

}  // namespace quatsq
