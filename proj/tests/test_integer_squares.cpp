#include <doctest.h>

#include <stdexcept>
#include <numeric>

#include "quatsq/integer_squares.hpp"

using namespace quatsq;

namespace {

// Independent brute-force oracle: is n a sum of three integer squares?
bool three_square_brute(std::int64_t n) {
    for (std::int64_t x = 0; x * x <= n; ++x)
        for (std::int64_t y = x; x * x + y * y <= n; ++y) {
            const std::int64_t z2 = n - x * x - y * y;
            if (is_perfect_square(z2)) return true;
        }
    return false;
}

std::int64_t resum(const std::vector<std::int64_t>& roots) {
    std::int64_t s = 0;
    for (std::int64_t r : roots) s += r * r;
    return s;
}

}  // namespace

TEST_CASE("legendre exclusion") {
    CHECK(is_legendre_excluded(7));
    CHECK_FALSE(is_legendre_excluded(6));
    CHECK(is_legendre_excluded(112));  // 4^2 * 7
    CHECK_FALSE(is_legendre_excluded(0));
    CHECK(is_legendre_excluded(-5));  // negatives are never sums of three squares
    for (std::int64_t n = 0; n <= 1000; ++n) CHECK(is_legendre_excluded(n) == !three_square_brute(n));
}

TEST_CASE("four_pow_form handles negatives") {
    auto f = four_pow_form(-9);
    REQUIRE(f);
    CHECK(f->m == 0);
    CHECK(f->ell == -2);
    f = four_pow_form(-64);  // 4^3 * (8*(-1)+7)
    REQUIRE(f);
    CHECK(f->m == 3);
    CHECK(f->ell == -1);
    CHECK_FALSE(four_pow_form(-10));
    CHECK_FALSE(four_pow_form(-2));
}

TEST_CASE("three squares") {
    CHECK(three_squares(0).found());
    CHECK(three_squares(0).squares.empty());
    CHECK(three_squares(6).squares == std::vector<std::int64_t>{2, 1, 1});
    CHECK_FALSE(three_squares(7).found());
    CHECK_THROWS_AS(three_squares(-1), std::invalid_argument);

    for (std::int64_t n = 0; n <= 5000; ++n) {
        const IntegerSquaresResult r = three_squares(n);
        CHECK(r.found() == !is_legendre_excluded(n));
        if (r.found()) {
            CHECK(r.squares.size() <= 3);
            CHECK(resum(r.squares) == n);
            CHECK(std::is_sorted(r.squares.rbegin(), r.squares.rend()));
        }
    }
}

TEST_CASE("three squares at scale") {
    // magnitudes the five-square algorithm produces for engineered inputs
    for (std::int64_t n : std::vector<std::int64_t>{502, 5242860, 123456789014, 999999999999998}) {
        REQUIRE_FALSE(is_legendre_excluded(n));
        CHECK(resum(three_squares(n).squares) == n);
    }
}

TEST_CASE("four squares") {
    CHECK(four_squares(0).squares.empty());
    CHECK(four_squares(7).squares == std::vector<std::int64_t>{2, 1, 1, 1});
    CHECK(four_squares(310).squares == std::vector<std::int64_t>{17, 4, 2, 1});
    CHECK_THROWS_AS(four_squares(-3), std::invalid_argument);

    for (std::int64_t n = 0; n <= 5000; ++n) {
        const IntegerSquaresResult r = four_squares(n);
        CHECK(r.found());
        CHECK(r.squares.size() <= 4);
        CHECK(resum(r.squares) == n);
        CHECK(std::is_sorted(r.squares.rbegin(), r.squares.rend()));
    }
}
