#include <doctest.h>

#include <stdexcept>
#include "quatsq/ternary.hpp"

using namespace quatsq;

TEST_CASE("represents") {
    // (0,1,0) precedes the witness (1,0,0) lexicographically; both give 2
    CHECK(represents(form_22(), 2) == std::array<std::int64_t, 3>{0, 1, 0});
    CHECK(2 * 1 * 1 + 2 * 0 + 4 * 0 == 2);
    CHECK_FALSE(represents(form_22(), 28).has_value());  // 2*(16*0+14)
    CHECK(represents(form_23(), 0) == std::array<std::int64_t, 3>{0, 0, 0});
    CHECK(represents(form_23(), 6) == std::array<std::int64_t, 3>{0, 0, 1});
}

TEST_CASE("exclusion patterns") {
    const ExclusionPattern p22 = pattern_22();
    CHECK(is_excluded(p22, 28));
    CHECK(is_excluded(p22, 112));  // 2*4*14
    CHECK(is_excluded(p22, 3));    // odd
    CHECK_FALSE(is_excluded(p22, 2));

    const ExclusionPattern p23 = pattern_23();
    CHECK(is_excluded(p23, 7));
    CHECK_FALSE(is_excluded(p23, 6));
    CHECK(is_excluded(p23, 1));  // 1 mod 3
    CHECK(is_excluded(p23, 28)); // 4*7
    CHECK_FALSE(is_excluded(p23, 2));
}

TEST_CASE("patterns match exhaustive search") {
    for (std::int64_t n = 1; n <= 2000; ++n) {
        CHECK(is_excluded(pattern_22(), n) == !represents(form_22(), n).has_value());
        CHECK(is_excluded(pattern_23(), n) == !represents(form_23(), n).has_value());
    }
}

TEST_CASE("residue sets") {
    const ResidueSet s22 = residue_set(form_22(), pattern_22(), 32);
    CHECK(s22.classes ==
          std::vector<std::int64_t>{2, 4, 6, 8, 10, 12, 14, 18, 20, 22, 24, 26, 30});

    const ResidueSet s23 = residue_set(form_23(), pattern_23(), 24);
    CHECK(s23.classes == std::vector<std::int64_t>{2, 3, 5, 6, 9, 11, 14, 17, 18, 21});

    // no class mod 2 is completely represented by f_{2,2} (28 is even and missed)
    CHECK(residue_set(form_22(), pattern_22(), 2).classes.empty());
}

TEST_CASE("residue set validation trips on a wrong pattern") {
    // pairing f_{2,3} with f_{2,2}'s pattern claims odd numbers are the only
    // odd-type obstruction, which the cross-check refutes
    CHECK_THROWS_AS(residue_set(form_23(), pattern_22(), 24), std::logic_error);
}
