#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Exact values and bounds for g_{a,b}(2), the least g such that every
// element of Q_{a,b}^2 is a sum of at most g squares.

namespace quatsq {

struct GValueBounds {
    int lower = 3;
    int upper = 5;
    bool exact = false;
    std::vector<std::string> sources;  // witness / algorithm tags backing the bounds
    std::vector<std::string> flags;    // noted caveats, e.g. a narrowed precondition
};

// Decision table evaluated for (a,b) and (b,a) and intersected; symmetric
// by construction.
GValueBounds g_bounds(std::int64_t a, std::int64_t b);

}  // namespace quatsq
