#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quatsq/oracle.hpp"  // enumeration_too_large_error

// Finite modular obstruction certificates. For a target pattern
// alpha0 + 2h1 i + 2h2 j + 2h3 k and a part count k, the four coefficient
// equations of sum-of-k-squares are reduced modulo chosen moduli and every
// residue tuple is enumerated. If no tuple satisfies all of them for any
// (a,b) residue pair in the ring class, no integer solution exists for any
// ring in the class.

namespace quatsq {

// Residue classes of ring parameters, e.g. a = 1 or 2 mod 4 with b free.
struct RingClass {
    std::int64_t a_modulus = 1;
    std::vector<std::int64_t> a_residues{0};
    std::int64_t b_modulus = 1;
    std::vector<std::int64_t> b_residues{0};
};

enum class CoeffEq { Real = 0, I = 1, J = 2, K = 3 };

struct ObstructionQuery {
    std::array<std::int64_t, 4> pattern{};  // (alpha0, 2h1, 2h2, 2h3); pures even
    int k = 1;
    RingClass ring_class;
    std::map<CoeffEq, std::int64_t> moduli;  // absent equations are unconstrained
    // The finite case split justified for two-square targets with positive
    // real part and unit i-coefficient: every integer solution must have
    // zero j and k components (a Bezout divisibility argument forces
    // x0 | y2, y0 | x2 and positivity then pins them to zero), so the
    // enumeration may fix those residues to 0. Only valid for k = 2,
    // pattern (a0 > 0, 2, 0, 0).
    bool pin_jk_zero = false;
};

struct ObstructionCertificate {
    ObstructionQuery query;
    bool exhaustive = false;
    std::uint64_t enumeration_count = 0;  // residue tuples checked
};

// Part-coefficient residues satisfying every equation, reported when the
// enumeration is inconclusive.
struct ObstructionEvidence {
    std::int64_t a_residue = 0;
    std::int64_t b_residue = 0;
    std::vector<std::array<std::int64_t, 4>> parts;
};

struct ObstructionOutcome {
    std::optional<ObstructionCertificate> certificate;  // set when exhaustive
    std::optional<ObstructionEvidence> evidence;        // set when inconclusive
    std::uint64_t enumeration_count = 0;

    bool certified() const { return certificate.has_value(); }
};

struct ObstructionOptions {
    bool parallel = true;
    // Coefficient-aware period reduction (a square mod M is determined by
    // its argument mod M/2 when 4 | M, and scaled squares by even less).
    // Disabled it enumerates full square periods; used to validate the
    // reduction against a straightforward enumeration.
    bool reduce_ranges = true;
    std::uint64_t tuple_ceiling = 100'000'000;
};

ObstructionOutcome modular_obstruction(const ObstructionQuery& query,
                                       const ObstructionOptions& options = {});

// The four witness families, certified with their per-family moduli:
//   2+2i over a = 1,2 mod 4; 4+2i over a = 0,3 mod 4 (both k = 2, falling
//   back to the pinned j/k case split when plain enumeration is
//   inconclusive); 9+2j over a = 0, b = 3 mod 4 (k = 3); 8+2k over
//   a = b = 0 mod 4 (k = 4).
std::vector<ObstructionCertificate> witness_suite(const ObstructionOptions& options = {});

// Witness queries by name ("2+2i", "4+2i", "9+2j", "8+2k"); pinned = false
// gives the plain enumeration variant for the two-square families.
ObstructionQuery witness_query(const std::string& name, bool pinned = true);

}  // namespace quatsq
