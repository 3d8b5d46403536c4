#include <doctest.h>

#include "quatsq/json_io.hpp"
#include "quatsq/obstruction.hpp"
#include "quatsq/oracle.hpp"

using namespace quatsq;

namespace {

ObstructionOptions serial_opts() {
    ObstructionOptions o;
    o.parallel = false;
    return o;
}

}  // namespace

TEST_CASE("witness queries certify") {
    // the three-square and four-square families fall to plain enumeration
    const ObstructionOutcome nine = modular_obstruction(witness_query("9+2j"));
    REQUIRE(nine.certified());
    CHECK(nine.certificate->enumeration_count == 64);

    const ObstructionOutcome eight = modular_obstruction(witness_query("8+2k"));
    REQUIRE(eight.certified());
    CHECK(eight.certificate->enumeration_count == 4194304);
}

TEST_CASE("two-square families need the pinned case split") {
    for (const char* name : {"2+2i", "4+2i"}) {
        const ObstructionOutcome plain = modular_obstruction(witness_query(name, false));
        REQUIRE_FALSE(plain.certified());
        REQUIRE(plain.evidence.has_value());
        // the reported residues really do satisfy every congruence: re-check
        // the real equation mod 4 by hand
        const auto& ev = *plain.evidence;
        std::int64_t real = 0, eq_i = 0, eq_j = 0, eq_k = 0;
        for (const auto& p : ev.parts) {
            real += p[0] * p[0] - ev.a_residue * p[1] * p[1] - ev.b_residue * p[2] * p[2] -
                    ev.a_residue * ev.b_residue * p[3] * p[3];
            eq_i += p[0] * p[1];
            eq_j += p[0] * p[2];
            eq_k += p[0] * p[3];
        }
        const std::int64_t alpha0 = witness_query(name, false).pattern[0];
        CHECK(((real - alpha0) % 4 + 4) % 4 == 0);
        CHECK(((eq_i - 1) % 2 + 2) % 2 == 0);
        CHECK(eq_j % 2 == 0);
        CHECK(eq_k % 2 == 0);

        const ObstructionOutcome pinned = modular_obstruction(witness_query(name, true));
        CHECK(pinned.certified());
    }
}

TEST_CASE("wrong class is inconclusive") {
    // 2+2i over a = 3 mod 4 admits real solutions, e.g. (1+i)^2 + 2^2 in Q_{3,b}
    ObstructionQuery q = witness_query("2+2i", false);
    q.ring_class.a_residues = {3};
    CHECK_FALSE(modular_obstruction(q).certified());
}

TEST_CASE("witness suite certifies all four families") {
    const std::vector<ObstructionCertificate> suite = witness_suite();
    REQUIRE(suite.size() == 4);
    for (const ObstructionCertificate& c : suite) CHECK(c.exhaustive);
    CHECK(suite[0].query.pin_jk_zero);        // 2+2i
    CHECK(suite[1].query.pin_jk_zero);        // 4+2i
    CHECK_FALSE(suite[2].query.pin_jk_zero);  // 9+2j
    CHECK_FALSE(suite[3].query.pin_jk_zero);  // 8+2k
}

TEST_CASE("reduced ranges match the plain enumeration") {
    ObstructionOptions naive;
    naive.reduce_ranges = false;
    const ObstructionOutcome reduced = modular_obstruction(witness_query("9+2j"));
    const ObstructionOutcome plain = modular_obstruction(witness_query("9+2j"), naive);
    CHECK(reduced.certified());
    CHECK(plain.certified());
    CHECK(plain.enumeration_count == 4096);  // full square periods
    CHECK(reduced.enumeration_count == 64);

    // and on an inconclusive case both find evidence
    ObstructionQuery q = witness_query("2+2i", false);
    q.ring_class.a_residues = {3};
    CHECK_FALSE(modular_obstruction(q, naive).certified());
}

TEST_CASE("serial and parallel scans agree") {
    for (const char* name : {"9+2j", "8+2k"}) {
        const ObstructionOutcome par = modular_obstruction(witness_query(name));
        const ObstructionOutcome ser = modular_obstruction(witness_query(name), serial_opts());
        CHECK(par.certified() == ser.certified());
        CHECK(par.enumeration_count == ser.enumeration_count);
    }
    ObstructionQuery q = witness_query("2+2i", false);
    q.ring_class.a_residues = {3};
    const ObstructionOutcome par = modular_obstruction(q);
    const ObstructionOutcome ser = modular_obstruction(q, serial_opts());
    REQUIRE((par.evidence.has_value() && ser.evidence.has_value()));
    CHECK(par.evidence->a_residue == ser.evidence->a_residue);
    CHECK(par.evidence->b_residue == ser.evidence->b_residue);
    CHECK(par.evidence->parts == ser.evidence->parts);
}

TEST_CASE("tuple ceiling refusal") {
    ObstructionOptions tiny;
    tiny.tuple_ceiling = 10;
    CHECK_THROWS_AS(modular_obstruction(witness_query("8+2k"), tiny),
                    enumeration_too_large_error);
}

TEST_CASE("pinned split is restricted to its justified shape") {
    ObstructionQuery q = witness_query("9+2j");
    q.pin_jk_zero = true;  // k = 3, j-witness: the divisibility argument does not apply
    CHECK_THROWS_AS(modular_obstruction(q), std::invalid_argument);
}

TEST_CASE("certificates replay from their JSON form") {
    for (const ObstructionCertificate& cert : witness_suite()) {
        const nlohmann::json j = certificate_json(cert);
        const ObstructionQuery q = query_from_json(j);
        const ObstructionOutcome replay = modular_obstruction(q);
        REQUIRE(replay.certified());
        CHECK(replay.certificate->enumeration_count == cert.enumeration_count);
        CHECK(certificate_json(*replay.certificate) == j);
    }
}

TEST_CASE("certificates are sound against the oracle") {
    // sampled rings inside each certified class: the oracle finds no k-part
    // decomposition within its box
    const struct {
        RingParams ring;
        std::array<std::int64_t, 4> pattern;
        int k;
        std::int64_t box;
    } spots[] = {
        {RingParams(1, 1), {2, 2, 0, 0}, 2, 5},
        {RingParams(2, 3), {2, 2, 0, 0}, 2, 5},
        {RingParams(5, 7), {2, 2, 0, 0}, 2, 5},
        {RingParams(6, 12), {2, 2, 0, 0}, 2, 4},
        {RingParams(4, 9), {4, 2, 0, 0}, 2, 5},
        {RingParams(3, 2), {4, 2, 0, 0}, 2, 5},
        {RingParams(7, 11), {4, 2, 0, 0}, 2, 4},
        {RingParams(4, 7), {9, 0, 2, 0}, 3, 4},
        {RingParams(8, 3), {9, 0, 2, 0}, 3, 4},
        {RingParams(12, 11), {9, 0, 2, 0}, 3, 3},
        {RingParams(4, 4), {8, 0, 0, 2}, 4, 3},
        {RingParams(8, 12), {8, 0, 0, 2}, 4, 3},
    };
    for (const auto& s : spots) {
        const Quaternion alpha{s.ring, s.pattern[0], s.pattern[1], s.pattern[2], s.pattern[3]};
        const OracleResult r = min_squares_oracle(alpha, s.box);
        if (r.count) CHECK(*r.count > s.k);
        else CHECK(r.lower_bound == 6);
    }
}
