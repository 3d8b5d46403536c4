#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatsq/decompose.hpp"
#include "quatsq/gtable.hpp"
#include "quatsq/json_io.hpp"
#include "quatsq/obstruction.hpp"
#include "quatsq/oracle.hpp"
#include "quatsq/ternary.hpp"

#ifdef QUATSQ_HAVE_OPENMP
#include <omp.h>
#endif

// Exit codes: 0 success, 1 input not in Q^2, 2 search exhausted or
// inconclusive, 3 malformed flags or input.

namespace {

int run_decompose(std::int64_t a, std::int64_t b, const std::string& alpha_text) {
    const quatsq::RingParams ring(a, b);
    const quatsq::Quaternion alpha = quatsq::parse_quaternion(ring, alpha_text);
    const quatsq::Decomposition d = quatsq::decompose(alpha);
    const nlohmann::json j = quatsq::decomposition_json(d);
    if (!j.at("verified").get<bool>()) {
        std::cerr << "decomposition failed verification\n";
        return 2;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int run_min(std::int64_t a, std::int64_t b, const std::string& alpha_text, std::int64_t bound) {
    const quatsq::RingParams ring(a, b);
    const quatsq::Quaternion alpha = quatsq::parse_quaternion(ring, alpha_text);
    const quatsq::OracleResult r = quatsq::min_squares_oracle(alpha, bound);
    nlohmann::json j{{"lower_bound", r.lower_bound}, {"box", r.box}};
    if (r.count)
        j["min"] = *r.count;
    else
        j["min"] = nullptr;
    std::cout << j.dump() << "\n";
    if (!r.count)
        std::cerr << "no representation with at most 5 squares inside |coeff| <= " << r.box
                  << "; the minimum is only bounded below\n";
    return 0;
}

int run_gvalue(std::int64_t a, std::int64_t b) {
    std::cout << quatsq::gbounds_json(quatsq::g_bounds(a, b)).dump() << "\n";
    return 0;
}

int run_certify(const std::string& witness) {
    quatsq::ObstructionOutcome outcome =
        quatsq::modular_obstruction(quatsq::witness_query(witness, false));
    if (!outcome.certified() && (witness == "2+2i" || witness == "4+2i")) {
        std::cerr << "plain enumeration inconclusive; applying the pinned j/k case split\n";
        outcome = quatsq::modular_obstruction(quatsq::witness_query(witness, true));
    }
    if (!outcome.certified()) {
        const auto& ev = *outcome.evidence;
        std::cerr << "inconclusive: residues a=" << ev.a_residue << " b=" << ev.b_residue
                  << " admit a solution of every congruence\n";
        return 2;
    }
    std::cout << quatsq::certificate_json(*outcome.certificate).dump() << "\n";
    return 0;
}

int run_residue_set(const std::string& form, std::int64_t modulus) {
    quatsq::TernaryDiagonalForm f;
    quatsq::ExclusionPattern p;
    if (form == "2,2") {
        f = quatsq::form_22();
        p = quatsq::pattern_22();
    } else if (form == "2,3") {
        f = quatsq::form_23();
        p = quatsq::pattern_23();
    } else {
        std::cerr << "--form must be 2,2 or 2,3\n";
        return 3;
    }
    const quatsq::ResidueSet s = quatsq::residue_set(f, p, modulus);
    std::cout << nlohmann::json(s.classes).dump() << "\n";
    return 0;
}

int run_table(std::int64_t amax, std::int64_t bmax, const std::string& format) {
    if (format == "tsv") {
        for (std::int64_t a = 1; a <= amax; ++a)
            for (std::int64_t b = 1; b <= bmax; ++b) {
                const quatsq::GValueBounds g = quatsq::g_bounds(a, b);
                std::cout << a << "\t" << b << "\t" << g.lower << "\t" << g.upper << "\t"
                          << (g.exact ? 1 : 0) << "\n";
            }
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (std::int64_t a = 1; a <= amax; ++a)
            for (std::int64_t b = 1; b <= bmax; ++b) {
                nlohmann::json row = quatsq::gbounds_json(quatsq::g_bounds(a, b));
                row["a"] = a;
                row["b"] = b;
                rows.push_back(std::move(row));
            }
        std::cout << rows.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef QUATSQ_HAVE_OPENMP
    if (const char* env = std::getenv("QUATSQ_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif

    CLI::App app{"sums of squares in the quaternion rings Q_{a,b}"};
    app.require_subcommand(1);

    std::int64_t a = 1, b = 1, bound = 5, modulus = 32, amax = 10, bmax = 10;
    std::string alpha_text, witness, form, format = "tsv";

    CLI::App* decompose = app.add_subcommand("decompose", "write alpha as a sum of squares");
    decompose->add_option("--a", a, "ring parameter a")->required();
    decompose->add_option("--b", b, "ring parameter b")->required();
    decompose->add_option("--alpha", alpha_text, "target \"c0,c1,c2,c3\"")->required();

    CLI::App* min = app.add_subcommand("min", "minimum squares within a coefficient box");
    min->add_option("--a", a)->required();
    min->add_option("--b", b)->required();
    min->add_option("--alpha", alpha_text)->required();
    min->add_option("--bound", bound, "coefficient box bound (default 5)");

    CLI::App* gvalue = app.add_subcommand("gvalue", "bounds on g_{a,b}(2)");
    gvalue->add_option("--a", a)->required();
    gvalue->add_option("--b", b)->required();

    CLI::App* certify = app.add_subcommand("certify", "modular obstruction certificate");
    certify->add_option("--witness", witness, "one of 2+2i, 4+2i, 9+2j, 8+2k")->required();

    CLI::App* residue = app.add_subcommand("residue-set", "completely represented residue classes");
    residue->add_option("--form", form, "2,2 or 2,3")->required();
    residue->add_option("--modulus", modulus)->required();

    CLI::App* table = app.add_subcommand("table", "g-value table");
    table->add_option("--amax", amax)->required();
    table->add_option("--bmax", bmax)->required();
    table->add_option("--format", format, "tsv (default) or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (decompose->parsed()) return run_decompose(a, b, alpha_text);
        if (min->parsed()) return run_min(a, b, alpha_text, bound);
        if (gvalue->parsed()) return run_gvalue(a, b);
        if (certify->parsed()) return run_certify(witness);
        if (residue->parsed()) return run_residue_set(form, modulus);
        if (table->parsed()) return run_table(amax, bmax, format);
    } catch (const quatsq::not_in_square_class_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const quatsq::search_exhausted_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const quatsq::enumeration_too_large_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 3;
}
