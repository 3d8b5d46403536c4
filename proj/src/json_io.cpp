#include "quatsq/json_io.hpp"

namespace quatsq {

namespace {

const char* eq_name(CoeffEq e) {
    switch (e) {
        case CoeffEq::Real: return "real";
        case CoeffEq::I: return "i";
        case CoeffEq::J: return "j";
        case CoeffEq::K: return "k";
    }
    return "?";
}

CoeffEq eq_from_name(const std::string& s) {
    if (s == "real") return CoeffEq::Real;
    if (s == "i") return CoeffEq::I;
    if (s == "j") return CoeffEq::J;
    if (s == "k") return CoeffEq::K;
    throw std::invalid_argument("quatsq: unknown coefficient equation \"" + s + "\"");
}

}  // namespace

nlohmann::json quaternion_json(const Quaternion& q) {
    return nlohmann::json::array({q.c0, q.c1, q.c2, q.c3});
}

nlohmann::json decomposition_json(const Decomposition& d) {
    nlohmann::json parts = nlohmann::json::array();
    for (const Quaternion& p : d.parts) parts.push_back(quaternion_json(p));
    return {{"target", quaternion_json(d.target)},
            {"parts", parts},
            {"method", method_name(d.method)},
            {"count", d.parts.size()},
            {"verified", verify_decomposition(d)}};
}

nlohmann::json gbounds_json(const GValueBounds& g) {
    return {{"lower", g.lower},
            {"upper", g.upper},
            {"exact", g.exact},
            {"sources", g.sources},
            {"flags", g.flags}};
}

nlohmann::json certificate_json(const ObstructionCertificate& cert) {
    nlohmann::json moduli = nlohmann::json::object();
    for (const auto& [eq, m] : cert.query.moduli) moduli[eq_name(eq)] = m;
    return {{"pattern", cert.query.pattern},
            {"k", cert.query.k},
            {"ring_class",
             {{"a_modulus", cert.query.ring_class.a_modulus},
              {"a_residues", cert.query.ring_class.a_residues},
              {"b_modulus", cert.query.ring_class.b_modulus},
              {"b_residues", cert.query.ring_class.b_residues}}},
            {"moduli", moduli},
            {"pure_parts_pinned", cert.query.pin_jk_zero},
            {"exhaustive", cert.exhaustive},
            {"enumeration_count", cert.enumeration_count}};
}

ObstructionQuery query_from_json(const nlohmann::json& j) {
    ObstructionQuery q;
    q.pattern = j.at("pattern").get<std::array<std::int64_t, 4>>();
    q.k = j.at("k").get<int>();
    const auto& rc = j.at("ring_class");
    q.ring_class.a_modulus = rc.at("a_modulus").get<std::int64_t>();
    q.ring_class.a_residues = rc.at("a_residues").get<std::vector<std::int64_t>>();
    q.ring_class.b_modulus = rc.at("b_modulus").get<std::int64_t>();
    q.ring_class.b_residues = rc.at("b_residues").get<std::vector<std::int64_t>>();
    q.moduli.clear();
    for (const auto& [name, m] : j.at("moduli").items())
        q.moduli[eq_from_name(name)] = m.get<std::int64_t>();
    q.pin_jk_zero = j.at("pure_parts_pinned").get<bool>();
    return q;
}

}  // namespace quatsq
