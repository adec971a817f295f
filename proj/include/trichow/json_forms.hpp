#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "trichow/grr_porteous.hpp"
#include "trichow/jet_divisors.hpp"
#include "trichow/kl_relations.hpp"
#include "trichow/trigonal_lab.hpp"

namespace trichow {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Relation certificates
// ---------------------------------------------------------------------------

inline Json certificate_to_json(const RelationCertificate& cert) {
    Json steps = Json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"name", s.name}, {"lhs", s.lhs}, {"rhs", s.rhs},
                         {"provenance", s.provenance}});
    return Json{{"genus", cert.genus},
                {"b", cert.b.str()},
                {"steps", steps},
                {"assumptions", cert.assumptions},
                {"conclusion", cert.conclusion}};
}

inline RelationCertificate certificate_from_json(const Json& j) {
    RelationCertificate cert;
    cert.genus = j.at("genus").get<int>();
    cert.b = Rational::parse(j.at("b").get<std::string>());
    for (const auto& s : j.at("steps"))
        cert.steps.push_back({s.at("name").get<std::string>(), s.at("lhs").get<std::string>(),
                              s.at("rhs").get<std::string>(),
                              s.at("provenance").get<std::string>()});
    for (const auto& a : j.at("assumptions")) cert.assumptions.push_back(a.get<std::string>());
    cert.conclusion = j.at("conclusion").get<std::string>();
    return cert;
}

// ---------------------------------------------------------------------------
// Curves, branch reports, audits, experiments
// ---------------------------------------------------------------------------

struct CurveFile {
    TrigonalCurve<Rational> curve;
    std::uint64_t prime = 0;  // 0 = rationals
};

inline Json curve_to_json(const TrigonalCurve<Rational>& c, std::uint64_t prime = 0) {
    Json coeffs = Json::array();
    for (const auto& ci : c.coeffs) {
        Json row = Json::array();
        for (const auto& v : ci) row.push_back(v.str());
        coeffs.push_back(row);
    }
    Json field = prime == 0 ? Json{{"type", "Q"}}
                            : Json{{"type", "Fp"}, {"p", prime}};
    return Json{{"m", c.m}, {"k", c.k}, {"field", field}, {"coeffs", coeffs}};
}

inline CurveFile curve_from_json(const Json& j) {
    CurveFile out;
    out.curve.m = j.at("m").get<int>();
    out.curve.k = j.at("k").get<int>();
    const auto& field = j.at("field");
    std::string type = field.at("type").get<std::string>();
    if (type == "Fp") out.prime = field.at("p").get<std::uint64_t>();
    else if (type != "Q") throw CalcError("parse", "unknown field type " + type);
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != 4) throw CalcError("parse", "curve needs exactly four coefficient rows");
    for (size_t i = 0; i < 4; ++i) {
        std::vector<Rational> row;
        for (const auto& v : coeffs[i]) row.push_back(Rational::parse(v.get<std::string>()));
        out.curve.coeffs[i] = std::move(row);
    }
    out.curve.validate();
    return out;
}

template <class K>
Json branch_report_to_json(const BranchReport<K>& rep) {
    Json points = Json::array();
    for (const auto& p : rep.points)
        points.push_back({{"factor", p.factor.str()},
                          {"degree", p.degree},
                          {"multiplicity", p.multiplicity},
                          {"profile", profile_name(p.profile)}});
    return Json{{"disc", rep.disc.str()},
                {"points", points},
                {"branch_points", rep.branch_point_count()},
                {"ramification_weight", rep.ramification_weight()}};
}

inline Json audit_to_json(const AuditReport& a) {
    Json rows = Json::array();
    for (const auto& r : a.rows)
        rows.push_back({{"factor", r.factor}, {"degree", r.degree},
                        {"multiplicity", r.multiplicity}, {"profile", r.profile},
                        {"single_multiple_root", r.single_multiple_root}});
    return Json{{"pass", a.pass},
                {"fibers", a.fibers},
                {"simple_fibers", a.simple_fibers},
                {"triple_fibers", a.triple_fibers},
                {"violations",
                 Json{{"S_1_2", a.maxwell_violations},
                      {"S_3_1", a.fourfold_violations},
                      {"S_1_1_2_1", a.mixed_violations}}},
                {"anomalous_fibers", a.anomalous_fibers},
                {"ramification_weight", a.ramification_weight},
                {"rows", rows}};
}

inline Json pencil_to_json(const PencilExperiment& e) {
    Json profile = Json::array();
    for (auto [d, m] : e.count_profile) profile.push_back({{"degree", d}, {"multiplicity", m}});
    return Json{{"genus", e.genus},
                {"seed", e.seed},
                {"field", e.field_desc},
                {"count", e.count},
                {"predicted", e.predicted},
                {"match", e.match},
                {"count_profile", profile},
                {"members", Json::array({curve_to_json(e.member0), curve_to_json(e.member1)})}};
}

// ---------------------------------------------------------------------------
// Divisor tables, Z-class fragments, stratum classes
// ---------------------------------------------------------------------------

inline Json jet_divisors_to_json(int g) {
    JetContext ctx(g);
    Json classes = Json::array();
    std::vector<DivisorClassPW> wside, uside;
    for (PWClass w : {PWClass::delta_n, PWClass::xi_tr, PWClass::delta_red, PWClass::delta_ram}) {
        auto d = subbundle_divisor_class(ctx, w);
        classes.push_back({{"name", pw_class_name(w)},
                           {"h", d.h_coeff.str()},
                           {"base", d.base_part.str()}});
        if (w == PWClass::delta_n || w == PWClass::xi_tr) wside.push_back(d);
        else uside.push_back(d);
    }
    return Json{{"genus", g},
                {"classes", classes},
                {"independence_rank_with_delta",
                 Json{{"ramification_side", independence_rank(wside, true)},
                      {"triple_side", independence_rank(uside, true)}}},
                {"z_degree", z_degree(g).str()}};
}

inline Json solve_z_to_json(int g) {
    auto r = solve_Z(g);
    return Json{{"step", "solve-Z"},
                {"genus", g},
                {"identity", r.identity},
                {"z_coefficient", r.z_coefficient.str()},
                {"assumptions", Json::array()}};
}

inline Json maroni_to_json(int g, int max_n) {
    Json classes = Json::array();
    for (int n = g % 2; n <= max_n; n += 2) {
        auto mc = maroni_stratum_class(g, n);
        classes.push_back({{"step", "maroni-stratum"},
                           {"n", mc.n},
                           {"codim", mc.codim},
                           {"identity", "[N_" + std::to_string(mc.n) + "] = " + mc.str()},
                           {"assumptions", mc.assumptions}});
    }
    return Json{{"genus", g}, {"classes", classes}};
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CalcError("missing file", "cannot open " + path);
    Json j;
    in >> j;
    return j;
}

} // namespace trichow
