#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichow/json_forms.hpp"

using namespace trichow;

TEST_CASE("certificate JSON round-trip re-verifies") {
    for (int g : {2, 5, 9}) {
        auto cert = main_certificate(g);
        Json j = certificate_to_json(cert);
        auto back = certificate_from_json(j);
        CHECK(verify_certificate(back));
        CHECK(certificate_to_json(back).dump() == j.dump());  // byte-identical reload
    }
}

TEST_CASE("certificate JSON schema") {
    Json j = certificate_to_json(main_certificate(2));
    CHECK(j.at("genus").get<int>() == 2);
    CHECK(j.at("b").get<std::string>() == "8");
    REQUIRE(j.at("steps").size() == 4);
    CHECK(j.at("steps")[0].at("name") == "xi1-elimination");
    CHECK(j.at("steps")[0].at("provenance") == "computed");
    CHECK(j.at("steps")[3].at("rhs") == "56/3*psi");
    CHECK(j.at("assumptions").size() == 4);
    CHECK(j.at("conclusion").get<std::string>().find("kappa1^2 = 0") != std::string::npos);
    // stable key order for reproducible certificates
    std::string d = j.dump();
    CHECK(d.find("\"genus\"") < d.find("\"b\""));
    CHECK(d.find("\"b\"") < d.find("\"steps\""));
    CHECK(d.find("\"steps\"") < d.find("\"assumptions\""));
    CHECK(d.find("\"assumptions\"") < d.find("\"conclusion\""));
}

TEST_CASE("tampered certificates fail verification") {
    Json j = certificate_to_json(main_certificate(3));
    j["steps"][2]["lhs"] = "psi + psi^2";  // psi itself does not die in the quotient
    CHECK_FALSE(verify_certificate(certificate_from_json(j)));
    Json j2 = certificate_to_json(main_certificate(3));
    j2["b"] = "11";
    CHECK_FALSE(verify_certificate(certificate_from_json(j2)));
}

TEST_CASE("curve JSON round-trip") {
    auto s = random_smooth_curve(3, 11);
    Json j = curve_to_json(s.curve);
    CHECK(j.at("m").get<int>() == 1);
    CHECK(j.at("k").get<int>() == 4);
    CHECK(j.at("field").at("type") == "Q");
    REQUIRE(j.at("coeffs").size() == 4);
    CHECK(j.at("coeffs")[0].size() == 5);  // degree k = 4, ascending in x0
    auto back = curve_from_json(j);
    CHECK(back.prime == 0);
    CHECK(back.curve.coeffs == s.curve.coeffs);
    CHECK(curve_to_json(back.curve).dump() == j.dump());

    Json jp = curve_to_json(s.curve, 10007);
    CHECK(jp.at("field").at("type") == "Fp");
    CHECK(curve_from_json(jp).prime == 10007);
}

TEST_CASE("curve JSON validation errors") {
    auto s = random_smooth_curve(2, 1);
    Json j = curve_to_json(s.curve);
    Json bad = j;
    bad["coeffs"][0] = Json::array({"1", "2"});  // wrong length for its degree
    CHECK_THROWS_AS(curve_from_json(bad), CalcError);
    Json bad2 = j;
    bad2["field"] = Json{{"type", "R"}};
    CHECK_THROWS_AS(curve_from_json(bad2), CalcError);
}

TEST_CASE("pencil experiment JSON and determinism") {
    auto e1 = pencil_triple_count(2, 4);
    auto e2 = pencil_triple_count(2, 4);
    CHECK(pencil_to_json(e1).dump() == pencil_to_json(e2).dump());
    Json j = pencil_to_json(e1);
    CHECK(j.at("count").get<long>() == j.at("predicted").get<long>());
    CHECK(j.at("match").get<bool>());
    CHECK(j.at("members").size() == 2);
}

TEST_CASE("divisor table and stratum class JSON") {
    Json j = jet_divisors_to_json(2);
    REQUIRE(j.at("classes").size() == 4);
    CHECK(j.at("classes")[0].at("name") == "delta_n");
    CHECK(j.at("classes")[0].at("base") == "2*f + -1*s");
    CHECK(j.at("independence_rank_with_delta").at("ramification_side").get<int>() == 3);
    CHECK(j.at("z_degree") == "12");

    Json m = maroni_to_json(4, 2);
    REQUIRE(m.at("classes").size() == 2);
    CHECK(m.at("classes")[1].at("codim").get<int>() == 1);
    CHECK(m.at("classes")[1].at("identity").get<std::string>().find("kappa1")
          != std::string::npos);
    CHECK(m.at("classes")[1].at("assumptions").size() == 3);

    Json z = solve_z_to_json(2);
    CHECK(z.at("step") == "solve-Z");
    CHECK(z.at("z_coefficient") == "1");
    CHECK(z.at("identity") == "Z = 1/2*X*Y + 3/2*X^2");
}

TEST_CASE("branch report and audit JSON") {
    auto s = random_smooth_curve(2, 2);
    auto rep = branch_report(s.curve);
    Json j = branch_report_to_json(rep);
    CHECK(j.at("ramification_weight").get<int>() == 8);
    int total = 0;
    for (const auto& p : j.at("points"))
        total += p.at("degree").get<int>() * p.at("multiplicity").get<int>();
    CHECK(total == 8);
    Json a = audit_to_json(forbidden_strata_audit(s.curve));
    CHECK(a.at("pass").get<bool>());
    CHECK(a.at("violations").at("S_3_1").get<int>() == 0);
}
