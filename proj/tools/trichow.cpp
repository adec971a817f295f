// Command-line front end: every pipeline of the engine behind one binary,
// with text output for humans and JSON certificates for machines.
//
// Exit codes: 0 success, 1 verification failure (an identity or count did
// not check out), 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "trichow/json_forms.hpp"

using namespace trichow;

namespace {

int run_derive_main_relation(int genus, bool symbolic_b, const std::string& format) {
    RelationCertificate cert = main_certificate(genus);
    if (!verify_certificate(cert)) {
        std::cerr << "certificate failed to re-verify\n";
        return 1;
    }
    Json out = certificate_to_json(cert);
    if (symbolic_b) {
        auto sym = eliminate_relations_symbolic();
        Json steps = Json::array();
        for (const auto& s : sym.steps)
            steps.push_back({{"name", s.name}, {"lhs", s.lhs}, {"rhs", s.rhs},
                             {"provenance", s.provenance}});
        out["symbolic_derivation"] = Json{{"b", "indeterminate"},
                                          {"steps", steps},
                                          {"final_coefficient", sym.final_coeff.str()}};
        // cross-check: the symbolic coefficient specializes to the numeric one
        Rational b(2 * genus + 4);
        Rational num = sym.final_coeff.num().evaluate({b});
        Rational den = sym.final_coeff.den().evaluate({b});
        Rational specialized = num / den;
        Rational numeric = (b * b - b) * Rational(1, 3);
        if (specialized != numeric) {
            std::cerr << "symbolic and numeric final coefficients disagree\n";
            return 1;
        }
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "main relation certificate, genus " << genus << " (b = " << cert.b.str()
                  << ")\n";
        for (const auto& s : cert.steps)
            std::cout << "  [" << s.provenance << "] " << s.name << ": " << s.lhs << " = "
                      << s.rhs << "\n";
        for (const auto& a : cert.assumptions) std::cout << "  [assumption] " << a << "\n";
        std::cout << "conclusion: " << cert.conclusion << "\n";
        if (symbolic_b)
            std::cout << "symbolic-b cross-check: final coefficient (b^2 - b)/3 agrees\n";
    }
    return 0;
}

int run_jet_divisors(int genus, const std::string& format) {
    Json j = jet_divisors_to_json(genus);
    size_t rank_w = j["independence_rank_with_delta"]["ramification_side"].get<size_t>();
    size_t rank_u = j["independence_rank_with_delta"]["triple_side"].get<size_t>();
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << divisor_table(genus);
        std::cout << "independence rank {delta, delta_n, xi_tr} = " << rank_w << "\n";
        std::cout << "independence rank {delta, delta_red, delta_ram} = " << rank_u << "\n";
        std::cout << "z-degree = " << j["z_degree"].get<std::string>() << "\n";
    }
    return (rank_w == 3 && rank_u == 3) ? 0 : 1;
}

int run_grr_push(int genus, const std::string& format) {
    Json j = solve_z_to_json(genus);
    if (format == "json") std::cout << j.dump(2) << "\n";
    else
        std::cout << "coefficient of Z: " << j["z_coefficient"].get<std::string>() << "\n"
                  << j["identity"].get<std::string>() << "\n";
    return 0;
}

int run_maroni(int genus, int max_n, const std::string& format) {
    Json j = maroni_to_json(genus, max_n);
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : j["classes"])
            std::cout << "n = " << c["n"].get<int>() << " (codim " << c["codim"].get<int>()
                      << "): " << c["identity"].get<std::string>() << "\n";
    }
    return 0;
}

template <class K>
Json analyze_curve(const TrigonalCurve<K>& curve) {
    Json out;
    out["genus"] = curve.genus();
    out["smooth"] = is_smooth(curve);
    if (out["smooth"].get<bool>()) {
        out["branch_report"] = branch_report_to_json(branch_report(curve));
        out["audit"] = audit_to_json(forbidden_strata_audit(curve));
    }
    return out;
}

int run_curve_analyze(const std::string& path, const std::string& format) {
    CurveFile cf = curve_from_json(load_json_file(path));
    Json out;
    if (cf.prime == 0) {
        out = analyze_curve(cf.curve);
        out["field"] = "Q";
    } else {
        Fp::check_modulus(cf.prime);
        if (cf.prime <= static_cast<std::uint64_t>(4 * cf.curve.k))
            throw CalcError("bad prime", "prime must exceed the branch divisor degree");
        TrigonalCurve<Fp> curve;
        curve.m = cf.curve.m;
        curve.k = cf.curve.k;
        for (size_t i = 0; i < 4; ++i) {
            std::vector<Fp> row;
            for (const auto& q : cf.curve.coeffs[i]) row.emplace_back(q.mod(cf.prime), cf.prime);
            curve.coeffs[i] = std::move(row);
        }
        out = analyze_curve(curve);
        out["field"] = "F_" + std::to_string(cf.prime);
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "genus " << out["genus"].get<int>() << " over " << out["field"].get<std::string>()
              << ": " << (out["smooth"].get<bool>() ? "smooth" : "not smooth") << "\n";
    if (out["smooth"].get<bool>()) {
        const auto& rep = out["branch_report"];
        std::cout << "branch points: " << rep["branch_points"].get<int>()
                  << ", ramification weight: " << rep["ramification_weight"].get<int>() << "\n";
        for (const auto& p : rep["points"])
            std::cout << "  " << p["factor"].get<std::string>() << "  mult "
                      << p["multiplicity"].get<int>() << "  profile "
                      << p["profile"].get<std::string>() << "\n";
        std::cout << (out["audit"]["pass"].get<bool>() ? "audit: pass\n" : "audit: FAIL\n");
        std::cout << "S_1_2 violations: " << out["audit"]["violations"]["S_1_2"].get<int>() << "\n";
        std::cout << "S_3_1 violations: " << out["audit"]["violations"]["S_3_1"].get<int>() << "\n";
        std::cout << "S_1_1_2_1 violations: "
                  << out["audit"]["violations"]["S_1_1_2_1"].get<int>() << "\n";
    }
    return 0;
}

int run_curve_random(int genus, std::uint64_t seed, const std::string& outfile,
                     const std::string& format) {
    auto s = random_smooth_curve(genus, seed);
    Json j = curve_to_json(s.curve);
    j["attempts"] = s.attempts;
    if (!outfile.empty()) {
        std::ofstream out(outfile);
        if (!out) throw CalcError("missing file", "cannot write " + outfile);
        out << j.dump(2) << "\n";
    }
    if (format == "json") std::cout << j.dump(2) << "\n";
    else
        std::cout << "smooth genus-" << genus << " curve on F_" << s.curve.m << " (class 3s + "
                  << s.curve.k << "f), found in " << s.attempts << " attempts"
                  << (outfile.empty() ? "" : ", written to " + outfile) << "\n";
    return 0;
}

int run_pencil_count(int genus, std::uint64_t seed, std::uint64_t prime,
                     const std::string& format) {
    auto e = pencil_triple_count(genus, seed, prime);
    if (format == "json") std::cout << pencil_to_json(e).dump(2) << "\n";
    else
        std::cout << "count=" << e.count << " predicted=" << e.predicted << " "
                  << (e.match ? "MATCH" : "MISMATCH") << "\n";
    return e.match ? 0 : 1;
}

int run_selfcheck(int max_genus) {
    int failures = 0;
    auto check = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "ok   " : "FAIL ") << name << "  (" << dt << "s)";
        if (!ok && !detail.empty()) std::cout << "  " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    };

    check("todd-degree-3-vanishing", [] {
        auto t = todd_series(4);
        return t[3] == Rational(0) && t[4] == Rational(-1, 720);
    });
    check("kl-elimination", [&] {
        for (int g = 2; g <= max_genus; ++g) {
            auto e = eliminate_relations(g);
            Rational b(2 * g + 4);
            if (e.final_coeff != (b * b - b) * Rational(1, 3) || !e.psi2_vanishes) return false;
        }
        return true;
    });
    check("certificate-roundtrip", [&] {
        auto cert = main_certificate(std::min(4, max_genus));
        auto back = certificate_from_json(certificate_to_json(cert));
        return verify_certificate(back);
    });
    check("jet-divisor-displays", [&] {
        for (int g = 2; g <= max_genus; ++g) {
            JetContext ctx(g);
            auto sc = structure_classes(ctx.curve.m);
            if (!(subbundle_divisor_class(ctx, PWClass::delta_n).base_part
                  == ctx.curve.C + sc.omega_pi.scaled(Rational(2)))) return false;
            if (!(subbundle_divisor_class(ctx, PWClass::xi_tr).base_part
                  == ctx.curve.C + sc.pullback_omega_p1)) return false;
            if (!(subbundle_divisor_class(ctx, PWClass::delta_red).base_part
                  == ctx.curve.C + sc.omega_pi.scaled(Rational(3)))) return false;
            if (!(subbundle_divisor_class(ctx, PWClass::delta_ram).base_part
                  == ctx.curve.C + sc.pullback_omega_p1)) return false;
            auto dn = subbundle_divisor_class(ctx, PWClass::delta_n);
            auto xt = subbundle_divisor_class(ctx, PWClass::xi_tr);
            auto dr = subbundle_divisor_class(ctx, PWClass::delta_red);
            auto dm = subbundle_divisor_class(ctx, PWClass::delta_ram);
            if (independence_rank({dn, xt}, true) != 3) return false;
            if (independence_rank({dr, dm}, true) != 3) return false;
        }
        return true;
    });
    check("solve-z-sweep", [&] {
        for (int g = 1; g <= max_genus; ++g)
            if (solve_Z(g).z_coefficient != Rational(g, 2)) return false;
        return true;
    });
    check("pgl-c2-twist-invariance", [] {
        RingPresentation<Rational> p;
        p.generators = {{"c1", 1}, {"c2", 2}, {"t", 1}};
        p.cap = 2;
        auto r = RingContext<Rational>::build(p);
        SheafClass<Rational> w(2, RingElt<Rational>::scalar(r, Rational(1))
            + RingElt<Rational>::generator(r, "c1") + RingElt<Rational>::generator(r, "c2"));
        return pgl_normalized_c2(twist_by_line(w, RingElt<Rational>::generator(r, "t")))
            == pgl_normalized_c2(w);
    });
    check("adjunction-and-maroni-bounds", [&] {
        for (int g = 2; g <= std::max(max_genus, 10); ++g) {
            auto t = trigonal_class_data(g);
            FmRing F(t.m);
            auto sc = structure_classes(t.m);
            if (F.pair(t.C, t.C + sc.K) != Rational(2 * g - 2)) return false;
            auto adm = admissible_maroni(g);
            if (adm.front() != t.m) return false;
        }
        return true;
    });
    check("z-degree-values", [&] {
        if (z_degree(2) != Rational(12) || z_degree(3) != Rational(15)
            || z_degree(4) != Rational(18)) return false;
        for (int g = 2; g <= std::max(max_genus, 10); ++g) {
            Rational z = z_degree(g);
            if (!z.is_integer() || !(z > Rational(0))) return false;
        }
        return true;
    });
    check("maroni-stratum-shapes", [] {
        return maroni_stratum_class(4, 2).codim == 1 && maroni_stratum_class(5, 3).codim == 2;
    });
    check("jet-evaluation-ranks", [] {
        for (int g : {2, 3, 4})
            if (jet_evaluation_rank(g, 3, 1) != 3) return false;
        return true;
    });
    check("pencil-cross-validation", [] {
        for (int g : {2, 3})
            if (!pencil_triple_count(g, 1).match) return false;
        return true;
    });
    check("riemann-hurwitz-audits", [] {
        for (int g = 2; g <= 5; ++g)
            for (std::uint64_t seed = 1; seed <= 3; ++seed)
                if (!forbidden_strata_audit(random_smooth_curve(g, seed).curve).pass) return false;
        return true;
    });
    check("degree-4-guard", [] {
        try {
            eliminate_relations(2, 4, false);
            return false;
        } catch (const CalcError&) {
        }
        return !eliminate_relations(2, 4, true).psi2_vanishes;
    });

    std::cout << (failures == 0 ? "selfcheck: all checks passed\n"
                                : "selfcheck: " + std::to_string(failures) + " failure(s)\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory engine for trigonal covers"};
    app.require_subcommand(1);
    std::string format = "text";

    int genus = 2;
    bool symbolic_b = false;
    auto* derive = app.add_subcommand("derive-main-relation",
                                      "derive and certify the main relation kappa1^2 = 0");
    derive->add_option("--genus", genus, "genus (>= 2)")->required();
    derive->add_flag("--symbolic-b", symbolic_b, "also run the derivation with b indeterminate");
    derive->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    int jd_genus = 2;
    auto* jd = app.add_subcommand("jet-divisors", "divisor table and independence ranks");
    jd->add_option("--genus", jd_genus, "genus (>= 2)")->required();
    jd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    int grr_genus = 2;
    auto* grr = app.add_subcommand("grr-push", "solve the pushforward identity for Z");
    grr->add_option("--genus", grr_genus, "genus (>= 1)")->required();
    grr->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    int mar_genus = 4, mar_maxn = 3;
    auto* mar = app.add_subcommand("maroni-classes", "stratum classes through Thom-Porteous");
    mar->add_option("--genus", mar_genus, "genus (>= 2)")->required();
    mar->add_option("--max-n", mar_maxn, "largest stratum value")->required();
    mar->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* curve = app.add_subcommand("curve", "concrete curve operations");
    curve->require_subcommand(1);
    std::string analyze_path;
    auto* canalyze = curve->add_subcommand("analyze", "smoothness, branch report, audit");
    canalyze->add_option("file", analyze_path, "curve JSON file")->required();
    canalyze->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    int rnd_genus = 2;
    std::uint64_t rnd_seed = 1;
    std::string rnd_out;
    auto* crandom = curve->add_subcommand("random", "sample a seed-fixed smooth curve");
    crandom->add_option("--genus", rnd_genus, "genus (>= 2)")->required();
    crandom->add_option("--seed", rnd_seed, "sampling seed")->required();
    crandom->add_option("--out", rnd_out, "write the curve JSON here");
    crandom->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    int pc_genus = 2;
    std::uint64_t pc_seed = 1, pc_prime = 0;
    auto* pc = app.add_subcommand("pencil-count", "count triple-ramification members of a pencil");
    pc->add_option("--genus", pc_genus, "genus in {2, 3, 4}")->required();
    pc->add_option("--seed", pc_seed, "sampling seed")->required();
    pc->add_option("--prime", pc_prime, "run over F_p instead of Q");
    pc->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    int sc_maxg = 10;
    auto* sc = app.add_subcommand("selfcheck", "run the invariant suite");
    sc->add_option("--max-genus", sc_maxg, "sweep bound for the genus loops");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (derive->parsed()) return run_derive_main_relation(genus, symbolic_b, format);
        if (jd->parsed()) return run_jet_divisors(jd_genus, format);
        if (grr->parsed()) return run_grr_push(grr_genus, format);
        if (mar->parsed()) return run_maroni(mar_genus, mar_maxn, format);
        if (curve->parsed()) {
            if (canalyze->parsed()) return run_curve_analyze(analyze_path, format);
            if (crandom->parsed()) return run_curve_random(rnd_genus, rnd_seed, rnd_out, format);
        }
        if (pc->parsed()) return run_pencil_count(pc_genus, pc_seed, pc_prime, format);
        if (sc->parsed()) return run_selfcheck(sc_maxg);
    } catch (const VerifyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const CalcError& e) {
        if (e.code() == "retry with new seed") {
            std::cerr << "degenerate experiment: " << e.what() << "\n";
            return 1;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
