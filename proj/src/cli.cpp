#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "su3sl/calibration.hpp"
#include "su3sl/cartan.hpp"
#include "su3sl/curvature4.hpp"
#include "su3sl/frames.hpp"
#include "su3sl/report.hpp"
#include "su3sl/rng.hpp"

namespace su3sl {
namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw UsageError("bad JSON in '" + path + "': " + ex.what());
    }
    return j;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::string seq_str(const std::array<int, 7>& s) {
    std::string r = "(";
    for (unsigned i = 0; i < 7; ++i) r += std::to_string(s[i]) + (i + 1 < 7 ? "," : ")");
    return r;
}

CMat cmat_from_json(const json& j) {
    CMat m;
    for (auto& row : j) {
        std::vector<GQ> r;
        for (auto& v : row) r.push_back(gq_from_json(v));
        m.push_back(std::move(r));
    }
    return m;
}

json cmat_to_json(const CMat& m) {
    json rows = json::array();
    for (auto& row : m) {
        json r = json::array();
        for (auto& v : row) r.push_back(to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

void run_cartan(Report& rep, const std::string& system, const Rational& a0,
                const std::array<GQ, 3>& u0, const std::string& flag_kind, std::uint64_t seed) {
    EDSSystem sys = system == "nearly-cy" ? build_nearly_cy_system() : build_admissible_system(a0, u0);
    std::vector<VectorSlot> flag;
    if (flag_kind == "random") {
        Rng rng(seed);
        flag = random_flag(sys, rng);
    } else {
        flag = default_flag(sys);
    }
    CartanReport cr = cartan_test(sys, flag);

    json cj = json::array(), sj = json::array();
    for (auto v : cr.c) cj.push_back(v);
    for (auto v : cr.s) sj.push_back(v);
    rep.extra = json{{"system", cr.system},
                     {"c", cj},
                     {"s", sj},
                     {"integral_rank", cr.integral_rank},
                     {"test_lhs", cr.test_lhs},
                     {"test_rhs", cr.test_rhs},
                     {"involutive", cr.involutive},
                     {"fiber_count", cr.fiber_count},
                     {"param_count", cr.param_count},
                     {"notes", cr.notes}};

    if (system == "nearly-cy") {
        rep.check("integral-element-rank", "nearly-cy-rank-34", cr.integral_rank == 34,
                  "rank=" + std::to_string(cr.integral_rank));
        std::array<int, 7> want{0, 0, 1, 3, 6, 9, 9};
        rep.check("cartan-characters", "nearly-cy-characters", cr.s == want, seq_str(cr.s));
        rep.check("cartan-test", "cartan-test-weighted-sum",
                  cr.test_lhs == 34 && cr.test_rhs == 34 && cr.involutive,
                  "lhs=" + std::to_string(cr.test_lhs) + " rhs=" + std::to_string(cr.test_rhs));
        rep.check("character-bookkeeping", "last-character-double-entry", cr.bookkeeping_ok, "");
    } else if (sgn(a0) != 0) {
        rep.check("integral-element-rank", "admissible-rank-35", cr.integral_rank == 35,
                  "rank=" + std::to_string(cr.integral_rank));
        std::array<int, 7> want{0, 0, 1, 3, 6, 10, 15};
        rep.check("cartan-characters", "admissible-characters", cr.s == want, seq_str(cr.s));
        rep.check("polar-ranks", "admissible-polar-ranks",
                  cr.c[3] == 4 && cr.c[4] == 10 && cr.c[5] == 20,
                  "c3=" + std::to_string(cr.c[3]) + " c4=" + std::to_string(cr.c[4]) +
                      " c5=" + std::to_string(cr.c[5]));
        rep.check("cartan-test", "cartan-test-weighted-sum", cr.involutive,
                  "lhs=" + std::to_string(cr.test_lhs) + " rhs=" + std::to_string(cr.test_rhs));
        rep.check("character-bookkeeping", "last-character-double-entry", cr.bookkeeping_ok, "");
    } else {
        rep.check("degenerate-locus-c5", "admissible-a0-zero-c5-bound", cr.c[5] <= 17,
                  "c5=" + std::to_string(cr.c[5]));
        rep.check("not-involutive", "admissible-a0-zero-not-involutive", !cr.involutive,
                  "lhs=" + std::to_string(cr.test_lhs) + " rhs=" + std::to_string(cr.test_rhs));
    }
}

void run_torsion(Report& rep, const json& input, bool mu_present) {
    TorsionTensor t = TorsionTensor::zero();
    t.N = cmat_from_json(input.at("N"));
    t.S = cmat_from_json(input.at("S"));
    unsigned k = 0;
    for (auto& v : input.at("lambda")) {
        if (k < 3) t.lam[k++] = gq_from_json(v);
    }
    StructureClass cls = classify_torsion(t, mu_present);
    rep.extra = json{{"class", cls.tag_name()}};
    if (cls.tag == StructureClass::Tag::NearlyKahler) rep.extra["c"] = to_string(cls.nk_constant);
    if (cls.tag == StructureClass::Tag::Admissible) {
        rep.extra["a"] = to_string(cls.a);
        json uj = json::array();
        for (auto& u : *cls.u) uj.push_back(to_json(u));
        rep.extra["theta_u"] = uj;
    }
    RawTorsion raw = raw_from_normalized(t.N);
    rep.check("torsion-reindex-roundtrip", "nijenhuis-reindexing",
              cmat_equal(normalized_from_raw(raw), t.N), "");
    rep.check("classified", "torsion-classification", true, cls.tag_name());
}

void run_twistor(Report& rep, Rational s, bool normalize) {
    Rational factor(1);
    if (normalize) {
        auto [ns, f] = normalize_scalar(s);
        s = ns;
        factor = f;
        rep.extra["scale_factor"] = to_string(factor);
    }
    TwistorTorsion t = twistor_torsion(s);
    rep.extra["N"] = cmat_to_json(t.N);
    rep.extra["class"] = t.cls.tag_name();
    rep.extra["scalar"] = to_string(s);

    GQ trace = t.N[0][0] + t.N[1][1] + t.N[2][2];
    rep.check("nijenhuis-trace", "twistor-trace-identity", trace == GQ(Rational(2) + s / 24),
              "trace=" + trace.str());
    if (s == 24)
        rep.check("nearly-kahler-at-24", "twistor-s24-nearly-kahler",
                  t.cls.tag == StructureClass::Tag::NearlyKahler, t.cls.tag_name());
    else if (s == -48)
        rep.check("strictly-nearly-cy-at-minus-48", "twistor-s-48-nearly-cy",
                  t.cls.tag == StructureClass::Tag::NearlyCalabiYauStrict, t.cls.tag_name());
    else
        rep.check("admissible-for-all-s", "twistor-always-admissible",
                  t.cls.tag != StructureClass::Tag::Generic, t.cls.tag_name());
}

void run_curvature(Report& rep, const json& input) {
    CurvatureMinus rm;
    rm.A = gq_from_json(input.at("A"));
    rm.B = gq_from_json(input.at("B"));
    for (unsigned i = 0; i < 3; ++i) {
        rm.C[i] = gq_from_json(input.at("C").at(i));
        rm.D[i] = gq_from_json(input.at("D").at(i));
    }
    rm.a = parse_rational(input.at("a").get<std::string>());
    rm.b = parse_rational(input.at("b").get<std::string>());

    CurvatureDecomposition d = decompose(rm);
    rep.extra = json{{"Z", cmat_to_json(d.Z)},
                     {"Wminus", cmat_to_json(d.Wminus)},
                     {"s", to_string(d.s)},
                     {"self_dual_einstein", is_self_dual_einstein(rm)}};
    GQ tr = d.Wminus[0][0] + d.Wminus[1][1] + d.Wminus[2][2];
    rep.check("weyl-trace-free", "anti-self-dual-weyl-trace", tr.is_zero(), tr.str());
    rep.check("reassembly", "curvature-decomposition-reassembly",
              cmat_equal(reassemble(d), curvature_matrix(rm)), "");
    if (is_self_dual_einstein(rm)) {
        bool zw = cmat_equal(d.Z, cmat(3, 3)) && cmat_equal(d.Wminus, cmat(3, 3));
        rep.check("sde-blocks-vanish", "self-dual-einstein-characterization",
                  zw && d.s == rm.C[1].re() * 24, "s=" + to_string(d.s));
    }
}

void run_maurer(Report& rep, FrameGroup g) {
    MatchReport m = match_paper_equation(g);
    rep.extra = json{{"group", group_name(g)},
                     {"match", m.match},
                     {"sqrt2_normalized", m.sqrt2_normalized},
                     {"d_squared_zero", m.d_squared_zero},
                     {"diff", m.diff}};
    std::map<std::string, Form> dw = maurer_cartan_derive(g);
    json forms = json::object();
    for (auto& [name, f] : dw) forms["d" + name] = to_json(f);
    rep.extra["structure_equations"] = std::move(forms);
    rep.check("structure-equation-match",
              g == FrameGroup::Sp2 ? "sp2-torsion-column-plus-one" : "sp11-torsion-column-minus-two",
              m.match, m.diff);
    rep.check("d-squared-zero", "maurer-cartan-consistency", m.d_squared_zero, "");
}

void run_involution(Report& rep, FrameGroup g) {
    InvolutionReport r = involution_action(g);
    rep.extra = json{{"group", group_name(g)}};
    rep.check("algebra-automorphism", "involution-multiplicativity", r.automorphism_ok, "");
    rep.check("component-equivariance", "involution-component-map", r.equivariant_ok, "");
    rep.check("omega-to-conjugate", "involution-omega-pullback", r.omega_to_conjugate, "");
    rep.check("squares-to-identity", "involution-involutive", r.squares_to_identity, "");
    rep.check("model-form-pullback", "involution-form-pullback", r.pullback_ok, "");
}

void run_fixed_locus(Report& rep, FrameGroup g, unsigned samples, std::uint64_t seed) {
    auto recs = sample_fixed_locus(g, samples, seed);
    unsigned pass = 0, redraws = 0;
    for (auto& r : recs) {
        if (r.ok()) ++pass;
        redraws += r.redraws;
    }
    rep.extra = json{{"group", group_name(g)},
                     {"samples", samples},
                     {"passed", pass},
                     {"redraws", redraws}};
    rep.check("frames-exact", "fixed-locus-frame-conditions",
              pass == samples, std::to_string(pass) + "/" + std::to_string(samples));
    bool real_ok = true, sl_ok = true;
    for (auto& r : recs) {
        real_ok = real_ok && r.values_real_ok;
        sl_ok = sl_ok && r.lagrangian_ok && r.sl_ok && r.calibrated_ok;
    }
    rep.check("tangent-values-real", "fixed-locus-real-tangency", real_ok, "");
    rep.check("special-lagrangian-plane", "fixed-locus-sl-assertions", sl_ok, "");
}

void run_calibrate(Report& rep, const json& input, bool witness) {
    std::array<std::array<Rational, 6>, 3> basis;
    const json& b = input.contains("basis") ? input.at("basis") : input;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 6; ++j)
            basis[i][j] = parse_rational(b.at(i).at(j).get<std::string>());
    Plane3 plane(basis);

    bool lag = is_lagrangian(plane);
    rep.check("lagrangian", "omega-vanishes-on-plane", lag, "");
    if (!lag) return;
    LambdaPhase lp = lambda_phase(plane);
    rep.extra["lambda_exact"] = lp.exact;
    if (lp.exact) rep.extra["lambda"] = to_json(lp.exact_value);
    rep.extra["lambda_re"] = lp.approx.real();
    rep.extra["lambda_im"] = lp.approx.imag();
    rep.check("unit-phase", "lagrangian-phase-unit-modulus",
              lp.numerator.norm2() == lp.gram_det, "");
    bool sl = is_special_lagrangian(plane);
    rep.check("special-lagrangian", "im-psi-vanishes-on-plane", sl, "");
    if (witness && sl) {
        auto a = su3_witness(plane);
        double uni = 0, det_err;
        using Cd = std::complex<double>;
        Cd det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                 a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                 a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        det_err = std::abs(det - Cd(1));
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) {
                Cd s(0);
                for (unsigned k = 0; k < 3; ++k) s += a[i][k] * std::conj(a[j][k]);
                uni = std::max(uni, std::abs(s - (i == j ? Cd(1) : Cd(0))));
            }
        rep.extra["witness_unitary_residual"] = uni;
        rep.extra["witness_det_residual"] = det_err;
        rep.check("witness-residuals", "su3-witness-maps-to-real-plane",
                  uni < 1e-9 && det_err < 1e-9, "");
    }
}

void run_mclean(Report& rep, unsigned samples, std::uint64_t seed) {
    Rng rng(seed);
    unsigned pass = 0;
    for (unsigned t = 0; t < samples; ++t) {
        RationalSU3 a = random_rational_su3(rng);
        Plane3 plane = apply_su3(a, standard_r3());
        std::array<Rational, 3> w{rng.rational(4, 3), rng.rational(4, 3), rng.rational(4, 3)};
        if (sgn(w[0]) == 0 && sgn(w[1]) == 0 && sgn(w[2]) == 0) w[0] = 1;
        auto v = normal_to_su3_plane(a, w);
        if (mclean_identity(plane, v)) ++pass;
    }
    rep.extra = json{{"samples", samples}, {"passed", pass}};
    rep.check("mclean-contraction-identity", "normal-contraction-is-minus-star",
              pass == samples, std::to_string(pass) + "/" + std::to_string(samples));
}

} // namespace

Report run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact SU(3)-structure and special-Lagrangian toolkit"};
    app.require_subcommand(1);

    std::string system = "nearly-cy", a0_str = "1", u0_str = "0,0,0", flag_kind = "default";
    std::uint64_t seed = 1;
    std::string input_path, scalar_str = "24";
    bool mu_present = false, normalize = false, witness = false;
    std::string group_str = "sp2";
    unsigned samples = 100;

    auto* cartan = app.add_subcommand("cartan", "involutivity test for the frame-space systems");
    cartan->add_option("--system", system)->check(CLI::IsMember({"nearly-cy", "admissible"}));
    cartan->add_option("--a0", a0_str);
    cartan->add_option("--u0", u0_str);
    cartan->add_option("--flag", flag_kind)->check(CLI::IsMember({"default", "random"}));
    cartan->add_option("--seed", seed);

    auto* torsion = app.add_subcommand("torsion", "classify an SU(3) torsion tensor");
    torsion->add_option("--input", input_path)->required();
    torsion->add_flag("--mu", mu_present);

    auto* twistor = app.add_subcommand("twistor", "twistor-space torsion for a given scalar curvature");
    twistor->add_option("--scalar", scalar_str)->required();
    twistor->add_flag("--normalize", normalize);

    auto* curvature = app.add_subcommand("curvature", "decompose an anti-self-dual curvature block");
    curvature->add_option("--input", input_path)->required();

    auto* maurer = app.add_subcommand("maurer-cartan", "derive and match the frame structure equations");
    maurer->add_option("--group", group_str)->check(CLI::IsMember({"sp2", "sp11"}));

    auto* involution = app.add_subcommand("involution", "check the anti-complex involution");
    involution->add_option("--group", group_str)->check(CLI::IsMember({"sp2", "sp11"}));

    auto* fixed = app.add_subcommand("fixed-locus", "sample the fixed special-Lagrangian loci");
    fixed->add_option("--group", group_str)->check(CLI::IsMember({"sp2", "sp11"}));
    fixed->add_option("--samples", samples);
    fixed->add_option("--seed", seed);

    auto* calibrate = app.add_subcommand("calibrate", "Lagrangian and special-Lagrangian plane tests");
    calibrate->add_option("--plane", input_path)->required();
    calibrate->add_flag("--witness", witness);

    auto* mclean = app.add_subcommand("mclean-check", "normal-contraction identity on seeded planes");
    mclean->add_option("--samples", samples);
    mclean->add_option("--seed", seed);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Report rep;
    try {
        if (app.got_subcommand(cartan)) {
            rep.command = "cartan";
            Rational a0 = parse_rational(a0_str);
            auto us = parse_rational_list(u0_str);
            std::array<GQ, 3> u0{GQ(0), GQ(0), GQ(0)};
            for (unsigned i = 0; i < 3 && i < us.size(); ++i) u0[i] = GQ(us[i]);
            if (us.size() == 6)
                for (unsigned i = 0; i < 3; ++i) u0[i] = GQ(us[i], us[3 + i]);
            rep.inputs = json{{"system", system}, {"flag", flag_kind}, {"seed", seed}};
            if (system == "admissible") {
                rep.inputs["a0"] = to_string(a0);
                rep.inputs["u0"] = u0_str;
            }
            run_cartan(rep, system, a0, u0, flag_kind, seed);
        } else if (app.got_subcommand(torsion)) {
            rep.command = "torsion";
            rep.inputs = json{{"input", input_path}, {"mu", mu_present}};
            run_torsion(rep, load_json_file(input_path), mu_present);
        } else if (app.got_subcommand(twistor)) {
            rep.command = "twistor";
            rep.inputs = json{{"scalar", scalar_str}, {"normalize", normalize}};
            run_twistor(rep, parse_rational(scalar_str), normalize);
        } else if (app.got_subcommand(curvature)) {
            rep.command = "curvature";
            rep.inputs = json{{"input", input_path}};
            run_curvature(rep, load_json_file(input_path));
        } else if (app.got_subcommand(maurer)) {
            rep.command = "maurer-cartan";
            rep.inputs = json{{"group", group_str}};
            run_maurer(rep, group_str == "sp2" ? FrameGroup::Sp2 : FrameGroup::Sp11);
        } else if (app.got_subcommand(involution)) {
            rep.command = "involution";
            rep.inputs = json{{"group", group_str}};
            run_involution(rep, group_str == "sp2" ? FrameGroup::Sp2 : FrameGroup::Sp11);
        } else if (app.got_subcommand(fixed)) {
            rep.command = "fixed-locus";
            rep.inputs = json{{"group", group_str}, {"samples", samples}, {"seed", seed}};
            run_fixed_locus(rep, group_str == "sp2" ? FrameGroup::Sp2 : FrameGroup::Sp11, samples, seed);
        } else if (app.got_subcommand(calibrate)) {
            rep.command = "calibrate";
            rep.inputs = json{{"plane", input_path}, {"witness", witness}};
            run_calibrate(rep, load_json_file(input_path), witness);
        } else if (app.got_subcommand(mclean)) {
            rep.command = "mclean-check";
            rep.inputs = json{{"samples", samples}, {"seed", seed}};
            run_mclean(rep, samples, seed);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    return rep;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    std::string json_path;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--json" && i + 1 < argc) {
            json_path = argv[++i];
        } else {
            args.push_back(std::move(a));
        }
    }
    try {
        Report rep = run_command(args);
        std::string text = rep.to_json().dump(2);
        text += "\n";
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            out << text;
            std::cout << (rep.all_pass() ? "ok" : "FAIL") << ": " << rep.command << " ("
                      << rep.assertions.size() << " assertions)\n";
        } else {
            std::cout << text;
        }
        return rep.exit_status();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "see 'su3sl --help'\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace su3sl
