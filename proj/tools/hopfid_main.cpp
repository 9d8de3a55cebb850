// hopfid: batch front end for Hopf-algebra identity computations.
//
// Every invocation prints a single JSON report on standard output (or to the
// --output file). Exit codes: 0 = success / true verdict, 1 = verification
// failure or negative verdict (the report carries the witness), 2 = usage or
// parse error. Reports are byte-deterministic given identical inputs.

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hopfid/cocycle.hpp"
#include "hopfid/comod.hpp"
#include "hopfid/errors.hpp"
#include "hopfid/expr.hpp"
#include "hopfid/genbase.hpp"
#include "hopfid/hopf.hpp"
#include "hopfid/ident.hpp"
#include "hopfid/json_io.hpp"
#include "hopfid/parallel.hpp"

namespace {

using namespace hopfid;

struct Output {
    bool pretty = false;
    std::string path;  // empty = stdout
};

int emit(const Json& report, const Output& out, int code) {
    std::string text = (out.pretty ? report.dump(2) : report.dump()) + "\n";
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path);
        if (!f) throw ParseError("cannot write file: " + out.path);
        f << text;
    }
    return code;
}

// --hopf accepts a JSON file path or a builtin name.
constexpr const char* kHopfHelp =
    "Hopf algebra: a JSON file path, or a builtin name "
    "(k, zN, s3, dual_zN, dual_s3, sweedler, taftN)";

HopfAlgebra builtin_or_file_hopf(const std::string& src) {
    if (std::filesystem::exists(src)) return load_hopf(src);
    auto tail_number = [&](const std::string& head) -> std::optional<unsigned long> {
        if (src.size() <= head.size() || src.compare(0, head.size(), head) != 0)
            return std::nullopt;
        std::string digits = src.substr(head.size());
        if (digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        return std::stoul(digits);
    };
    if (src == "k") return group_algebra(cyclic_group(1));
    if (src == "s3") return group_algebra(symmetric_group_3());
    if (src == "dual_s3") return dual_group_algebra(symmetric_group_3());
    if (src == "sweedler") return sweedler();
    if (auto n = tail_number("dual_z")) return dual_group_algebra(cyclic_group(*n));
    if (auto n = tail_number("z")) return group_algebra(cyclic_group(*n));
    if (auto n = tail_number("taft")) return taft((unsigned)*n);
    throw ParseError("unknown Hopf algebra '" + src + "' (not a file or a builtin name)");
}

// Shared algebra-selection flags. Twisted verbs (check-identity, kernel,
// minimal-degree) accept --cleft/--cocycle/--hopf; check-identity,
// coinvariants and center additionally accept --comodule.
struct AlgebraOpts {
    std::string cleft;  // family name; only "sweedler"
    std::string a_str, b_str, c_str;
    std::string field_str = "QQ";
    std::string cocycle_file;
    std::string hopf_src;
    std::string comodule_file;
};

void add_algebra_options(CLI::App* cmd, AlgebraOpts& o, bool with_comodule) {
    cmd->add_option("--cleft", o.cleft,
                    "cleft family name (sweedler); generic parameters unless --a/--b/--c given");
    cmd->add_option("--a", o.a_str, "family parameter a (scalar over --field)");
    cmd->add_option("--b", o.b_str, "family parameter b");
    cmd->add_option("--c", o.c_str, "family parameter c");
    cmd->add_option("--field", o.field_str, "field for --a/--b/--c (default QQ)");
    cmd->add_option("--cocycle", o.cocycle_file, "cocycle JSON file; selects its twisted algebra");
    cmd->add_option("--hopf", o.hopf_src, kHopfHelp);
    if (with_comodule)
        cmd->add_option("--comodule", o.comodule_file, "comodule algebra JSON file");
}

struct SelectedCleft {
    CleftAlgebra alg;
    Json desc;
};

SelectedCleft make_cleft(const AlgebraOpts& o) {
    int picked = (!o.cleft.empty()) + (!o.cocycle_file.empty()) + (!o.hopf_src.empty());
    if (picked != 1)
        throw ParseError("select the algebra with exactly one of --cleft, --cocycle, --hopf");
    Json desc;
    if (!o.cleft.empty()) {
        if (o.cleft != "sweedler")
            throw ParseError("unknown cleft family '" + o.cleft + "' (available: sweedler)");
        desc["kind"] = "cleft";
        desc["family"] = "sweedler";
        if (o.a_str.empty() && o.b_str.empty() && o.c_str.empty()) {
            desc["parameters"] = "generic";
            auto alg = sweedler_cleft_generic();
            desc["field"] = alg.comod.field()->name();
            return {std::move(alg), std::move(desc)};
        }
        if (o.a_str.empty() || o.b_str.empty() || o.c_str.empty())
            throw ParseError("--a, --b and --c must be given together");
        FieldPtr f = parse_field(o.field_str);
        FieldScalar a = parse_scalar(o.a_str, f), b = parse_scalar(o.b_str, f),
                    c = parse_scalar(o.c_str, f);
        desc["a"] = a.str();
        desc["b"] = b.str();
        desc["c"] = c.str();
        desc["field"] = f->name();
        return {sweedler_cleft(a, b, c), std::move(desc)};
    }
    if (!o.cocycle_file.empty()) {
        auto c = load_cocycle(o.cocycle_file);
        desc["kind"] = "twist";
        desc["cocycle"] = o.cocycle_file;
        return {twist(c.hopf, c), std::move(desc)};
    }
    auto h = builtin_or_file_hopf(o.hopf_src);
    desc["kind"] = "twist";
    desc["hopf"] = o.hopf_src;
    desc["cocycle"] = "trivial";
    return {twist(h, trivial_cocycle(h)), std::move(desc)};
}

struct SelectedComodule {
    ComoduleAlgebra alg;
    Json desc;
};

// For coinvariants/center: --comodule file, a cleft selection, or --hopf
// meaning H itself with the coproduct as coaction.
SelectedComodule make_comodule(const AlgebraOpts& o) {
    if (!o.comodule_file.empty()) {
        if (!o.cleft.empty() || !o.cocycle_file.empty() || !o.hopf_src.empty())
            throw ParseError("--comodule cannot be combined with --cleft/--cocycle/--hopf");
        Json desc;
        desc["kind"] = "comodule";
        desc["file"] = o.comodule_file;
        return {load_comodule(o.comodule_file), std::move(desc)};
    }
    if (!o.hopf_src.empty() && o.cleft.empty() && o.cocycle_file.empty()) {
        Json desc;
        desc["kind"] = "hopf-as-comodule";
        desc["hopf"] = o.hopf_src;
        return {hopf_as_comodule(builtin_or_file_hopf(o.hopf_src)), std::move(desc)};
    }
    auto sel = make_cleft(o);
    return {std::move(sel.alg.comod), std::move(sel.desc)};
}

Json witness_json(const IdentityVerdict& v) {
    if (!v.witness) return nullptr;
    Json w;
    for (size_t i = 0; i < v.image.vars.size(); ++i) w[v.image.vars[i]] = (*v.witness)[i].str();
    return w;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& file, const Output& out) {
    Json j = load_json(file);
    std::string kind = j.contains("alpha")      ? "cocycle"
                       : j.contains("coaction") ? "comodule algebra"
                                                : "hopf algebra";
    Json report;
    report["command"] = "verify";
    report["file"] = file;
    report["kind"] = kind;
    std::vector<std::string> violations;
    try {
        if (kind == "cocycle")
            cocycle_from_json(j, std::filesystem::path(file).parent_path().string());
        else if (kind == "comodule algebra")
            comodule_from_json(j, std::filesystem::path(file).parent_path().string());
        else
            hopf_from_json(j);
    } catch (const ValidationError& e) {
        violations.emplace_back(e.what());
    }
    report["valid"] = violations.empty();
    report["violations"] = violations;
    return emit(report, out, violations.empty() ? 0 : 1);
}

// ---------------------------------------------------------------------------
// check-identity

int run_check_identity(const AlgebraOpts& o, const std::string& expr, const Output& out) {
    Json report;
    report["command"] = "check-identity";
    IdentityVerdict v;
    std::string witness_eval;
    if (!o.comodule_file.empty()) {
        auto sel = make_comodule(o);
        report["algebra"] = sel.desc;
        auto h = std::make_shared<const HopfAlgebra>(sel.alg.hopf);
        FreeElement p = parse_expression(expr, h);
        v = is_identity_general(p, sel.alg);
    } else {
        auto sel = make_cleft(o);
        report["algebra"] = sel.desc;
        auto h = std::make_shared<const HopfAlgebra>(sel.alg.comod.hopf);
        FreeElement p = parse_expression(expr, h);
        v = is_identity_twisted(p, sel.alg);
        if (v.witness) {
            Coord value = evaluate_at_specialization(p, sel.alg, *v.witness);
            witness_eval = coord_str(value, sel.alg.comod.alg.basis);
        }
    }
    report["expr"] = expr;
    report["is_identity"] = v.is_identity;
    report["image"] = v.image.str();
    report["image_vars"] = v.image.vars;
    report["witness"] = witness_json(v);
    if (!witness_eval.empty()) report["witness_evaluation"] = witness_eval;
    if (!v.warning.empty()) report["warning"] = v.warning;
    return emit(report, out, v.is_identity ? 0 : 1);
}

// ---------------------------------------------------------------------------
// kernel / minimal-degree

int run_kernel(const AlgebraOpts& o, unsigned degree, size_t word_cap, const Output& out) {
    auto sel = make_cleft(o);
    auto basis = identities_of_degree(degree, sel.alg, word_cap);
    Json report;
    report["command"] = "kernel";
    report["algebra"] = sel.desc;
    report["degree"] = degree;
    report["dimension"] = basis.size();
    Json exprs = Json::array();
    for (const auto& p : basis) exprs.push_back(p.str());
    report["basis"] = exprs;
    return emit(report, out, 0);
}

int run_minimal_degree(const AlgebraOpts& o, unsigned max_degree, size_t word_cap,
                       const Output& out) {
    auto sel = make_cleft(o);
    auto found = minimal_identity_degree(sel.alg, max_degree, word_cap);
    Json report;
    report["command"] = "minimal-degree";
    report["algebra"] = sel.desc;
    report["max_degree"] = max_degree;
    report["found"] = found.has_value();
    if (found) {
        report["degree"] = found->first;
        report["dimension"] = found->second.size();
        Json exprs = Json::array();
        for (const auto& p : found->second) exprs.push_back(p.str());
        report["basis"] = exprs;
    }
    return emit(report, out, found ? 0 : 1);
}

// ---------------------------------------------------------------------------
// sigma / tinv

int run_sigma(const std::string& hopf_src, const std::string& cocycle_file, const Output& out) {
    Json report;
    report["command"] = "sigma";
    TwoCocycle c = [&] {
        if (!cocycle_file.empty()) {
            if (!hopf_src.empty())
                throw ParseError("give either --hopf (trivial cocycle) or --cocycle, not both");
            report["cocycle"] = cocycle_file;
            return load_cocycle(cocycle_file);
        }
        if (hopf_src.empty()) throw ParseError("sigma needs --hopf or --cocycle");
        report["hopf"] = hopf_src;
        report["cocycle"] = "trivial";
        auto built = builtin_or_file_hopf(hopf_src);
        return trivial_cocycle(built);
    }();
    auto s = sigma_table(c.hopf, c);
    Json tables = sigma_to_json(s);
    for (auto& [key, value] : tables.items()) report[key] = value;
    return emit(report, out, 0);
}

int run_tinv(const std::string& hopf_src, const Output& out) {
    auto h = builtin_or_file_hopf(hopf_src);
    auto ti = t_inverse(h);
    Json report;
    report["command"] = "tinv";
    report["hopf"] = hopf_src;
    report["t_vars"] = ti.t_ring->vars();
    Json values = Json::array();
    for (const auto& v : ti.values) values.push_back(ratfunc_str(v));
    report["values"] = values;
    return emit(report, out, 0);
}

// ---------------------------------------------------------------------------
// coinvariants / center

int run_subspace(const char* verb, const AlgebraOpts& o, const Output& out) {
    auto sel = make_comodule(o);
    std::vector<Coord> basis = std::string(verb) == "coinvariants" ? coinvariants(sel.alg)
                                                                   : center(sel.alg);
    Json report;
    report["command"] = verb;
    report["algebra"] = sel.desc;
    report["dimension"] = basis.size();
    Json rendered = Json::array(), coords = Json::array();
    for (const auto& v : basis) {
        rendered.push_back(coord_str(v, sel.alg.alg.basis));
        Json row = Json::array();
        for (const auto& c : v) row.push_back(c.str());
        coords.push_back(row);
    }
    report["basis"] = rendered;
    report["coords"] = coords;
    return emit(report, out, 0);
}

// ---------------------------------------------------------------------------
// demo: the four-dimensional family A_{a,b,c} over the Sweedler algebra.

struct DemoChecks {
    Json list = Json::array();
    bool all = true;
    void add(const std::string& name, bool pass, const std::string& detail) {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        c["detail"] = detail;
        list.push_back(c);
        all = all && pass;
    }
};

int run_demo(const AlgebraOpts& o, const Output& out) {
    CleftAlgebra A = [&] {
        if (o.a_str.empty() && o.b_str.empty() && o.c_str.empty())
            return sweedler_cleft_generic();
        if (o.a_str.empty() || o.b_str.empty() || o.c_str.empty())
            throw ParseError("--a, --b and --c must be given together");
        FieldPtr f = parse_field(o.field_str);
        return sweedler_cleft(parse_scalar(o.a_str, f), parse_scalar(o.b_str, f),
                              parse_scalar(o.c_str, f));
    }();
    const auto& [a, b, c] = *A.abc;
    FieldPtr f = A.comod.field();
    FieldScalar two = FieldScalar::in_field(f, 2), four = FieldScalar::in_field(f, 4);
    FieldScalar half = FieldScalar::one(f) / two;

    Json report;
    report["command"] = "demo";
    report["family"] = "A_{a,b,c} over the Sweedler algebra";
    Json params;
    params["a"] = a.str();
    params["b"] = b.str();
    params["c"] = c.str();
    params["field"] = f->name();
    report["parameters"] = params;

    auto h = std::make_shared<const HopfAlgebra>(A.comod.hopf);
    auto E = FreeElement::letter(h, 0), X = FreeElement::letter(h, 1),
         Y = FreeElement::letter(h, 2), Z = FreeElement::letter(h, 3);
    auto R = X * X, S = Y * Y, T = X * Y + Y * X, U = X * (X * Z + Z * X);

    DemoChecks checks;

    // Generator images X_x -> t_{x_1} u_{x_2}, checked against the coproduct.
    const char* letters = "EXYZ";
    Json gen_images;
    bool gens_ok = true;
    for (size_t i = 0; i < 4; ++i) {
        MixedElement img = mu_alpha(FreeElement::letter(h, i), A);
        std::map<Exponents, Coord> expected;
        for (size_t p = 0; p < 4; ++p) {
            for (size_t q = 0; q < 4; ++q) {
                const FieldScalar& m = A.comod.hopf.comult[i][p][q];
                if (m.is_zero()) continue;
                Exponents mono(4, 0);
                mono[p] = 1;
                auto it = expected.emplace(mono, coord_zero(4, f)).first;
                it->second[q] += m;
            }
        }
        bool ok = img.terms == expected;
        gens_ok = gens_ok && ok;
        gen_images[std::string(1, letters[i])] = img.str();
    }
    checks.add("generator images match the coproduct", gens_ok,
               "mu(X_x) = t_{x_1} u_{x_2} on all four generators");
    report["generator_images"] = gen_images;

    // The four closed-form images of R, S, T, U. Coordinates sit on u_1.
    auto u1_terms = [&](std::vector<std::pair<std::array<unsigned, 4>, FieldScalar>> spec) {
        std::map<Exponents, Coord> expected;
        for (auto& [mono, coeff] : spec) {
            if (coeff.is_zero()) continue;
            Coord v = coord_zero(4, f);
            v[0] = coeff;
            expected.emplace(Exponents(mono.begin(), mono.end()), std::move(v));
        }
        return expected;
    };
    // Exponent order: (t_1, t_x, t_y, t_xy).
    struct LemmaCase {
        const char* name;
        const FreeElement* elem;
        std::map<Exponents, Coord> expected;
        const char* formula;
    };
    std::vector<LemmaCase> lemma;
    lemma.push_back({"R", &R, u1_terms({{{{0, 2, 0, 0}}, a}}), "mu(R) = a t_x^2 u_1"});
    lemma.push_back({"S", &S,
                     u1_terms({{{{0, 0, 2, 0}}, a}, {{{1, 0, 1, 0}}, b}, {{{2, 0, 0, 0}}, c}}),
                     "mu(S) = (a t_y^2 + b t_1 t_y + c t_1^2) u_1"});
    lemma.push_back({"T", &T, u1_terms({{{{0, 1, 1, 0}}, two * a}, {{{1, 1, 0, 0}}, b}}),
                     "mu(T) = t_x (2a t_y + b t_1) u_1"});
    lemma.push_back({"U", &U, u1_terms({{{{0, 2, 0, 1}}, two * a}, {{{0, 3, 0, 0}}, a * b}}),
                     "mu(U) = a t_x^2 (2 t_xy + b t_x) u_1"});
    Json images;
    for (const auto& L : lemma) {
        MixedElement img = mu_alpha(*L.elem, A);
        checks.add(std::string("image of ") + L.name, img.terms == L.expected, L.formula);
        images[L.name] = img.str();
    }
    report["images"] = images;

    // The two degree-4 identities of the family, and the discriminant element.
    FreeElement P1 = T * T - four * (R * S) - ((b * b - four * a * c) / a) * (E * E * R);
    FreeElement P2 = E * R * Z - R * X * Y - half * (E * U - R * T);
    checks.add("first identity", is_identity_twisted(P1, A).is_identity,
               "T^2 - 4RS - ((b^2-4ac)/a) E^2 R is an identity");
    checks.add("second identity", is_identity_twisted(P2, A).is_identity,
               "ERZ - RXY - (EU - RT)/2 is an identity");
    checks.add("discriminant element vanishes", mu_alpha(P1, A).is_zero(),
               "mu(T^2 - 4RS - ((b^2-4ac)/a) E^2 R) = 0");

    // E, R, S, T, U all map into the coinvariants = the center of A.
    bool flags_ok = true;
    std::vector<std::pair<const char*, const FreeElement*>> named = {
        {"E", &E}, {"R", &R}, {"S", &S}, {"T", &T}, {"U", &U}};
    for (auto& [name, elem] : named) {
        auto fl = universal_image_flags(*elem, A);
        flags_ok = flags_ok && fl.coinvariant && fl.central;
    }
    checks.add("universal images are coinvariant and central", flags_ok,
               "E, R, S, T, U land in S(t_H) (x) k u_1 and in S(t_H) (x) Z(A)");

    report["checks"] = checks.list;
    report["all_pass"] = checks.all;
    return emit(report, out, checks.all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfid: polynomial H-identities of comodule algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --pretty/--jobs/-o appear after the subcommand too

    Output out;
    int jobs = 0;
    app.add_flag("--pretty", out.pretty, "indent the JSON report");
    app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = hardware default)");
    app.add_option("-o,--output", out.path, "write the report to this file instead of stdout");

    std::string verify_file;
    auto* cmd_verify = app.add_subcommand(
        "verify", "validate a Hopf algebra / cocycle / comodule algebra JSON file");
    cmd_verify->add_option("file", verify_file, "JSON file to validate")->required();

    AlgebraOpts ci_opts;
    std::string ci_expr;
    auto* cmd_ci = app.add_subcommand("check-identity",
                                      "decide whether an expression is an H-identity");
    add_algebra_options(cmd_ci, ci_opts, /*with_comodule=*/true);
    cmd_ci->add_option("--expr", ci_expr, "free-algebra expression in the X[label] generators")
        ->required();

    AlgebraOpts k_opts;
    unsigned k_degree = 0;
    size_t k_cap = 20000;
    auto* cmd_kernel = app.add_subcommand("kernel", "basis of the degree-r identities");
    add_algebra_options(cmd_kernel, k_opts, /*with_comodule=*/false);
    cmd_kernel->add_option("--degree", k_degree, "homogeneous degree r")->required();
    cmd_kernel->add_option("--word-cap", k_cap, "refuse degrees with more than this many words");

    AlgebraOpts md_opts;
    unsigned md_max = 4;
    size_t md_cap = 20000;
    auto* cmd_md = app.add_subcommand("minimal-degree",
                                      "smallest degree with a nonzero identity");
    add_algebra_options(cmd_md, md_opts, /*with_comodule=*/false);
    cmd_md->add_option("--max-degree", md_max, "search degrees 1..max (default 4)");
    cmd_md->add_option("--word-cap", md_cap, "refuse degrees with more than this many words");

    std::string sigma_hopf, sigma_cocycle;
    auto* cmd_sigma = app.add_subcommand(
        "sigma", "generic base cocycle sigma and its convolution inverse");
    cmd_sigma->add_option("--hopf", sigma_hopf, kHopfHelp);
    cmd_sigma->add_option("--cocycle", sigma_cocycle, "cocycle JSON file (default: trivial)");

    std::string tinv_hopf;
    auto* cmd_tinv = app.add_subcommand(
        "tinv", "convolution inverse of the generic grouplike-free element t");
    cmd_tinv->add_option("--hopf", tinv_hopf, kHopfHelp)->required();

    AlgebraOpts coinv_opts, center_opts;
    auto* cmd_coinv = app.add_subcommand("coinvariants", "basis of the coinvariant subalgebra");
    add_algebra_options(cmd_coinv, coinv_opts, /*with_comodule=*/true);
    auto* cmd_center = app.add_subcommand("center", "basis of the center of the algebra");
    add_algebra_options(cmd_center, center_opts, /*with_comodule=*/true);

    AlgebraOpts demo_opts;
    auto* cmd_demo = app.add_subcommand(
        "demo", "worked example: identities of the family A_{a,b,c} over the Sweedler algebra");
    cmd_demo->add_option("--a", demo_opts.a_str, "parameter a (nonzero); omit all three for the "
                                                 "generic member over Frac(QQ[a,b,c])");
    cmd_demo->add_option("--b", demo_opts.b_str, "parameter b");
    cmd_demo->add_option("--c", demo_opts.c_str, "parameter c");
    cmd_demo->add_option("--field", demo_opts.field_str, "field for the parameters (default QQ)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const char* verb = "";
    try {
        if (jobs > 0) set_threads(jobs);
        if (app.got_subcommand(cmd_verify)) {
            verb = "verify";
            return run_verify(verify_file, out);
        }
        if (app.got_subcommand(cmd_ci)) {
            verb = "check-identity";
            return run_check_identity(ci_opts, ci_expr, out);
        }
        if (app.got_subcommand(cmd_kernel)) {
            verb = "kernel";
            return run_kernel(k_opts, k_degree, k_cap, out);
        }
        if (app.got_subcommand(cmd_md)) {
            verb = "minimal-degree";
            return run_minimal_degree(md_opts, md_max, md_cap, out);
        }
        if (app.got_subcommand(cmd_sigma)) {
            verb = "sigma";
            return run_sigma(sigma_hopf, sigma_cocycle, out);
        }
        if (app.got_subcommand(cmd_tinv)) {
            verb = "tinv";
            return run_tinv(tinv_hopf, out);
        }
        if (app.got_subcommand(cmd_coinv)) {
            verb = "coinvariants";
            return run_subspace("coinvariants", coinv_opts, out);
        }
        if (app.got_subcommand(cmd_center)) {
            verb = "center";
            return run_subspace("center", center_opts, out);
        }
        verb = "demo";
        return run_demo(demo_opts, out);
    } catch (const ParseError& e) {
        Json err;
        err["command"] = verb;
        err["error"] = e.what();
        std::cerr << "error: " << e.what() << "\n";
        emit(err, out, 0);
        return 2;
    } catch (const LimitError& e) {
        Json err;
        err["command"] = verb;
        err["error"] = e.what();
        std::cerr << "error: " << e.what() << "\n";
        emit(err, out, 0);
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["command"] = verb;
        err["error"] = e.what();
        std::cerr << "error: " << e.what() << "\n";
        emit(err, out, 0);
        return 1;
    }
}
