#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "hopfid/errors.hpp"
#include "hopfid/expr.hpp"
#include "hopfid/json_io.hpp"

using namespace hopfid;
using hopfid::testutil::Q;

namespace {

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

int parse_error_line(const std::string& src, const HopfPtr& h, int* col = nullptr) {
    try {
        parse_expression(src, h);
    } catch (const ParseError& e) {
        if (col) *col = e.col;
        return e.line;
    }
    return -1;
}

std::string data_path(const std::string& name) {
    return std::string(HOPFID_DATA_DIR) + "/" + name;
}

// Scratch directory for file-reference resolution tests.
struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / "hopfid_json_test") {
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("expression parser matches hand-built elements") {
    auto h = share(sweedler());
    auto X = FreeElement::letter(h, 1), Y = FreeElement::letter(h, 2);

    CHECK(parse_expression("X[x]*X[y] + X[y]*X[x]", h) == X * Y + Y * X);
    CHECK(parse_expression("1", h) == FreeElement::unit(h));
    CHECK(parse_expression("X[x]^2", h) == X * X);
    CHECK(parse_expression("X[x]^0", h) == FreeElement::unit(h));
    CHECK(parse_expression("3/2", h) == FreeElement::scalar(h, Q(3, 2)));
    CHECK(parse_expression("-2*X[x]", h) == Q(-2) * X);
    CHECK(parse_expression("2 - X[x]", h) == FreeElement::scalar(h, Q(2)) - X);
}

TEST_CASE("operator precedence and parentheses") {
    auto h = share(sweedler());
    auto E = FreeElement::letter(h, 0), X = FreeElement::letter(h, 1),
         Y = FreeElement::letter(h, 2), Z = FreeElement::letter(h, 3);

    CHECK(parse_expression("X[1] + X[y]*X[xy]", h) == E + Y * Z);
    CHECK(parse_expression("(X[1] + X[y])*X[xy]", h) == (E + Y) * Z);
    CHECK(parse_expression("X[x]*X[y]^2", h) == X * (Y * Y));
    CHECK(parse_expression("(X[x]*X[y])^2", h) == X * Y * X * Y);
    CHECK(parse_expression("-X[x]^2", h) == -(X * X));
    CHECK(parse_expression("2*X[x] - 3*X[y] + 1", h) ==
          Q(2) * X - Q(3) * Y + FreeElement::unit(h));
    // The family's first degree-4 identity parses as one expression.
    auto R = X * X, S = Y * Y, T = X * Y + Y * X;
    auto p = parse_expression(
        "(X[x]*X[y] + X[y]*X[x])^2 - 4*X[x]^2*X[y]^2 - 0*X[1]^2*X[x]^2", h);
    CHECK(p == T * T - Q(4) * (R * S));
}

TEST_CASE("labels are matched verbatim modulo surrounding spaces") {
    auto h3 = share(group_algebra(cyclic_group(3)));
    auto g2 = FreeElement::letter(h3, 2);
    CHECK(parse_expression("X[g^2]", h3) == g2);
    CHECK(parse_expression("X[ g^2 ]", h3) == g2);
    CHECK(parse_expression(" X[g] * X[g^2] ", h3) ==
          FreeElement::letter(h3, 1) * g2);
}

TEST_CASE("parse errors carry line and column") {
    auto h = share(sweedler());
    int col = 0;
    CHECK(parse_error_line("X[q]", h, &col) == 1);
    CHECK(col == 1);
    CHECK(parse_error_line("X[x] + X[oops]", h, &col) == 1);
    CHECK(col == 8);
    CHECK(parse_error_line("X[x] +\n  @", h, &col) == 2);
    CHECK(col == 3);
    CHECK(parse_error_line("X[x", h) == 1);
    CHECK(parse_error_line("X[x] X[y]", h) == 1);  // missing operator
    CHECK(parse_error_line("X[x]^-1", h) == 1);
    CHECK(parse_error_line("1/0", h) == 1);
    CHECK(parse_error_line("(X[x]", h) == 1);
    CHECK(parse_error_line("", h) == 1);
    CHECK(parse_error_line("Y[x]", h) == 1);
}

TEST_CASE("degree limit applies while parsing") {
    auto h = share(sweedler());
    CHECK_THROWS_AS(parse_expression("X[x]^9", h), LimitError);
    CHECK(parse_expression("X[x]^9", h, 12).degree() == 9);
    CHECK_THROWS_AS(parse_expression("2*X[x]*X[y]*X[x]", h, 2), LimitError);
}

TEST_CASE("printing and parsing are mutually inverse on canonical forms") {
    auto h = share(sweedler());
    std::mt19937 rng(17);
    std::uniform_int_distribution<unsigned> deg(0, 4), letter(0, 3);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        FreeElement p(h);
        for (int t = 0; t < 4; ++t) {
            FreeWord w(deg(rng));
            for (auto& l : w) l = letter(rng);
            p.add_term(w, Q(num(rng), den(rng)));
        }
        CHECK(parse_expression(p.str(), h) == p);
    }
    for (const char* s : {"2*X[x]*X[y] - X[xy]", "1 + X[1]", "-3/2", "0"}) {
        auto p = parse_expression(s, h);
        CHECK(p.str() == s);
    }
}

TEST_CASE("field descriptors round-trip") {
    for (const char* name :
         {"QQ", "GF(7)", "GF(101)", "QQ(zeta_3)", "QQ(zeta_5)", "Frac(QQ[a,b,c])",
          "Frac(GF(5)[t])"}) {
        auto f = parse_field(name);
        CHECK(f->name() == name);
    }
    CHECK(parse_field("QQ")->same(*rationals()));
    CHECK_THROWS_AS(parse_field("RR"), ParseError);
    CHECK_THROWS_AS(parse_field("GF(six)"), ParseError);
    CHECK_THROWS_AS(parse_field("GF(6)"), ValidationError);  // not prime
    CHECK_THROWS_AS(parse_field("Frac(QQ)"), ParseError);
}

TEST_CASE("Hopf algebra JSON round-trips structure constants") {
    std::vector<HopfAlgebra> catalogue;
    catalogue.push_back(group_algebra(cyclic_group(2)));
    catalogue.push_back(group_algebra(cyclic_group(3)));
    catalogue.push_back(group_algebra(symmetric_group_3()));
    catalogue.push_back(dual_group_algebra(cyclic_group(2)));
    catalogue.push_back(sweedler());
    catalogue.push_back(taft(2));
    catalogue.push_back(taft(3));
    for (const auto& h : catalogue) {
        auto j = hopf_to_json(h);
        auto back = hopf_from_json(j);
        CHECK(same_structure(h, back));
        CHECK(back.alg.basis == h.alg.basis);
        CHECK(back.field()->name() == h.field()->name());
        // Serialization itself is deterministic.
        CHECK(hopf_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("corrupted JSON payloads are rejected") {
    auto j = hopf_to_json(sweedler());
    auto broken = j;
    broken["mult"][5][2][0] = "7";  // some product entry now breaks an axiom
    CHECK_THROWS_AS(hopf_from_json(broken), ValidationError);

    broken = j;
    broken.erase("counit");
    CHECK_THROWS_AS(hopf_from_json(broken), ParseError);

    broken = j;
    broken["unit"][0] = "1/q";
    CHECK_THROWS_AS(hopf_from_json(broken), ParseError);

    broken = j;
    broken["comult"][0] = Json::array({0, 0, 9, "1"});
    CHECK_THROWS_AS(hopf_from_json(broken), ParseError);

    broken = j;
    broken["dim"] = 0;
    CHECK_THROWS_AS(hopf_from_json(broken), ParseError);
}

TEST_CASE("cocycle JSON round-trips and revalidates") {
    auto h = group_algebra(cyclic_group(2));
    auto c = make_cocycle(h, {{Q(1), Q(1)}, {Q(1), Q(5)}});
    auto j = cocycle_to_json(c);
    auto back = cocycle_from_json(j);
    CHECK(same_structure(back.hopf, h));
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) {
            CHECK(back.alpha[i][k] == c.alpha[i][k]);
            CHECK(back.alpha_inv[i][k] == c.alpha_inv[i][k]);
        }

    auto broken = j;
    broken["alpha"][0][0] = "2";  // breaks normalization
    CHECK_THROWS_AS(cocycle_from_json(broken), ValidationError);
}

TEST_CASE("comodule JSON round-trips and revalidates") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0)).comod;
    auto j = comodule_to_json(a);
    auto back = comodule_from_json(j);
    CHECK(same_structure(back.hopf, a.hopf));
    CHECK(back.alg.basis == a.alg.basis);
    for (size_t i = 0; i < 4; ++i)
        for (size_t k = 0; k < 4; ++k) CHECK(back.alg.mult[i][k] == a.alg.mult[i][k]);
    for (size_t i = 0; i < 4; ++i)
        for (size_t p = 0; p < 4; ++p)
            for (size_t k = 0; k < 4; ++k)
                CHECK(back.coaction[i][p][k] == a.coaction[i][p][k]);

    auto broken = j;
    broken["coaction"][0][3] = "2";
    CHECK_THROWS_AS(comodule_from_json(broken), ValidationError);

    // A second host: the Hopf algebra itself as a comodule.
    auto self = hopf_as_comodule(group_algebra(cyclic_group(3)));
    auto jj = comodule_to_json(self);
    auto sback = comodule_from_json(jj);
    CHECK(same_structure(sback.hopf, self.hopf));
}

TEST_CASE("hopf references resolve relative to the containing file") {
    TempDir tmp;
    save_json((tmp.path / "h.json").string(), hopf_to_json(group_algebra(cyclic_group(2))));
    Json jc;
    jc["hopf"] = "h.json";
    jc["alpha"] = Json::array({Json::array({"1", "1"}), Json::array({"1", "7"})});
    save_json((tmp.path / "c.json").string(), jc);

    auto c = load_cocycle((tmp.path / "c.json").string());
    CHECK(c.alpha[1][1] == Q(7));
    CHECK(same_structure(c.hopf, group_algebra(cyclic_group(2))));

    CHECK_THROWS_AS(load_hopf((tmp.path / "missing.json").string()), ParseError);
    std::ofstream((tmp.path / "garbage.json").string()) << "{not json";
    CHECK_THROWS_AS(load_json((tmp.path / "garbage.json").string()), ParseError);
}

TEST_CASE("shipped data files match the builders") {
    CHECK(same_structure(load_hopf(data_path("sweedler.json")), sweedler()));
    CHECK(same_structure(load_hopf(data_path("group_z2.json")),
                         group_algebra(cyclic_group(2))));
    CHECK(same_structure(load_hopf(data_path("group_z3.json")),
                         group_algebra(cyclic_group(3))));
    CHECK(same_structure(load_hopf(data_path("group_s3.json")),
                         group_algebra(symmetric_group_3())));
    CHECK(same_structure(load_hopf(data_path("dual_group_z2.json")),
                         dual_group_algebra(cyclic_group(2))));
    CHECK(same_structure(load_hopf(data_path("taft3.json")), taft(3)));

    auto c5 = load_cocycle(data_path("cocycle_z2_c5.json"));
    CHECK(c5.alpha[1][1] == Q(5));

    auto trivial = load_cocycle(data_path("trivial_cocycle_sweedler.json"));
    CHECK(same_structure(trivial.hopf, sweedler()));
    for (size_t i = 0; i < 4; ++i)
        for (size_t k = 0; k < 4; ++k)
            CHECK(trivial.alpha[i][k] == sweedler().counit[i] * sweedler().counit[k]);

    auto cleft = load_comodule(data_path("cleft_sweedler_1_0_0.json"));
    auto built = sweedler_cleft(Q(1), Q(0), Q(0)).comod;
    for (size_t i = 0; i < 4; ++i)
        for (size_t k = 0; k < 4; ++k) CHECK(cleft.alg.mult[i][k] == built.alg.mult[i][k]);
}

TEST_CASE("sigma tables serialize with pipe-separated fractions") {
    auto h = group_algebra(cyclic_group(2));
    auto s = sigma_table(h, trivial_cocycle(h));
    auto j = sigma_to_json(s);
    CHECK(j["field"] == "QQ");
    CHECK(j["t_vars"].size() == 2);
    CHECK(j["sigma"][0][0] == "t_1 | 1");
    CHECK(j["sigma"][1][1].get<std::string>().find(" | ") != std::string::npos);
    CHECK(j["generators"].size() == 4);
    // Determinism of the report.
    CHECK(sigma_to_json(s).dump() == j.dump());
}
