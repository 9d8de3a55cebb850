#include <doctest.h>

#include "hopfid/hopf.hpp"

using namespace hopfid;

namespace {
FieldScalar Q(long n, long d = 1) { return FieldScalar::rational(mpq_class(n, d)); }
}

TEST_CASE("group algebras") {
    auto k = group_algebra(cyclic_group(1));
    CHECK(k.dim() == 1);
    CHECK(verify_hopf(k).empty());

    auto z2 = group_algebra(cyclic_group(2));
    CHECK(z2.dim() == 2);
    CHECK(verify_hopf(z2).empty());
    for (size_t i = 0; i < 2; ++i) CHECK(z2.antipode[i] == z2.alg.basis_vec(i));

    auto s3 = group_algebra(symmetric_group_3());
    CHECK(s3.dim() == 6);
    CHECK(verify_hopf(s3).empty());
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            for (size_t l = 0; l < 6; ++l)
                CHECK(s3.comult[i][j][l] == ((i == j && j == l) ? Q(1) : Q(0)));
}

TEST_CASE("dual group algebras") {
    auto d1 = dual_group_algebra(cyclic_group(1));
    CHECK(d1.dim() == 1);
    CHECK(verify_hopf(d1).empty());

    auto d2 = dual_group_algebra(cyclic_group(2));
    CHECK(verify_hopf(d2).empty());
    CHECK(d2.comult[0][0][0] == Q(1));
    CHECK(d2.comult[0][1][1] == Q(1));
    CHECK(d2.comult[0][0][1] == Q(0));
    CHECK(d2.comult[0][1][0] == Q(0));

    auto d3 = dual_group_algebra(cyclic_group(3));
    CHECK(verify_hopf(d3).empty());
    CHECK(d3.counit == Coord{Q(1), Q(0), Q(0)});
}

TEST_CASE("bad Cayley tables are rejected") {
    CHECK_THROWS_AS(group_from_table({"e", "a"}, {{0, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(group_from_table({"a", "b"}, {{1, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(group_from_table({"e"}, {{0, 0}}), DimensionError);
}

TEST_CASE("Sweedler algebra matches its table") {
    auto h = sweedler();
    CHECK(h.dim() == 4);
    CHECK(h.alg.basis == std::vector<std::string>{"1", "x", "y", "xy"});
    CHECK(verify_hopf(h).empty());

    const size_t X = 1, Y = 2, Z = 3;
    // multiplication: x^2 = 1, y^2 = 0, yx = -xy
    CHECK(h.alg.mult[X][X] == h.alg.unit);
    CHECK(coord_is_zero(h.alg.mult[Y][Y]));
    Coord yx = h.alg.mult[Y][X];
    CHECK(yx == Coord{Q(0), Q(0), Q(0), Q(-1)});
    // Delta(y) = 1 (x) y + y (x) x
    for (size_t j = 0; j < 4; ++j)
        for (size_t k = 0; k < 4; ++k)
            CHECK(h.comult[Y][j][k] ==
                  (((j == 0 && k == Y) || (j == Y && k == X)) ? Q(1) : Q(0)));
    // Delta(z) = x (x) z + z (x) 1
    for (size_t j = 0; j < 4; ++j)
        for (size_t k = 0; k < 4; ++k)
            CHECK(h.comult[Z][j][k] ==
                  (((j == X && k == Z) || (j == Z && k == 0)) ? Q(1) : Q(0)));
    // S(x) = x, S(y) = xy, S(z) = -y
    CHECK(h.antipode[X] == h.alg.basis_vec(X));
    CHECK(h.antipode[Y] == h.alg.basis_vec(Z));
    CHECK(h.antipode[Z] == Coord{Q(0), Q(0), Q(-1), Q(0)});
    // eps = (1, 1, 0, 0)
    CHECK(h.counit == Coord{Q(1), Q(1), Q(0), Q(0)});
}

TEST_CASE("a corrupted antipode is reported by name") {
    auto h = sweedler();
    h.antipode[2] = h.alg.basis_vec(2);  // S(y) := y instead of xy
    auto report = verify_hopf(h);
    REQUIRE(!report.empty());
    bool found = false;
    for (const auto& msg : report)
        if (msg.find("antipode") != std::string::npos && msg.find("y") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("Taft algebras") {
    CHECK(same_structure(taft(2), sweedler()));

    auto t3 = taft(3);
    CHECK(t3.dim() == 9);
    CHECK(verify_hopf(t3).empty());
    auto c3 = cyclotomic_field(3);
    const size_t X = 1, Y = 3, XY = 4;
    // yx = q xy
    Coord yx = t3.alg.mult[Y][X];
    for (size_t k = 0; k < 9; ++k)
        CHECK(yx[k] == (k == XY ? c3.zeta : FieldScalar::zero(c3.field)));
    // y^3 = 0
    Coord y3 = t3.alg.multiply(t3.alg.mult[Y][Y], t3.alg.basis_vec(Y));
    CHECK(coord_is_zero(y3));
    // x^3 = 1
    Coord x3 = t3.alg.multiply(t3.alg.mult[X][X], t3.alg.basis_vec(X));
    CHECK(x3 == t3.alg.unit);

    CHECK_THROWS_AS(taft(4, Q(-1)), ValidationError);
    CHECK_THROWS_AS(taft(3, Q(1)), ValidationError);
    CHECK_THROWS_AS(sweedler(prime_field(2)), ValidationError);
}

TEST_CASE("counit property (eps (x) id)Delta = id holds in every builder") {
    std::vector<HopfAlgebra> hs;
    hs.push_back(group_algebra(cyclic_group(2)));
    hs.push_back(group_algebra(cyclic_group(3)));
    hs.push_back(group_algebra(cyclic_group(4)));
    hs.push_back(group_algebra(symmetric_group_3()));
    hs.push_back(dual_group_algebra(cyclic_group(4)));
    hs.push_back(dual_group_algebra(symmetric_group_3()));
    hs.push_back(sweedler());
    hs.push_back(taft(2));
    hs.push_back(taft(3));
    for (const auto& h : hs) {
        CHECK(verify_hopf(h).empty());
        for (size_t i = 0; i < h.dim(); ++i) {
            Coord out = h.alg.zero_vec();
            for (size_t j = 0; j < h.dim(); ++j)
                for (size_t k = 0; k < h.dim(); ++k)
                    if (!h.comult[i][j][k].is_zero())
                        coord_axpy(out, h.counit[j] * h.comult[i][j][k],
                                   h.alg.basis_vec(k));
            CHECK(out == h.alg.basis_vec(i));
        }
    }
}

TEST_CASE("Taft over a prime field with a primitive root") {
    auto f7 = prime_field(7);
    // 2 has order 3 mod 7
    auto t = taft(3, FieldScalar::in_field(f7, 2));
    CHECK(t.dim() == 9);
    CHECK(verify_hopf(t).empty());
}

TEST_CASE("coordinate printing") {
    auto h = sweedler();
    Coord v = h.alg.zero_vec();
    v[0] = Q(2);
    v[3] = Q(-1, 2);
    CHECK(coord_str(v, h.alg.basis) == "2 - 1/2*xy");
    CHECK(coord_str(h.alg.zero_vec(), h.alg.basis) == "0");
    CHECK(tensor_str(h.comult[3], h.alg.basis) == "x(x)xy + xy(x)1");
}
