#include <doctest.h>

#include "helpers.hpp"
#include "hopfid/comod.hpp"

using namespace hopfid;
using hopfid::testutil::Q;
using hopfid::testutil::m2_algebra;

TEST_CASE("H as a comodule algebra over itself") {
    auto a = hopf_as_comodule(sweedler());
    CHECK(verify_comodule_algebra(a).empty());
    auto coinv = coinvariants(a);
    REQUIRE(coinv.size() == 1);
    CHECK(coinv[0] == a.alg.basis_vec(0));  // H^H = k 1
}

TEST_CASE("corrupted coaction is reported at the counit law") {
    auto a = hopf_as_comodule(sweedler());
    // delta(y) := 1 (x) y, which fails (id (x) eps) delta = id at y
    for (auto& row : a.coaction[2])
        for (auto& v : row) v = Q(0);
    a.coaction[2][0][2] = Q(1);
    auto report = verify_comodule_algebra(a);
    REQUIRE(!report.empty());
    bool found = false;
    for (const auto& msg : report)
        if (msg.find("counit") != std::string::npos && msg.find("y") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("group-graded algebras") {
    auto z2 = cyclic_group(2);

    auto kz2 = graded_algebra_as_comodule(z2, group_algebra(z2).alg, {0, 1});
    CHECK(verify_comodule_algebra(kz2).empty());
    CHECK(kz2.coaction[1][1][1] == Q(1));  // delta(g) = g (x) g
    auto coinv = coinvariants(kz2);
    REQUIRE(coinv.size() == 1);
    CHECK(coinv[0] == kz2.alg.basis_vec(0));

    auto m2 = graded_algebra_as_comodule(z2, m2_algebra(), {0, 0, 1, 1});
    CHECK(verify_comodule_algebra(m2).empty());
    auto even = coinvariants(m2);
    REQUIRE(even.size() == 2);
    CHECK(even[0] == m2.alg.basis_vec(0));
    CHECK(even[1] == m2.alg.basis_vec(1));

    // wrong grading: E12 declared even while E11*E12 = E12 forces odd*even mixing
    CHECK_THROWS_AS(graded_algebra_as_comodule(z2, m2_algebra(), {0, 0, 0, 1}),
                    ValidationError);

    // trivially graded: everything coinvariant
    auto triv = graded_algebra_as_comodule(z2, m2_algebra(), {0, 0, 0, 0});
    CHECK(verify_comodule_algebra(triv).empty());
    CHECK(coinvariants(triv).size() == 4);
}

TEST_CASE("center computations") {
    CHECK(center(group_algebra(cyclic_group(3)).alg).size() == 3);  // commutative

    auto z = center(m2_algebra());
    REQUIRE(z.size() == 1);
    CHECK(z[0] == Coord{Q(1), Q(1), Q(0), Q(0)});  // scalar matrices
}

TEST_CASE("comodule map space dimensions") {
    // H = k: no constraint, dimension = dim A
    auto triv = graded_algebra_as_comodule(cyclic_group(1), m2_algebra(), {0, 0, 0, 0});
    CHECK(comodule_map_space(triv).basis.size() == 4);

    // H = k[Z/2], A = graded M2: f(g) lands in the g-component
    auto m2 = graded_algebra_as_comodule(cyclic_group(2), m2_algebra(), {0, 0, 1, 1});
    auto space = comodule_map_space(m2);
    CHECK(space.basis.size() == 4);  // sum over g of dim A_g
    std::vector<size_t> grading = {0, 0, 1, 1};
    for (const auto& f : space.basis)
        for (size_t j = 0; j < 4; ++j)
            for (size_t c = 0; c < 2; ++c)
                if (!f[j][c].is_zero()) CHECK(grading[j] == c);

    // counit consistency: (id (x) eps) delta (f(x)) = f(x) for all basis maps
    for (const auto& f : space.basis)
        for (size_t c = 0; c < space.hdim; ++c) {
            Coord fx = m2.alg.zero_vec();
            for (size_t j = 0; j < space.adim; ++j) fx[j] = f[j][c];
            auto df = m2.coact(fx);
            Coord back = m2.alg.zero_vec();
            for (size_t j = 0; j < space.adim; ++j)
                for (size_t k = 0; k < space.hdim; ++k)
                    back[j] += df[j][k] * m2.hopf.counit[k];
            CHECK(back == fx);
        }
}

TEST_CASE("group actions as comodule algebras over the dual") {
    auto z2 = cyclic_group(2);
    auto a = group_algebra(cyclic_group(3)).alg;  // k[Z/3], basis (1, g, g^2)

    // trivial action: coinvariants = all of A
    std::vector<std::vector<Coord>> trivial(2);
    for (auto& mg : trivial)
        for (size_t i = 0; i < 3; ++i) mg.push_back(a.basis_vec(i));
    auto ct = g_algebra_as_comodule(z2, a, trivial);
    CHECK(verify_comodule_algebra(ct).empty());
    CHECK(coinvariants(ct).size() == 3);

    // inversion action g -> g^2: fixed subalgebra is span{1, g + g^2}
    std::vector<std::vector<Coord>> inv(2);
    for (size_t i = 0; i < 3; ++i) inv[0].push_back(a.basis_vec(i));
    inv[1] = {a.basis_vec(0), a.basis_vec(2), a.basis_vec(1)};
    auto ci = g_algebra_as_comodule(z2, a, inv);
    CHECK(verify_comodule_algebra(ci).empty());
    auto fixed = coinvariants(ci);
    REQUIRE(fixed.size() == 2);
    CHECK(fixed[0] == Coord{Q(1), Q(0), Q(0)});
    CHECK(fixed[1] == Coord{Q(0), Q(1), Q(1)});

    // identity group: same as the trivial comodule
    auto e = cyclic_group(1);
    auto ce = g_algebra_as_comodule(e, a, {{a.basis_vec(0), a.basis_vec(1), a.basis_vec(2)}});
    CHECK(verify_comodule_algebra(ce).empty());
    CHECK(coinvariants(ce).size() == 3);

    // not an algebra map: g -> 2g
    std::vector<std::vector<Coord>> bad(2);
    for (size_t i = 0; i < 3; ++i) bad[0].push_back(a.basis_vec(i));
    Coord g2 = a.zero_vec();
    g2[1] = Q(2);
    bad[1] = {a.basis_vec(0), g2, a.basis_vec(2)};
    CHECK_THROWS_AS(g_algebra_as_comodule(z2, a, bad), ValidationError);
}
