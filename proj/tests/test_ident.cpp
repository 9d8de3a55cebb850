#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hopfid/errors.hpp"
#include "hopfid/ident.hpp"

using namespace hopfid;
using hopfid::testutil::Q;

namespace {

HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

struct SweedlerWords {
    HopfPtr h;
    FreeElement E, X, Y, Z;
    SweedlerWords(const CleftAlgebra& a)
        : h(share(a.comod.hopf)),
          E(FreeElement::letter(h, 0)),
          X(FreeElement::letter(h, 1)),
          Y(FreeElement::letter(h, 2)),
          Z(FreeElement::letter(h, 3)) {}
};

// The two degree-4 identities of the A_{a,b,c} family:
// T^2 - 4RS - ((b^2-4ac)/a) E^2 R  and  ERZ - RXY - (EU - RT)/2.
std::pair<FreeElement, FreeElement> family_identities(const CleftAlgebra& a) {
    SweedlerWords w(a);
    const auto& abc = *a.abc;
    FieldScalar av = abc[0], bv = abc[1], cv = abc[2];
    FreeElement R = w.X.pow(2), S = w.Y.pow(2), T = w.X * w.Y + w.Y * w.X;
    FreeElement U = w.X * (w.X * w.Z + w.Z * w.X);
    FieldScalar disc = (bv * bv - Q(4) * av * cv) / av;
    FreeElement p1 = T.pow(2) - Q(4) * (R * S) - disc * (w.E.pow(2) * R);
    FreeElement p2 = w.E * R * w.Z - R * w.X * w.Y - Q(1, 2) * (w.E * U - R * T);
    return {p1, p2};
}

FreeElement random_element(const HopfPtr& h, std::mt19937& rng, unsigned max_deg, int terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<unsigned> letter(0, (unsigned)h->dim() - 1);
    std::uniform_int_distribution<int> coeff(1, 4);
    std::bernoulli_distribution sign;
    FreeElement e(h);
    for (int t = 0; t < terms; ++t) {
        FreeWord w(deg(rng));
        for (auto& l : w) l = letter(rng);
        int c = coeff(rng);
        e.add_term(w, Q(sign(rng) ? c : -c));
    }
    return e;
}

// X_x -> lambda X_x extended multiplicatively.
FreeElement scale_letters(const FreeElement& p, const FieldScalar& lambda) {
    FreeElement out(p.host(), p.degree_limit());
    for (const auto& [w, c] : p.terms())
        out.add_term(w, c * lambda.pow((long)w.size()));
    return out;
}

Exponents mono(std::initializer_list<unsigned> e) { return Exponents(e); }

}  // namespace

TEST_CASE("mu_alpha generator images over the generic cleft algebra") {
    auto g = sweedler_cleft_generic();
    SweedlerWords w(g);
    const FieldPtr& F = g.comod.field();
    FieldScalar one = FieldScalar::one(F);

    auto img = mu_alpha(w.E, g);
    CHECK(img.vars == std::vector<std::string>{"t_1", "t_x", "t_y", "t_xy"});
    REQUIRE(img.terms.size() == 1);
    CHECK(img.terms.at(mono({1, 0, 0, 0}))[0] == one);

    img = mu_alpha(w.X, g);
    REQUIRE(img.terms.size() == 1);
    CHECK(img.terms.at(mono({0, 1, 0, 0}))[1] == one);
    CHECK(img.str() == "t_x*u_x");

    img = mu_alpha(w.Y, g);
    REQUIRE(img.terms.size() == 2);
    CHECK(img.terms.at(mono({1, 0, 0, 0}))[2] == one);
    CHECK(img.terms.at(mono({0, 0, 1, 0}))[1] == one);
    CHECK(img.str() == "t_1*u_y + t_y*u_x");

    img = mu_alpha(w.Z, g);
    REQUIRE(img.terms.size() == 2);
    CHECK(img.terms.at(mono({0, 1, 0, 0}))[3] == one);
    CHECK(img.terms.at(mono({0, 0, 0, 1}))[0] == one);

    img = mu_alpha(FreeElement::unit(w.h), g);
    REQUIRE(img.terms.size() == 1);
    CHECK(img.terms.at(mono({0, 0, 0, 0}))[0] == one);
    CHECK(img.degree() == 0);

    // mu(Y^2) = (a t_y^2 + b t_1 t_y + c t_1^2) u_1.
    img = mu_alpha(w.Y.pow(2), g);
    const auto& abc = *g.abc;
    REQUIRE(img.terms.size() == 3);
    CHECK(img.terms.at(mono({0, 0, 2, 0}))[0] == abc[0]);
    CHECK(img.terms.at(mono({1, 0, 1, 0}))[0] == abc[1]);
    CHECK(img.terms.at(mono({2, 0, 0, 0}))[0] == abc[2]);
    for (const auto& [e, v] : img.terms)
        for (size_t j = 1; j < 4; ++j) CHECK(v[j].is_zero());
}

TEST_CASE("mu_alpha preserves the grading") {
    auto a = sweedler_cleft(Q(1), Q(2), Q(3));
    auto h = share(a.comod.hopf);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        auto p = random_element(h, rng, 4, 4);
        for (const auto& [deg, comp] : homogeneous_components(p)) {
            auto img = mu_alpha(comp, a);
            for (const auto& [e, v] : img.terms) {
                unsigned total = 0;
                for (unsigned x : e) total += x;
                CHECK(total == deg);
            }
        }
    }
}

TEST_CASE("the two degree-4 family identities hold generically") {
    auto g = sweedler_cleft_generic();
    auto [p1, p2] = family_identities(g);
    auto v1 = is_identity_twisted(p1, g);
    CHECK(v1.is_identity);
    CHECK(v1.image.is_zero());
    CHECK_FALSE(v1.witness.has_value());
    CHECK(v1.warning.empty());
    CHECK(is_identity_twisted(p2, g).is_identity);

    auto s = sweedler_cleft(Q(1), Q(2), Q(3));
    auto [q1, q2] = family_identities(s);
    CHECK(is_identity_twisted(q1, s).is_identity);
    CHECK(is_identity_twisted(q2, s).is_identity);
}

TEST_CASE("non-identities come with a verified witness") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    SweedlerWords w(a);
    auto v = is_identity_twisted(w.X, a);
    REQUIRE_FALSE(v.is_identity);
    REQUIRE(v.witness.has_value());
    // The first nonzero grid point for t_x is t_x = 1.
    CHECK((*v.witness)[1] == Q(1));
    CHECK((*v.witness)[0] == Q(0));
    Coord at = evaluate_at_specialization(w.X, a, *v.witness);
    CHECK_FALSE(coord_is_zero(at));
    CHECK(at[1] == Q(1));  // u_x

    // Witness substitution is nonzero for arbitrary non-identities too.
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 10) {
        auto p = random_element(w.h, rng, 3, 3);
        auto verdict = is_identity_twisted(p, a);
        if (verdict.is_identity) continue;
        REQUIRE(verdict.witness.has_value());
        CHECK_FALSE(coord_is_zero(evaluate_at_specialization(p, a, *verdict.witness)));
        ++checked;
    }
}

TEST_CASE("finite coefficient fields attach a warning") {
    auto f7 = prime_field(7);
    auto a = sweedler_cleft(FieldScalar::in_field(f7, 3), FieldScalar::in_field(f7, 1),
                            FieldScalar::in_field(f7, 6));
    SweedlerWords w(a);
    auto v = is_identity_twisted(w.X, a);
    CHECK_FALSE(v.is_identity);
    CHECK_FALSE(v.warning.empty());

    auto commutator = w.E * w.X - w.X * w.E;
    CHECK(is_identity_twisted(commutator, a).is_identity);
}

TEST_CASE("general decision: one-dimensional Hopf algebra has no identities") {
    auto h = group_algebra(cyclic_group(1));
    auto a = hopf_as_comodule(h);
    auto hp = share(h);
    auto x = FreeElement::letter(hp, 0);
    auto v = is_identity_general(x * x - x, a);
    CHECK_FALSE(v.is_identity);
    REQUIRE(v.witness.has_value());
    CHECK(v.image.vars == std::vector<std::string>{"c_1"});
}

TEST_CASE("general decision: trivially graded algebras kill X_g") {
    auto grp = cyclic_group(2);
    auto h = group_algebra(grp);
    auto a = graded_algebra_as_comodule(grp, h.alg, {0, 0});
    auto hp = share(h);
    auto v = is_identity_general(FreeElement::letter(hp, 1), a);
    CHECK(v.is_identity);
    CHECK_FALSE(v.witness.has_value());
    // But X_e is not an identity.
    CHECK_FALSE(is_identity_general(FreeElement::letter(hp, 0), a).is_identity);
}

TEST_CASE("general decision: X_g X_g^-1 X_h - X_h X_g X_g^-1 on a self-graded group algebra") {
    auto h = group_algebra(cyclic_group(3));
    auto a = hopf_as_comodule(h);
    auto hp = share(h);
    auto grp = cyclic_group(3);
    for (size_t g = 0; g < 3; ++g)
        for (size_t k = 0; k < 3; ++k) {
            auto xg = FreeElement::letter(hp, g);
            auto xgi = FreeElement::letter(hp, grp.inverse[g]);
            auto xh = FreeElement::letter(hp, k);
            CHECK(is_identity_general(xg * xgi * xh - xh * xg * xgi, a).is_identity);
        }
    // X_g X_g - X_{g^2} is not an identity: comodule maps scale each
    // grading component independently.
    CHECK_FALSE(is_identity_general(
                    FreeElement::letter(hp, 1) * FreeElement::letter(hp, 1) -
                        FreeElement::letter(hp, 2),
                    a)
                    .is_identity);
}

TEST_CASE("twisted and general decisions agree on cleft algebras") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto hp = share(a.comod.hopf);
    std::mt19937 rng(23);
    int identities_seen = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_element(hp, rng, 3, 3);
        bool tw = is_identity_twisted(p, a).is_identity;
        bool gen = is_identity_general(p, a.comod).is_identity;
        CHECK(tw == gen);
        identities_seen += tw;
    }
    // Force agreement on actual identities as well.
    auto comm = FreeElement::letter(hp, 0) * FreeElement::letter(hp, 1) -
                FreeElement::letter(hp, 1) * FreeElement::letter(hp, 0);
    CHECK(is_identity_twisted(comm, a).is_identity);
    CHECK(is_identity_general(comm, a.comod).is_identity);
}

TEST_CASE("degree matrix: serial and parallel assembly agree") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    for (unsigned r : {1u, 2u, 3u}) {
        auto ms = degree_matrix(r, a, false);
        auto mp = degree_matrix(r, a, true);
        REQUIRE(ms.rows() == mp.rows());
        REQUIRE(ms.cols() == mp.cols());
        for (size_t i = 0; i < ms.rows(); ++i)
            for (size_t j = 0; j < ms.cols(); ++j) CHECK(ms.at(i, j) == mp.at(i, j));
    }
}

TEST_CASE("identity spaces of A_{1,0,0} by degree") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto hp = share(a.comod.hopf);

    CHECK(identities_of_degree(0, a).empty());
    CHECK(identities_of_degree(1, a).empty());

    auto deg2 = identities_of_degree(2, a);
    REQUIRE(deg2.size() == 3);
    // Echelon basis = the commutators of X_1 with X_x, X_y, X_xy.
    auto e = FreeElement::letter(hp, 0);
    for (size_t i = 1; i < 4; ++i) {
        auto xi = FreeElement::letter(hp, i);
        CHECK(deg2[i - 1] == e * xi - xi * e);
    }

    CHECK(identities_of_degree(3, a).size() == 35);

    auto deg4 = identities_of_degree(4, a);
    CHECK(deg4.size() == 202);
    for (size_t s = 0; s < deg4.size(); s += 40)
        CHECK(is_identity_twisted(deg4[s], a).is_identity);
}

TEST_CASE("the family identities lie in the degree-4 kernel basis span") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto deg4 = identities_of_degree(4, a);
    auto [p1, p2] = family_identities(a);

    // The basis is echelonized, so coordinates can be read off at the pivots.
    auto word_index = [&](const FreeWord& w) {
        size_t idx = 0;
        for (unsigned l : w) idx = idx * 4 + l;
        return idx;
    };
    auto expand = [&](const FreeElement& p) {
        std::vector<FieldScalar> v(256, Q(0));
        for (const auto& [w, c] : p.terms()) {
            REQUIRE(w.size() == 4);
            v[word_index(w)] = c;
        }
        return v;
    };
    auto residual = [&](const FreeElement& p) {
        auto v = expand(p);
        for (const auto& b : deg4) {
            auto bv = expand(b);
            size_t pivot = 0;
            while (pivot < 256 && bv[pivot].is_zero()) ++pivot;
            REQUIRE(pivot < 256);
            FieldScalar c = v[pivot];
            if (c.is_zero()) continue;
            for (size_t i = 0; i < 256; ++i) v[i] -= c * bv[i];
        }
        return v;
    };
    for (const auto* p : {&p1, &p2}) {
        auto rem = residual(*p);
        bool zero = true;
        for (const auto& c : rem) zero = zero && c.is_zero();
        CHECK(zero);
    }
}

TEST_CASE("minimal identity degree") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto res = minimal_identity_degree(a, 4);
    REQUIRE(res.has_value());
    CHECK(res->first == 2);
    CHECK(res->second.size() == 3);

    // The generic family member also has minimal degree 2 with the same
    // three commutator identities.
    auto g = sweedler_cleft_generic();
    CHECK(identities_of_degree(1, g).empty());
    auto gen2 = identities_of_degree(2, g);
    REQUIRE(gen2.size() == 3);
    auto resg = minimal_identity_degree(g, 3);
    REQUIRE(resg.has_value());
    CHECK(resg->first == 2);
}

TEST_CASE("dimension-count crossover for n = 4 happens at r = 4") {
    auto binom = [](unsigned long n, unsigned long k) {
        unsigned long r = 1;
        for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    unsigned first = 0;
    for (unsigned r = 1; r <= 5 && !first; ++r) {
        unsigned long words = 1;
        for (unsigned i = 0; i < r; ++i) words *= 4;
        if (words > 4 * binom(r + 3, 3)) first = r;
    }
    CHECK(first == 4);
}

TEST_CASE("word cap guards the degree enumeration") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    CHECK_THROWS_AS(identities_of_degree(8, a), LimitError);  // 4^8 = 65536 > 20000
    CHECK_THROWS_AS(identities_of_degree(3, a, 10), LimitError);
}

TEST_CASE("every specialization of the t-variables kills kernel elements") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto deg2 = identities_of_degree(2, a);
    auto deg3 = identities_of_degree(3, a);
    std::vector<FreeElement> sample = deg2;
    for (size_t i = 0; i < deg3.size(); i += 9) sample.push_back(deg3[i]);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FieldScalar> chi;
        for (int i = 0; i < 4; ++i) chi.push_back(Q(val(rng)));
        for (const auto& p : sample)
            CHECK(coord_is_zero(evaluate_at_specialization(p, a, chi)));
    }

    // Sanity: a non-identity evaluates to nonzero at some specialization.
    SweedlerWords w(a);
    CHECK_FALSE(coord_is_zero(
        evaluate_at_specialization(w.X, a, {Q(0), Q(1), Q(0), Q(0)})));
}

TEST_CASE("scaling endomorphisms preserve identities") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto [p1, p2] = family_identities(a);
    auto deg2 = identities_of_degree(2, a);
    for (long lam : {2L, 3L, 5L}) {
        CHECK(is_identity_twisted(scale_letters(p1, Q(lam)), a).is_identity);
        CHECK(is_identity_twisted(scale_letters(p2, Q(lam)), a).is_identity);
        for (const auto& p : deg2)
            CHECK(is_identity_twisted(scale_letters(p, Q(lam)), a).is_identity);
    }
}

TEST_CASE("ideal and coideal structure of the identity ideal") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto [p1, p2] = family_identities(a);
    CHECK(check_ideal_properties(p1, a).empty());
    CHECK(check_ideal_properties(p1 + p2, a).empty());

    auto deg2 = identities_of_degree(2, a);
    CHECK(check_ideal_properties(deg2[0] + deg2[1] * FreeElement::letter(share(a.comod.hopf), 2),
                                 a)
              .empty());

    SweedlerWords w(a);
    auto bad = check_ideal_properties(w.X, a);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "element is not an identity");
}

TEST_CASE("universal image flags") {
    auto g = sweedler_cleft_generic();
    SweedlerWords w(g);
    FreeElement R = w.X.pow(2), S = w.Y.pow(2), T = w.X * w.Y + w.Y * w.X;
    FreeElement U = w.X * (w.X * w.Z + w.Z * w.X);
    for (const auto* p : {&w.E, &R, &S, &T, &U}) {
        auto flags = universal_image_flags(*p, g);
        CHECK(flags.coinvariant);
        CHECK(flags.central);
    }
    auto one_flags = universal_image_flags(FreeElement::unit(w.h), g);
    CHECK(one_flags.coinvariant);
    CHECK(one_flags.central);

    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    SweedlerWords wa(a);
    auto xf = universal_image_flags(wa.X, a);
    CHECK_FALSE(xf.coinvariant);
    CHECK_FALSE(xf.central);

    // Coinvariant images are always central.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_element(wa.h, rng, 3, 3);
        auto f = universal_image_flags(p, a);
        if (f.coinvariant) CHECK(f.central);
    }
}

TEST_CASE("host mismatch is rejected") {
    auto a = sweedler_cleft(Q(1), Q(0), Q(0));
    auto other = share(group_algebra(cyclic_group(4)));
    CHECK_THROWS_AS(mu_alpha(FreeElement::letter(other, 0), a), ValidationError);
}
