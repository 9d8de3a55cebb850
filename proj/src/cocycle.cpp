#include "hopfid/cocycle.hpp"

#include <utility>

#include "hopfid/errors.hpp"
#include "hopfid/matrix.hpp"
#include "hopfid/mpoly.hpp"
#include "hopfid/rewrite.hpp"

namespace hopfid {

namespace {

void check_table_shape(const HopfAlgebra& h, const ScalarTable& t, const std::string& what) {
    size_t n = h.dim();
    if (t.size() != n) throw DimensionError(what + " must be " + std::to_string(n) + " x " +
                                            std::to_string(n));
    for (const auto& row : t)
        if (row.size() != n)
            throw DimensionError(what + " must be " + std::to_string(n) + " x " +
                                 std::to_string(n));
}

// u_{x_i} u_{x_j} in the twist by alpha, as coordinates over the basis of H:
// sum m^i_{ab} m^j_{cd} alpha(x_a, x_c) (x_b x_d).
Coord twisted_product(const HopfAlgebra& h, const ScalarTable& alpha, size_t i, size_t j) {
    size_t n = h.dim();
    Coord out = coord_zero(n, h.field());
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const FieldScalar& mi = h.comult[i][a][b];
            if (mi.is_zero()) continue;
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < n; ++d) {
                    const FieldScalar& mj = h.comult[j][c][d];
                    if (mj.is_zero()) continue;
                    FieldScalar w = mi * mj * alpha[a][c];
                    if (w.is_zero()) continue;
                    coord_axpy(out, w, h.alg.mult[b][d]);
                }
        }
    return out;
}

}  // namespace

ScalarTable convolve(const HopfAlgebra& h, const ScalarTable& f, const ScalarTable& g) {
    size_t n = h.dim();
    check_table_shape(h, f, "bilinear form");
    check_table_shape(h, g, "bilinear form");
    ScalarTable out(n, std::vector<FieldScalar>(n, FieldScalar::zero(h.field())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldScalar acc = FieldScalar::zero(h.field());
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    const FieldScalar& mi = h.comult[i][a][b];
                    if (mi.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c)
                        for (size_t d = 0; d < n; ++d) {
                            const FieldScalar& mj = h.comult[j][c][d];
                            if (mj.is_zero()) continue;
                            acc += mi * mj * f[a][c] * g[b][d];
                        }
                }
            out[i][j] = acc;
        }
    return out;
}

ScalarTable convolution_unit(const HopfAlgebra& h) {
    size_t n = h.dim();
    ScalarTable out(n, std::vector<FieldScalar>(n, FieldScalar::zero(h.field())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = h.counit[i] * h.counit[j];
    return out;
}

std::optional<ScalarTable> convolution_inverse(const HopfAlgebra& h, const ScalarTable& f) {
    size_t n = h.dim();
    check_table_shape(h, f, "bilinear form");
    const FieldPtr& field = h.field();
    // (f * g)(x_i, x_j) = eps(x_i) eps(x_j): unknowns g[b][d], one equation
    // per basis pair.
    ExactMatrix sys(n * n, n * n, field);
    std::vector<FieldScalar> rhs;
    rhs.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t row = i * n + j;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    const FieldScalar& mi = h.comult[i][a][b];
                    if (mi.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c)
                        for (size_t d = 0; d < n; ++d) {
                            const FieldScalar& mj = h.comult[j][c][d];
                            if (mj.is_zero()) continue;
                            FieldScalar w = mi * mj * f[a][c];
                            if (w.is_zero()) continue;
                            sys.set(row, b * n + d, sys.at(row, b * n + d) + w);
                        }
                }
            rhs.push_back(h.counit[i] * h.counit[j]);
        }
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    ScalarTable g(n, std::vector<FieldScalar>(n, FieldScalar::zero(field)));
    for (size_t b = 0; b < n; ++b)
        for (size_t d = 0; d < n; ++d) g[b][d] = (*sol)[b * n + d];
    if (convolve(h, g, f) != convolution_unit(h)) return std::nullopt;
    return g;
}

std::vector<std::string> verify_cocycle(const HopfAlgebra& h, const ScalarTable& alpha) {
    size_t n = h.dim();
    check_table_shape(h, alpha, "alpha");
    const std::vector<std::string>& lbl = h.alg.basis;
    std::vector<std::string> report;

    for (size_t i = 0; i < n; ++i) {
        FieldScalar left = FieldScalar::zero(h.field());
        FieldScalar right = FieldScalar::zero(h.field());
        for (size_t k = 0; k < n; ++k) {
            if (h.alg.unit[k].is_zero()) continue;
            left += h.alg.unit[k] * alpha[k][i];
            right += h.alg.unit[k] * alpha[i][k];
        }
        if (left != h.counit[i])
            report.push_back("normalization fails at (1, " + lbl[i] + ")");
        if (right != h.counit[i])
            report.push_back("normalization fails at (" + lbl[i] + ", 1)");
    }

    // Both sides of the cocycle identity contract a twisted product against
    // alpha: sum alpha(x_1, y_1) alpha(x_2 y_2, z) = sum alpha(y_1, z_1) alpha(x, y_2 z_2).
    std::vector<std::vector<Coord>> tw(n, std::vector<Coord>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) tw[i][j] = twisted_product(h, alpha, i, j);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                FieldScalar lhs = FieldScalar::zero(h.field());
                FieldScalar rhs = FieldScalar::zero(h.field());
                for (size_t u = 0; u < n; ++u) {
                    if (!tw[i][j][u].is_zero()) lhs += tw[i][j][u] * alpha[u][k];
                    if (!tw[j][k][u].is_zero()) rhs += alpha[i][u] * tw[j][k][u];
                }
                if (lhs != rhs)
                    report.push_back("cocycle identity fails at (" + lbl[i] + ", " + lbl[j] +
                                     ", " + lbl[k] + ")");
            }
    return report;
}

std::vector<std::string> verify_cocycle(const TwoCocycle& c) {
    std::vector<std::string> report = verify_cocycle(c.hopf, c.alpha);
    check_table_shape(c.hopf, c.alpha_inv, "alpha_inv");
    ScalarTable unit = convolution_unit(c.hopf);
    if (convolve(c.hopf, c.alpha, c.alpha_inv) != unit)
        report.push_back("alpha_inv is not a right convolution inverse of alpha");
    if (convolve(c.hopf, c.alpha_inv, c.alpha) != unit)
        report.push_back("alpha_inv is not a left convolution inverse of alpha");
    return report;
}

TwoCocycle make_cocycle(const HopfAlgebra& h, ScalarTable alpha) {
    check_table_shape(h, alpha, "alpha");
    for (auto& row : alpha)
        for (auto& v : row) v = coerce_to(v, h.field());
    auto report = verify_cocycle(h, alpha);
    if (!report.empty()) throw ValidationError("invalid cocycle: " + report.front());
    auto inv = convolution_inverse(h, alpha);
    if (!inv) throw ValidationError("alpha has no convolution inverse");
    return TwoCocycle{h, std::move(alpha), std::move(*inv)};
}

TwoCocycle trivial_cocycle(const HopfAlgebra& h) {
    ScalarTable t = convolution_unit(h);
    return TwoCocycle{h, t, t};
}

CleftAlgebra twist(const HopfAlgebra& h, const TwoCocycle& c) {
    if (!same_structure(h, c.hopf))
        throw ValidationError("cocycle is defined over a different Hopf algebra");
    auto report = verify_cocycle(c);
    if (!report.empty()) throw ValidationError("invalid cocycle: " + report.front());

    size_t n = h.dim();
    FinDimAlgebra alg;
    alg.field = h.field();
    alg.dim = n;
    for (size_t i = 0; i < n; ++i) alg.basis.push_back("u_" + h.alg.basis[i]);
    alg.mult.assign(n, std::vector<Coord>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) alg.mult[i][j] = twisted_product(h, c.alpha, i, j);
    alg.unit = h.alg.unit;

    ComoduleAlgebra comod{std::move(alg), h, h.comult};
    auto bad = verify_comodule_algebra(comod);
    if (!bad.empty())
        throw ValidationError("twist is not a comodule algebra: " + bad.front());
    return CleftAlgebra{std::move(comod), c, std::nullopt};
}

CleftAlgebra sweedler_cleft(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c) {
    FieldScalar av = a, bv = b, cv = c;
    coerce_pair(av, bv);
    coerce_pair(av, cv);
    const FieldPtr& field = av.field();
    bv = coerce_to(bv, field);
    cv = coerce_to(cv, field);
    if (field_characteristic(*field) == 2)
        throw ValidationError("the Sweedler cleft family requires characteristic != 2");
    if (av.is_zero()) throw ValidationError("a must be nonzero");

    HopfAlgebra h = sweedler(field);

    // Generators 0 = u_x, 1 = u_y; relations u_x^2 = a, u_y u_x = b - u_x u_y,
    // u_y^2 = c. Irreducible words are exactly 1, u_x, u_y, u_x u_y.
    FieldScalar one = FieldScalar::one(field);
    std::vector<NCRule> rules = {
        {{0, 0}, {{av, {}}}},
        {{1, 0}, {{bv, {}}, {-one, {0, 1}}}},
        {{1, 1}, {{cv, {}}}},
    };
    std::vector<NCWord> words = {{}, {0}, {1}, {0, 1}};

    FinDimAlgebra alg;
    alg.field = field;
    alg.dim = 4;
    alg.basis = {"u_1", "u_x", "u_y", "u_xy"};
    alg.mult.assign(4, std::vector<Coord>(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            NCWord w = words[i];
            w.insert(w.end(), words[j].begin(), words[j].end());
            alg.mult[i][j] = nc_expand(nc_reduce(w, one, rules), words, field);
        }
    alg.unit = coord_zero(4, field);
    alg.unit[0] = one;

    // delta(u_x) = u_x (x) x, delta(u_y) = 1 (x) y + u_y (x) x, and their
    // products; H basis order (1, x, y, xy).
    CoactionTable coaction(4, std::vector<std::vector<FieldScalar>>(
                                  4, std::vector<FieldScalar>(4, FieldScalar::zero(field))));
    coaction[0][0][0] = one;
    coaction[1][1][1] = one;
    coaction[2][0][2] = one;
    coaction[2][2][1] = one;
    coaction[3][1][3] = one;
    coaction[3][3][0] = one;

    ComoduleAlgebra comod{std::move(alg), std::move(h), std::move(coaction)};
    auto bad = verify_comodule_algebra(comod);
    if (!bad.empty())
        throw ValidationError("cleft presentation is inconsistent: " + bad.front());
    return CleftAlgebra{std::move(comod), std::nullopt,
                        std::array<FieldScalar, 3>{av, bv, cv}};
}

CleftAlgebra sweedler_cleft_generic() {
    PolyRingPtr ring = PolyRing::make(rationals(), {"a", "b", "c"});
    FieldPtr field = fraction_field(ring);
    return sweedler_cleft(to_scalar(field, MPoly::variable(ring, "a")),
                          to_scalar(field, MPoly::variable(ring, "b")),
                          to_scalar(field, MPoly::variable(ring, "c")));
}

bool is_nondegenerate(const CleftAlgebra& a) { return center(a.comod.alg).size() == 1; }

}  // namespace hopfid
