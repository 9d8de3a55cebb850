#include "hopfid/comod.hpp"

#include "hopfid/matrix.hpp"

namespace hopfid {

std::vector<std::vector<FieldScalar>> ComoduleAlgebra::coact(const Coord& a) const {
    const size_t m = adim(), n = hdim();
    std::vector<std::vector<FieldScalar>> out(m, Coord(n, FieldScalar::zero(field())));
    for (size_t i = 0; i < m; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!coaction[i][j][k].is_zero()) out[j][k] += a[i] * coaction[i][j][k];
    }
    return out;
}

std::vector<std::string> verify_comodule_algebra(const ComoduleAlgebra& a) {
    const size_t m = a.adim(), n = a.hdim();
    check_algebra_shape(a.alg);
    if (a.coaction.size() != m) throw DimensionError("coaction table count != dim A");
    for (const auto& t : a.coaction) {
        if (t.size() != m) throw DimensionError("coaction table A-side size mismatch");
        for (const auto& row : t)
            if (row.size() != n) throw DimensionError("coaction table H-side size mismatch");
    }

    std::vector<std::string> report = verify_algebra(a.alg);
    const auto& d = a.coaction;
    const auto& mh = a.hopf.comult;

    // (delta (x) id) delta = (id (x) Delta) delta
    for (size_t i = 0; i < m; ++i) {
        bool ok = true;
        for (size_t j = 0; j < m && ok; ++j)
            for (size_t k = 0; k < n && ok; ++k)
                for (size_t l = 0; l < n && ok; ++l) {
                    FieldScalar lhs = FieldScalar::zero(a.field());
                    for (size_t c = 0; c < m; ++c)
                        if (!d[i][c][l].is_zero() && !d[c][j][k].is_zero())
                            lhs += d[i][c][l] * d[c][j][k];
                    FieldScalar rhs = FieldScalar::zero(a.field());
                    for (size_t c = 0; c < n; ++c)
                        if (!d[i][j][c].is_zero() && !mh[c][k][l].is_zero())
                            rhs += d[i][j][c] * mh[c][k][l];
                    if (!(lhs == rhs)) ok = false;
                }
        if (!ok)
            report.push_back("coaction coassociativity fails at basis element " +
                             a.alg.basis[i]);
    }

    // (id (x) eps) delta = id
    for (size_t i = 0; i < m; ++i) {
        bool ok = true;
        for (size_t j = 0; j < m; ++j) {
            FieldScalar s = FieldScalar::zero(a.field());
            for (size_t k = 0; k < n; ++k)
                if (!d[i][j][k].is_zero()) s += d[i][j][k] * a.hopf.counit[k];
            FieldScalar want =
                i == j ? FieldScalar::one(a.field()) : FieldScalar::zero(a.field());
            if (!(s == want)) ok = false;
        }
        if (!ok) report.push_back("coaction counit law fails at basis element " + a.alg.basis[i]);
    }

    // delta is an algebra map
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            bool ok = true;
            for (size_t u = 0; u < m && ok; ++u)
                for (size_t v = 0; v < n && ok; ++v) {
                    FieldScalar lhs = FieldScalar::zero(a.field());
                    for (size_t p = 0; p < m; ++p)
                        for (size_t q = 0; q < n; ++q) {
                            if (d[i][p][q].is_zero()) continue;
                            for (size_t r = 0; r < m; ++r)
                                for (size_t s = 0; s < n; ++s) {
                                    if (d[j][r][s].is_zero()) continue;
                                    if (a.alg.mult[p][r][u].is_zero()) continue;
                                    if (a.hopf.alg.mult[q][s][v].is_zero()) continue;
                                    lhs += d[i][p][q] * d[j][r][s] * a.alg.mult[p][r][u] *
                                           a.hopf.alg.mult[q][s][v];
                                }
                        }
                    FieldScalar rhs = FieldScalar::zero(a.field());
                    for (size_t c = 0; c < m; ++c)
                        if (!a.alg.mult[i][j][c].is_zero() && !d[c][u][v].is_zero())
                            rhs += a.alg.mult[i][j][c] * d[c][u][v];
                    if (!(lhs == rhs)) ok = false;
                }
            if (!ok)
                report.push_back("coaction is not an algebra map at (" + a.alg.basis[i] + ", " +
                                 a.alg.basis[j] + ")");
        }

    // delta(1) = 1 (x) 1
    auto d1 = a.coact(a.alg.unit);
    bool unit_ok = true;
    for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < n; ++k)
            if (!(d1[j][k] == a.alg.unit[j] * a.hopf.alg.unit[k])) unit_ok = false;
    if (!unit_ok) report.push_back("coaction does not send 1 to 1(x)1");

    return report;
}

std::vector<Coord> coinvariants(const ComoduleAlgebra& a) {
    const size_t m = a.adim(), n = a.hdim();
    ExactMatrix sys(m * n, m, a.field());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < n; ++k) {
                FieldScalar v = a.coaction[i][j][k];
                if (i == j) v -= a.hopf.alg.unit[k];
                if (!v.is_zero()) sys.set(j * n + k, i, v);
            }
    return kernel_basis(sys);
}

std::vector<Coord> center(const FinDimAlgebra& a) {
    const size_t m = a.dim;
    ExactMatrix sys(m * m, m, a.field);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < m; ++l) {
                FieldScalar v = a.mult[i][j][l] - a.mult[j][i][l];
                if (!v.is_zero()) sys.set(j * m + l, i, v);
            }
    return kernel_basis(sys);
}

ComoduleMapSpace comodule_map_space(const ComoduleAlgebra& a) {
    const size_t m = a.adim(), n = a.hdim();
    // unknowns F[j][c] at column j*n + c; equations indexed by (i, l, k)
    ExactMatrix sys(n * m * n, m * n, a.field());
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < m; ++l)
            for (size_t k = 0; k < n; ++k) {
                size_t row = (i * m + l) * n + k;
                for (size_t j = 0; j < m; ++j)
                    if (!a.coaction[j][l][k].is_zero())
                        sys.set(row, j * n + i, sys.at(row, j * n + i) + a.coaction[j][l][k]);
                for (size_t c = 0; c < n; ++c)
                    if (!a.hopf.comult[i][c][k].is_zero())
                        sys.set(row, l * n + c,
                                sys.at(row, l * n + c) - a.hopf.comult[i][c][k]);
            }
    ComoduleMapSpace out;
    out.adim = m;
    out.hdim = n;
    for (const auto& v : kernel_basis(sys)) {
        std::vector<std::vector<FieldScalar>> f(m, Coord(n, FieldScalar::zero(a.field())));
        for (size_t j = 0; j < m; ++j)
            for (size_t c = 0; c < n; ++c) f[j][c] = v[j * n + c];
        out.basis.push_back(std::move(f));
    }
    return out;
}

ComoduleAlgebra hopf_as_comodule(const HopfAlgebra& h) {
    ComoduleAlgebra a;
    a.alg = h.alg;
    a.hopf = h;
    a.coaction = h.comult;
    return a;
}

ComoduleAlgebra graded_algebra_as_comodule(const FiniteGroup& g, const FinDimAlgebra& alg,
                                           const std::vector<size_t>& grading) {
    const size_t m = alg.dim;
    check_algebra_shape(alg);
    if (grading.size() != m) throw DimensionError("grading length != dim A");
    for (size_t d : grading)
        if (d >= g.order()) throw ValidationError("grading refers to a group index out of range");

    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            size_t want = g.table[grading[i]][grading[j]];
            for (size_t l = 0; l < m; ++l)
                if (!alg.mult[i][j][l].is_zero() && grading[l] != want)
                    throw ValidationError("grading violation in the product table at (" +
                                          alg.basis[i] + ", " + alg.basis[j] + ")");
        }
    for (size_t i = 0; i < m; ++i)
        if (!alg.unit[i].is_zero() && grading[i] != g.identity)
            throw ValidationError("unit is not in the identity component");

    ComoduleAlgebra a;
    a.alg = alg;
    a.hopf = group_algebra(g, alg.field);
    const size_t n = a.hopf.dim();
    a.coaction.assign(m, std::vector<Coord>(m, Coord(n, FieldScalar::zero(alg.field))));
    for (size_t i = 0; i < m; ++i)
        a.coaction[i][i][grading[i]] = FieldScalar::one(alg.field);
    return a;
}

ComoduleAlgebra g_algebra_as_comodule(const FiniteGroup& g, const FinDimAlgebra& alg,
                                      const std::vector<std::vector<Coord>>& action) {
    const size_t m = alg.dim;
    check_algebra_shape(alg);
    if (action.size() != g.order()) throw DimensionError("one action map per group element");
    for (const auto& mg : action) {
        if (mg.size() != m) throw DimensionError("action map has wrong dimension");
        for (const auto& row : mg)
            if (row.size() != m) throw DimensionError("action map has wrong dimension");
    }

    auto apply = [&](size_t gi, const Coord& v) {
        Coord out = alg.zero_vec();
        for (size_t i = 0; i < m; ++i) coord_axpy(out, v[i], action[gi][i]);
        return out;
    };

    // identity acts trivially
    for (size_t i = 0; i < m; ++i)
        if (!(apply(g.identity, alg.basis_vec(i)) == alg.basis_vec(i)))
            throw ValidationError("identity group element does not act trivially");
    for (size_t gi = 0; gi < g.order(); ++gi) {
        // algebra map: preserves unit and products
        if (!(apply(gi, alg.unit) == alg.unit))
            throw ValidationError("action of '" + g.names[gi] + "' does not fix the unit");
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                Coord lhs = apply(gi, alg.mult[i][j]);
                Coord rhs = alg.multiply(action[gi][i], action[gi][j]);
                if (!(lhs == rhs))
                    throw ValidationError("action of '" + g.names[gi] +
                                          "' is not an algebra map");
            }
        // automorphism: g^{-1} inverts it (also forces bijectivity)
        for (size_t i = 0; i < m; ++i)
            if (!(apply(g.inverse[gi], action[gi][i]) == alg.basis_vec(i)))
                throw ValidationError("action of '" + g.names[gi] + "' is not invertible");
    }
    // composition follows the Cayley table (left action)
    for (size_t gi = 0; gi < g.order(); ++gi)
        for (size_t hj = 0; hj < g.order(); ++hj)
            for (size_t i = 0; i < m; ++i)
                if (!(apply(gi, action[hj][i]) == action[g.table[gi][hj]][i]))
                    throw ValidationError("action does not respect the Cayley table at (" +
                                          g.names[gi] + ", " + g.names[hj] + ")");

    ComoduleAlgebra a;
    a.alg = alg;
    a.hopf = dual_group_algebra(g, alg.field);
    const size_t n = g.order();
    a.coaction.assign(m, std::vector<Coord>(m, Coord(n, FieldScalar::zero(alg.field))));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < m; ++j) a.coaction[i][j][k] = action[k][i][j];
    return a;
}

}  // namespace hopfid
