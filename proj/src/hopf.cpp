#include "hopfid/hopf.hpp"

#include <algorithm>
#include <array>

#include "hopfid/rewrite.hpp"

namespace hopfid {

// ---- coordinate helpers ----

Coord coord_zero(size_t n, const FieldPtr& field) {
    return Coord(n, FieldScalar::zero(field));
}

void coord_axpy(Coord& acc, const FieldScalar& c, const Coord& v) {
    if (acc.size() != v.size()) throw DimensionError("coordinate vector size mismatch");
    if (c.is_zero()) return;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
}

bool coord_is_zero(const Coord& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

namespace {

bool simple_coeff(const std::string& s) { return s.find(' ') == std::string::npos; }

}  // namespace

std::string term_str(const FieldScalar& c, const std::string& atom) {
    std::string cs = c.str();
    if (atom.empty()) return simple_coeff(cs) ? cs : "(" + cs + ")";
    if (cs == "1") return atom;
    if (cs == "-1") return "-" + atom;
    return (simple_coeff(cs) ? cs : "(" + cs + ")") + "*" + atom;
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

std::string coord_str(const Coord& v, const std::vector<std::string>& basis) {
    std::vector<std::string> parts;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string atom = basis[i] == "1" ? "" : basis[i];
        parts.push_back(term_str(v[i], atom));
    }
    return join_terms(parts);
}

std::string tensor_str(const TensorSq& t, const std::vector<std::string>& basis) {
    std::vector<std::string> parts;
    for (size_t j = 0; j < t.size(); ++j)
        for (size_t k = 0; k < t[j].size(); ++k) {
            if (t[j][k].is_zero()) continue;
            parts.push_back(term_str(t[j][k], basis[j] + "(x)" + basis[k]));
        }
    return join_terms(parts);
}

// ---- FinDimAlgebra ----

Coord FinDimAlgebra::basis_vec(size_t i) const {
    Coord v = zero_vec();
    v[i] = FieldScalar::one(field);
    return v;
}

std::optional<size_t> FinDimAlgebra::basis_index(const std::string& label) const {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) return std::nullopt;
    return (size_t)(it - basis.begin());
}

Coord FinDimAlgebra::multiply(const Coord& a, const Coord& b) const {
    if (a.size() != dim || b.size() != dim)
        throw DimensionError("coordinate vector size mismatch in multiply");
    Coord out = zero_vec();
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            coord_axpy(out, a[i] * b[j], mult[i][j]);
        }
    }
    return out;
}

Coord FinDimAlgebra::power(const Coord& a, unsigned e) const {
    Coord out = unit;
    for (unsigned k = 0; k < e; ++k) out = multiply(out, a);
    return out;
}

void check_algebra_shape(const FinDimAlgebra& a) {
    if (a.basis.size() != a.dim) throw DimensionError("basis label count != dim");
    if (a.unit.size() != a.dim) throw DimensionError("unit vector size != dim");
    if (a.mult.size() != a.dim) throw DimensionError("mult table row count != dim");
    for (const auto& row : a.mult) {
        if (row.size() != a.dim) throw DimensionError("mult table column count != dim");
        for (const auto& c : row)
            if (c.size() != a.dim) throw DimensionError("mult table entry size != dim");
    }
}

std::vector<std::string> verify_algebra(const FinDimAlgebra& a) {
    check_algebra_shape(a);
    std::vector<std::string> report;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) {
                Coord lhs = a.multiply(a.mult[i][j], a.basis_vec(k));
                Coord rhs = a.multiply(a.basis_vec(i), a.mult[j][k]);
                for (size_t t = 0; t < a.dim; ++t) lhs[t] -= rhs[t];
                if (!coord_is_zero(lhs))
                    report.push_back("associativity fails at (" + a.basis[i] + ", " +
                                     a.basis[j] + ", " + a.basis[k] + ")");
            }
    for (size_t i = 0; i < a.dim; ++i) {
        Coord l = a.multiply(a.unit, a.basis_vec(i));
        Coord r = a.multiply(a.basis_vec(i), a.unit);
        Coord e = a.basis_vec(i);
        bool ok = true;
        for (size_t t = 0; t < a.dim; ++t)
            if (!(l[t] == e[t]) || !(r[t] == e[t])) ok = false;
        if (!ok) report.push_back("unit law fails at basis element " + a.basis[i]);
    }
    return report;
}

// ---- HopfAlgebra ----

FieldScalar HopfAlgebra::counit_of(const Coord& v) const {
    FieldScalar s = FieldScalar::zero(field());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s += counit[i] * v[i];
    return s;
}

Coord HopfAlgebra::antipode_of(const Coord& v) const {
    Coord out = alg.zero_vec();
    for (size_t i = 0; i < v.size(); ++i) coord_axpy(out, v[i], antipode[i]);
    return out;
}

TensorSq HopfAlgebra::comult_of(const Coord& v) const {
    TensorSq out = tensor_zero(dim(), field());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j)
            for (size_t k = 0; k < dim(); ++k)
                if (!comult[i][j][k].is_zero()) out[j][k] += v[i] * comult[i][j][k];
    }
    return out;
}

TensorSq tensor_zero(size_t n, const FieldPtr& field) {
    return TensorSq(n, Coord(n, FieldScalar::zero(field)));
}

TensorSq tensor_mult(const FinDimAlgebra& a, const TensorSq& s, const TensorSq& t) {
    TensorSq out = tensor_zero(a.dim, a.field);
    for (size_t p = 0; p < a.dim; ++p)
        for (size_t q = 0; q < a.dim; ++q) {
            if (s[p][q].is_zero()) continue;
            for (size_t r = 0; r < a.dim; ++r)
                for (size_t w = 0; w < a.dim; ++w) {
                    if (t[r][w].is_zero()) continue;
                    FieldScalar c = s[p][q] * t[r][w];
                    const Coord& left = a.mult[p][r];
                    const Coord& right = a.mult[q][w];
                    for (size_t u = 0; u < a.dim; ++u) {
                        if (left[u].is_zero()) continue;
                        FieldScalar cu = c * left[u];
                        for (size_t v = 0; v < a.dim; ++v)
                            if (!right[v].is_zero()) out[u][v] += cu * right[v];
                    }
                }
        }
    return out;
}

namespace {
bool tensor_eq(const TensorSq& a, const TensorSq& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}
}  // namespace

std::vector<std::string> verify_hopf(const HopfAlgebra& h) {
    const FinDimAlgebra& a = h.alg;
    const size_t n = a.dim;
    check_algebra_shape(a);
    if (h.comult.size() != n || h.counit.size() != n || h.antipode.size() != n)
        throw DimensionError("coalgebra table count != dim");
    for (const auto& t : h.comult) {
        if (t.size() != n) throw DimensionError("comult table size != dim");
        for (const auto& row : t)
            if (row.size() != n) throw DimensionError("comult table size != dim");
    }
    for (const auto& s : h.antipode)
        if (s.size() != n) throw DimensionError("antipode table size != dim");

    std::vector<std::string> report = verify_algebra(a);

    // coassociativity
    for (size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (size_t x = 0; x < n && ok; ++x)
            for (size_t y = 0; y < n && ok; ++y)
                for (size_t z = 0; z < n && ok; ++z) {
                    FieldScalar lhs = FieldScalar::zero(a.field);
                    for (size_t j = 0; j < n; ++j)
                        if (!h.comult[i][j][z].is_zero() && !h.comult[j][x][y].is_zero())
                            lhs += h.comult[i][j][z] * h.comult[j][x][y];
                    FieldScalar rhs = FieldScalar::zero(a.field);
                    for (size_t k = 0; k < n; ++k)
                        if (!h.comult[i][x][k].is_zero() && !h.comult[k][y][z].is_zero())
                            rhs += h.comult[i][x][k] * h.comult[k][y][z];
                    if (!(lhs == rhs)) ok = false;
                }
        if (!ok) report.push_back("coassociativity fails at basis element " + a.basis[i]);
    }

    // counit law
    for (size_t i = 0; i < n; ++i) {
        bool ok = true;
        for (size_t k = 0; k < n; ++k) {
            FieldScalar l = FieldScalar::zero(a.field);
            FieldScalar r = FieldScalar::zero(a.field);
            for (size_t j = 0; j < n; ++j) {
                if (!h.comult[i][j][k].is_zero()) l += h.counit[j] * h.comult[i][j][k];
                if (!h.comult[i][k][j].is_zero()) r += h.comult[i][k][j] * h.counit[j];
            }
            FieldScalar want = i == k ? FieldScalar::one(a.field) : FieldScalar::zero(a.field);
            if (!(l == want) || !(r == want)) ok = false;
        }
        if (!ok) report.push_back("counit law fails at basis element " + a.basis[i]);
    }

    // Delta and eps are algebra maps; Delta(1) = 1(x)1, eps(1) = 1
    TensorSq unit_sq = tensor_zero(n, a.field);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) unit_sq[j][k] = a.unit[j] * a.unit[k];
    if (!tensor_eq(h.comult_of(a.unit), unit_sq))
        report.push_back("comultiplication does not send 1 to 1(x)1");
    if (!(h.counit_of(a.unit) == FieldScalar::one(a.field)))
        report.push_back("counit does not send 1 to 1");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!tensor_eq(tensor_mult(a, h.comult[i], h.comult[j]),
                           h.comult_of(a.mult[i][j])))
                report.push_back("comultiplication is not an algebra map at (" + a.basis[i] +
                                 ", " + a.basis[j] + ")");
            if (!(h.counit_of(a.mult[i][j]) == h.counit[i] * h.counit[j]))
                report.push_back("counit is not an algebra map at (" + a.basis[i] + ", " +
                                 a.basis[j] + ")");
        }

    // antipode: m(S (x) id)Delta = unit . eps = m(id (x) S)Delta
    for (size_t i = 0; i < n; ++i) {
        Coord left = a.zero_vec(), right = a.zero_vec();
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                if (h.comult[i][j][k].is_zero()) continue;
                coord_axpy(left, h.comult[i][j][k],
                           a.multiply(h.antipode[j], a.basis_vec(k)));
                coord_axpy(right, h.comult[i][j][k],
                           a.multiply(a.basis_vec(j), h.antipode[k]));
            }
        Coord want = a.zero_vec();
        coord_axpy(want, h.counit[i], a.unit);
        for (size_t t = 0; t < n; ++t) {
            left[t] -= want[t];
            right[t] -= want[t];
        }
        if (!coord_is_zero(left) || !coord_is_zero(right))
            report.push_back("antipode axiom fails at basis element " + a.basis[i]);
    }
    return report;
}

bool same_structure(const HopfAlgebra& x, const HopfAlgebra& y) {
    if (x.dim() != y.dim()) return false;
    const size_t n = x.dim();
    try {
        for (size_t i = 0; i < n; ++i) {
            if (!(x.counit[i] == y.counit[i])) return false;
            for (size_t j = 0; j < n; ++j) {
                if (!(x.antipode[i][j] == y.antipode[i][j])) return false;
                if (!(x.alg.unit[i] == y.alg.unit[i])) return false;
                for (size_t k = 0; k < n; ++k) {
                    if (!(x.alg.mult[i][j][k] == y.alg.mult[i][j][k])) return false;
                    if (!(x.comult[i][j][k] == y.comult[i][j][k])) return false;
                }
            }
        }
    } catch (const FieldMismatchError&) {
        return false;
    }
    return true;
}

// ---- groups ----

FiniteGroup group_from_table(std::vector<std::string> names,
                             std::vector<std::vector<size_t>> table) {
    const size_t n = names.size();
    if (n == 0) throw ValidationError("empty group");
    if (table.size() != n) throw DimensionError("Cayley table row count != order");
    for (const auto& row : table) {
        if (row.size() != n) throw DimensionError("Cayley table column count != order");
        for (size_t v : row)
            if (v >= n) throw ValidationError("Cayley table entry out of range");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && names[i] == names[j])
                throw ValidationError("duplicate group element name '" + names[i] + "'");

    std::optional<size_t> identity;
    for (size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (size_t j = 0; j < n; ++j)
            if (table[e][j] != j || table[j][e] != j) ok = false;
        if (ok) identity = e;
    }
    if (!identity) throw ValidationError("Cayley table is not a group: no identity element");

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw ValidationError("Cayley table is not a group: not associative at (" +
                                          names[i] + ", " + names[j] + ", " + names[k] + ")");

    std::vector<size_t> inverse(n);
    for (size_t i = 0; i < n; ++i) {
        std::optional<size_t> inv;
        for (size_t j = 0; j < n && !inv; ++j)
            if (table[i][j] == *identity && table[j][i] == *identity) inv = j;
        if (!inv)
            throw ValidationError("Cayley table is not a group: '" + names[i] +
                                  "' has no inverse");
        inverse[i] = *inv;
    }

    FiniteGroup g;
    g.names = std::move(names);
    g.table = std::move(table);
    g.identity = *identity;
    g.inverse = std::move(inverse);
    return g;
}

FiniteGroup cyclic_group(size_t n) {
    if (n == 0) throw ValidationError("cyclic group order must be >= 1");
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return group_from_table(std::move(names), std::move(table));
}

FiniteGroup symmetric_group_3() {
    // permutations of (0,1,2) in lexicographic order, composed as (fg)(t) = f(g(t))
    std::vector<std::array<size_t, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back("p" + std::to_string(p[0]) + std::to_string(p[1]) +
                        std::to_string(p[2]));
    auto find = [&](const std::array<size_t, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw ValidationError("permutation composition escaped S3");
    };
    std::vector<std::vector<size_t>> table(6, std::vector<size_t>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            std::array<size_t, 3> c;
            for (size_t t = 0; t < 3; ++t) c[t] = perms[i][perms[j][t]];
            table[i][j] = find(c);
        }
    return group_from_table(std::move(names), std::move(table));
}

HopfAlgebra group_algebra(const FiniteGroup& g, const FieldPtr& field) {
    const size_t n = g.order();
    HopfAlgebra h;
    h.alg.field = field;
    h.alg.dim = n;
    h.alg.basis = g.names;
    h.alg.mult.assign(n, std::vector<Coord>(n, coord_zero(n, field)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            h.alg.mult[i][j][g.table[i][j]] = FieldScalar::one(field);
    h.alg.unit = coord_zero(n, field);
    h.alg.unit[g.identity] = FieldScalar::one(field);
    h.comult.assign(n, tensor_zero(n, field));
    for (size_t i = 0; i < n; ++i) h.comult[i][i][i] = FieldScalar::one(field);
    h.counit = Coord(n, FieldScalar::one(field));
    h.antipode.assign(n, coord_zero(n, field));
    for (size_t i = 0; i < n; ++i) h.antipode[i][g.inverse[i]] = FieldScalar::one(field);
    return h;
}

HopfAlgebra dual_group_algebra(const FiniteGroup& g, const FieldPtr& field) {
    const size_t n = g.order();
    HopfAlgebra h;
    h.alg.field = field;
    h.alg.dim = n;
    for (const auto& name : g.names) h.alg.basis.push_back("e_" + name);
    h.alg.mult.assign(n, std::vector<Coord>(n, coord_zero(n, field)));
    for (size_t i = 0; i < n; ++i) h.alg.mult[i][i][i] = FieldScalar::one(field);
    h.alg.unit = Coord(n, FieldScalar::one(field));
    h.comult.assign(n, tensor_zero(n, field));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            h.comult[g.table[a][b]][a][b] = FieldScalar::one(field);
    h.counit = coord_zero(n, field);
    h.counit[g.identity] = FieldScalar::one(field);
    h.antipode.assign(n, coord_zero(n, field));
    for (size_t i = 0; i < n; ++i) h.antipode[i][g.inverse[i]] = FieldScalar::one(field);
    return h;
}

// ---- Taft and Sweedler ----

namespace {
std::string taft_label(unsigned i, unsigned j) {
    if (i == 0 && j == 0) return "1";
    std::string s;
    if (i == 1)
        s += "x";
    else if (i > 1)
        s += "x^" + std::to_string(i);
    if (j == 1)
        s += "y";
    else if (j > 1)
        s += "y^" + std::to_string(j);
    return s;
}
}  // namespace

HopfAlgebra taft(unsigned n, const FieldScalar& q) {
    if (n < 2) throw ValidationError("Taft algebra needs n >= 2");
    const FieldPtr field = q.field();
    if (!q.pow((long)n).is_one())
        throw ValidationError("q is not an n-th root of unity");
    for (unsigned m = 1; m < n; ++m)
        if (q.pow((long)m).is_one())
            throw ValidationError("q is not a primitive n-th root of unity (order " +
                                  std::to_string(m) + ")");

    const size_t N = (size_t)n * n;
    const unsigned X = 0, Y = 1;
    std::vector<NCRule> rules;
    rules.push_back({{Y, X}, {{q, {X, Y}}}});                              // yx -> q xy
    rules.push_back({NCWord(n, X), {{FieldScalar::one(field), {}}}});      // x^n -> 1
    rules.push_back({NCWord(n, Y), {}});                                   // y^n -> 0

    std::vector<NCWord> basis_words(N);
    std::vector<std::string> labels(N);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            NCWord w(i, X);
            w.insert(w.end(), j, Y);
            size_t k = i + (size_t)n * j;
            basis_words[k] = std::move(w);
            labels[k] = taft_label(i, j);
        }

    HopfAlgebra h;
    h.alg.field = field;
    h.alg.dim = N;
    h.alg.basis = labels;
    h.alg.mult.assign(N, std::vector<Coord>(N));
    for (size_t k1 = 0; k1 < N; ++k1)
        for (size_t k2 = 0; k2 < N; ++k2) {
            NCWord w = basis_words[k1];
            w.insert(w.end(), basis_words[k2].begin(), basis_words[k2].end());
            h.alg.mult[k1][k2] =
                nc_expand(nc_reduce(w, FieldScalar::one(field), rules), basis_words, field);
        }
    h.alg.unit = coord_zero(N, field);
    h.alg.unit[0] = FieldScalar::one(field);

    // Delta(x) = x (x) x, Delta(y) = 1 (x) y + y (x) x, extended multiplicatively
    const size_t ix = 1, iy = n;  // indices of x and y in the PBW order
    TensorSq dx = tensor_zero(N, field), dy = tensor_zero(N, field);
    dx[ix][ix] = FieldScalar::one(field);
    dy[0][iy] = FieldScalar::one(field);
    dy[iy][ix] = FieldScalar::one(field);
    std::vector<TensorSq> xp(n), yp(n);
    xp[0] = tensor_zero(N, field);
    xp[0][0][0] = FieldScalar::one(field);
    yp[0] = xp[0];
    for (unsigned i = 1; i < n; ++i) xp[i] = tensor_mult(h.alg, xp[i - 1], dx);
    for (unsigned j = 1; j < n; ++j) yp[j] = tensor_mult(h.alg, yp[j - 1], dy);
    h.comult.resize(N);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            h.comult[i + (size_t)n * j] = tensor_mult(h.alg, xp[i], yp[j]);

    h.counit = coord_zero(N, field);
    for (unsigned i = 0; i < n; ++i) h.counit[i] = FieldScalar::one(field);  // eps(x^i) = 1

    // S(x) = x^{n-1}, S(y) = -q^{n-1} x^{n-1} y, extended anti-multiplicatively
    Coord sx = h.alg.basis_vec(n - 1);
    Coord sy = h.alg.zero_vec();
    sy[(n - 1) + (size_t)n * 1] = -q.pow((long)n - 1);
    h.antipode.resize(N);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            h.antipode[i + (size_t)n * j] =
                h.alg.multiply(h.alg.power(sy, j), h.alg.power(sx, i));

    auto report = verify_hopf(h);
    if (!report.empty())
        throw ValidationError("Taft construction failed verification: " + report.front());
    return h;
}

HopfAlgebra taft(unsigned n) { return taft(n, cyclotomic_field(n).zeta); }

HopfAlgebra sweedler(const FieldPtr& field) {
    if (field_characteristic(*field) == 2)
        throw ValidationError("the Sweedler algebra requires characteristic != 2");
    return taft(2, FieldScalar::in_field(field, -1));
}

}  // namespace hopfid
