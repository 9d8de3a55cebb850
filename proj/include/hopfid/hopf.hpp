#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfid/scalar.hpp"

namespace hopfid {

// Coordinate vector of an element in the algebra's distinguished basis.
using Coord = std::vector<FieldScalar>;
// Element of the tensor square: t[j][k] = coefficient of x_j (x) x_k.
using TensorSq = std::vector<std::vector<FieldScalar>>;

Coord coord_zero(size_t n, const FieldPtr& field);
void coord_axpy(Coord& acc, const FieldScalar& c, const Coord& v);
bool coord_is_zero(const Coord& v);
std::string coord_str(const Coord& v, const std::vector<std::string>& basis);
std::string tensor_str(const TensorSq& t, const std::vector<std::string>& basis);

// Shared term formatting: "coeff*atom" with 1/-1 folded into the sign and
// non-simple coefficients parenthesized; join_terms renders "a - b + c" or "0".
std::string term_str(const FieldScalar& c, const std::string& atom);
std::string join_terms(const std::vector<std::string>& parts);

// Finite-dimensional associative unital algebra by structure constants:
// mult[i][j] = coordinates of x_i * x_j.
struct FinDimAlgebra {
    FieldPtr field;
    size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<Coord>> mult;
    Coord unit;

    Coord zero_vec() const { return coord_zero(dim, field); }
    Coord basis_vec(size_t i) const;
    std::optional<size_t> basis_index(const std::string& label) const;
    Coord multiply(const Coord& a, const Coord& b) const;
    Coord power(const Coord& a, unsigned e) const;
};

// Sizes of all tables; throws DimensionError if inconsistent.
void check_algebra_shape(const FinDimAlgebra& a);
// Associativity and unit law on all basis triples; one message per violation.
std::vector<std::string> verify_algebra(const FinDimAlgebra& a);

// Hopf algebra: comult[i][j][k] = m^i_{jk} with Delta(x_i) = sum m^i_{jk} x_j (x) x_k,
// counit[i] = eps(x_i), antipode[i] = coordinates of S(x_i).
struct HopfAlgebra {
    FinDimAlgebra alg;
    std::vector<TensorSq> comult;
    Coord counit;
    std::vector<Coord> antipode;

    size_t dim() const { return alg.dim; }
    const FieldPtr& field() const { return alg.field; }
    FieldScalar counit_of(const Coord& v) const;
    Coord antipode_of(const Coord& v) const;
    TensorSq comult_of(const Coord& v) const;
};

// Product in the tensor-square algebra (componentwise legs).
TensorSq tensor_mult(const FinDimAlgebra& a, const TensorSq& s, const TensorSq& t);
TensorSq tensor_zero(size_t n, const FieldPtr& field);

// All violated axioms (empty report = valid Hopf algebra): associativity,
// unit, coassociativity, counit law, Delta/eps multiplicativity, Delta(1),
// and both antipode identities, each naming the basis elements involved.
std::vector<std::string> verify_hopf(const HopfAlgebra& h);

// Entrywise equality of all structure tables (labels ignored).
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

// A finite group as a validated Cayley table.
struct FiniteGroup {
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> table;  // table[i][j] = index of g_i g_j
    size_t identity = 0;
    std::vector<size_t> inverse;

    size_t order() const { return names.size(); }
};

// Validates closure, associativity, identity and inverses; throws
// ValidationError otherwise.
FiniteGroup group_from_table(std::vector<std::string> names,
                             std::vector<std::vector<size_t>> table);
FiniteGroup cyclic_group(size_t n);
FiniteGroup symmetric_group_3();

// k[G]: group-like basis, Delta(g) = g (x) g, S(g) = g^{-1}.
HopfAlgebra group_algebra(const FiniteGroup& g, const FieldPtr& field = rationals());
// Functions on G: pointwise product, Delta(e_g) = sum_{ab=g} e_a (x) e_b.
HopfAlgebra dual_group_algebra(const FiniteGroup& g, const FieldPtr& field = rationals());

// Taft algebra of dimension n^2 over q's field: x^n = 1, y^n = 0, yx = qxy,
// Delta(x) = x(x)x, Delta(y) = 1(x)y + y(x)x; basis x^i y^j ordered by i + n*j.
// q must have multiplicative order exactly n.
HopfAlgebra taft(unsigned n, const FieldScalar& q);
HopfAlgebra taft(unsigned n);  // over cyclotomic_field(n), q = zeta_n

// The 4-dimensional Sweedler algebra: taft(2) with q = -1; basis (1, x, y, xy).
// Requires characteristic != 2.
HopfAlgebra sweedler(const FieldPtr& field = rationals());

}  // namespace hopfid
