#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfid/scalar.hpp"

namespace hopfid {

// An ordered registry of named commuting indeterminates over a base field
// (rational, prime, or cyclotomic; fraction fields do not nest).
class PolyRing {
public:
    static PolyRingPtr make(FieldPtr base, std::vector<std::string> vars);
    const FieldPtr& base() const { return base_; }
    const std::vector<std::string>& vars() const { return vars_; }
    size_t arity() const { return vars_.size(); }
    std::optional<size_t> var_index(const std::string& name) const;
    bool same(const PolyRing& o) const;
    std::string name() const;

private:
    PolyRing() = default;
    FieldPtr base_;
    std::vector<std::string> vars_;
    std::map<std::string, size_t> index_;
};

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
// The zero polynomial stores no terms. Term order is lex on exponent vectors;
// "leading" means lex-greatest.
class MPoly {
public:
    explicit MPoly(PolyRingPtr ring);
    static MPoly constant(const PolyRingPtr& ring, const FieldScalar& c);
    static MPoly constant(const PolyRingPtr& ring, long c);
    static MPoly variable(const PolyRingPtr& ring, size_t idx);
    static MPoly variable(const PolyRingPtr& ring, const std::string& name);

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<Exponents, FieldScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldScalar constant_term() const;  // coefficient of the unit monomial
    size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;  // 0 for the zero polynomial
    std::pair<Exponents, FieldScalar> leading() const;  // requires nonzero

    void add_term(const Exponents& e, const FieldScalar& c);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const FieldScalar& c);
    friend MPoly operator*(const FieldScalar& c, const MPoly& a) { return a * c; }
    MPoly operator-() const;
    MPoly pow(unsigned e) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Exact division; divides_exactly reports failure, divexact throws
    // ValidationError. Used by fraction-free elimination, where exactness is
    // guaranteed by the determinant identity.
    bool divides_exactly(const MPoly& divisor, MPoly* quotient) const;
    MPoly divexact(const MPoly& divisor) const;

    FieldScalar eval(const std::vector<FieldScalar>& values) const;
    std::string str() const;

private:
    PolyRingPtr ring_;
    std::map<Exponents, FieldScalar> terms_;
};

// Quotient of two MPoly over the same ring. Never reduced by polynomial gcd:
// normalization cancels the common monomial content, makes the denominator
// monic (leading coefficient 1), and represents 0 as 0/1. Equality is
// cross-multiplication.
class RatFunc {
public:
    explicit RatFunc(MPoly num);
    RatFunc(MPoly num, MPoly den);  // throws DivisionByZeroError if den == 0
    static RatFunc zero(const PolyRingPtr& ring) { return RatFunc(MPoly(ring)); }
    static RatFunc one(const PolyRingPtr& ring) { return RatFunc(MPoly::constant(ring, 1)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const PolyRingPtr& ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const;  // denominator == 1

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    FieldScalar eval(const std::vector<FieldScalar>& values) const;
    std::string str() const;

private:
    MPoly num_;
    MPoly den_;
};

struct RatFuncRep {
    RatFunc f;
};

// Bridges between RatFunc and FieldScalar of a Fraction field.
FieldScalar to_scalar(const FieldPtr& frac_field, const RatFunc& f);
FieldScalar to_scalar(const FieldPtr& frac_field, const MPoly& p);
const RatFunc& as_ratfunc(const FieldScalar& s);

// Re-expresses a polynomial or rational function in a ring that contains all
// of its variables by name (same base field). Throws FieldMismatchError when
// a variable or the base field is missing in the target.
MPoly embed(const MPoly& p, const PolyRingPtr& target);
RatFunc embed(const RatFunc& f, const PolyRingPtr& target);

}  // namespace hopfid
