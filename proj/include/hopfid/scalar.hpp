#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hopfid/errors.hpp"

namespace hopfid {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;
struct RatFuncRep;

enum class FieldKind { Rational, Prime, Cyclotomic, Fraction };

// A coefficient field: the rationals, a prime field F_p, a cyclotomic
// extension Q(zeta_n), or the fraction field of a polynomial ring.
class Field {
public:
    FieldKind kind = FieldKind::Rational;
    unsigned long p = 0;             // Prime: the characteristic
    unsigned conductor = 0;          // Cyclotomic: n with zeta_n^n = 1
    std::vector<mpq_class> modulus;  // Cyclotomic: Phi_n coefficients, index = power, monic
    PolyRingPtr ring;                // Fraction: the underlying polynomial ring

    bool same(const Field& other) const;
    bool is_finite() const { return kind == FieldKind::Prime; }
    size_t ext_degree() const { return modulus.size() - 1; }
    std::string name() const;
};
using FieldPtr = std::shared_ptr<const Field>;

FieldPtr rationals();
FieldPtr prime_field(unsigned long p);
FieldPtr fraction_field(const PolyRingPtr& ring);

struct PrimeVal {
    unsigned long v = 0;
    bool operator==(const PrimeVal&) const = default;
};
struct CycloVal {
    std::vector<mpq_class> c;  // length = ext_degree of the field, index = power of zeta
};

// An exact element of one of the supported fields. Values are immutable;
// binary operations coerce across compatible fields (rationals embed
// everywhere, a fraction field absorbs its base field) and throw
// FieldMismatchError otherwise.
class FieldScalar {
public:
    FieldScalar();  // rational zero
    static FieldScalar rational(const mpq_class& v);
    static FieldScalar integer(long v);
    static FieldScalar in_field(const FieldPtr& f, long v);
    static FieldScalar zero(const FieldPtr& f) { return in_field(f, 0); }
    static FieldScalar one(const FieldPtr& f) { return in_field(f, 1); }
    static FieldScalar prime_residue(const FieldPtr& f, unsigned long v);
    static FieldScalar cyclotomic(const FieldPtr& f, std::vector<mpq_class> coeffs);
    static FieldScalar fraction(const FieldPtr& f, std::shared_ptr<const RatFuncRep> rep);

    const FieldPtr& field() const { return field_; }
    FieldKind kind() const { return field_->kind; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return kind() == FieldKind::Rational; }

    const mpq_class& rational_value() const;
    unsigned long prime_value() const;
    const std::vector<mpq_class>& cyclo_coeffs() const;
    const std::shared_ptr<const RatFuncRep>& frac_rep() const;

    FieldScalar operator-() const;
    FieldScalar inverse() const;  // throws DivisionByZeroError on zero
    FieldScalar pow(long e) const;
    std::string str() const;

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);
    friend bool operator==(const FieldScalar& a, const FieldScalar& b);
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::variant<mpq_class, PrimeVal, CycloVal, std::shared_ptr<const RatFuncRep>> v_;
    friend void coerce_pair(FieldScalar& a, FieldScalar& b);
};

// Lift s into field f (identity when already there); throws FieldMismatchError
// when no embedding is defined.
FieldScalar coerce_to(const FieldScalar& s, const FieldPtr& f);

struct CyclotomicFieldInfo {
    FieldPtr field;              // plain Q when phi(n) = 1, i.e. n in {1, 2}
    FieldScalar zeta;            // a primitive n-th root of unity in `field`
    unsigned n = 1;
    std::vector<mpq_class> phi;  // Phi_n coefficients, index = power
};

// Q adjoined a primitive n-th root of unity, arithmetic modulo Phi_n computed
// by the recursion x^n - 1 = prod_{d | n} Phi_d.
CyclotomicFieldInfo cyclotomic_field(unsigned n);

// Parses an exact scalar literal: integers, + - * / ^ and parentheses, plus
// the field's named generators ("q" for cyclotomic fields, the ring variables
// for fraction fields). Inverse of FieldScalar::str().
FieldScalar parse_scalar(const std::string& text, const FieldPtr& f);

// 0 for characteristic-zero fields, p for F_p and fraction fields over F_p.
unsigned long field_characteristic(const Field& f);

}  // namespace hopfid
