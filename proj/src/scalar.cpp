#include "hopfid/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "hopfid/mpoly.hpp"

namespace hopfid {

namespace {

// ---- dense univariate polynomials over Q, used for cyclotomic arithmetic ----

using QPoly = std::vector<mpq_class>;  // index = power of x

void qp_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_trim(r);
    return r;
}

std::pair<QPoly, QPoly> qp_divmod(QPoly f, const QPoly& d) {
    qp_trim(f);
    QPoly q;
    if (f.size() >= d.size()) q.assign(f.size() - d.size() + 1, mpq_class(0));
    while (f.size() >= d.size() && !f.empty()) {
        mpq_class c = f.back() / d.back();
        size_t k = f.size() - d.size();
        q[k] = c;
        for (size_t i = 0; i < d.size(); ++i) f[k + i] -= c * d[i];
        qp_trim(f);
    }
    qp_trim(q);
    return {q, f};
}

QPoly qp_rem(const QPoly& f, const QPoly& m) { return qp_divmod(f, m).second; }

// Bezout inverse of a modulo the monic irreducible m.
QPoly qp_modinv(QPoly a, const QPoly& m) {
    qp_trim(a);
    QPoly r0 = m, r1 = a;
    QPoly s0, s1 = {mpq_class(1)};
    while (!r1.empty()) {
        auto [q, rem] = qp_divmod(r0, r1);
        r0 = r1;
        r1 = rem;
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1)
        throw DivisionByZeroError("no inverse modulo the cyclotomic polynomial");
    QPoly inv = qp_rem(s0, m);
    for (auto& c : inv) c /= r0[0];
    return inv;
}

// Phi_n by the recursion x^n - 1 = prod_{d | n} Phi_d, memoized.
const QPoly& cyclo_poly(unsigned n) {
    static std::map<unsigned, QPoly> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::function<const QPoly&(unsigned)> get = [&](unsigned k) -> const QPoly& {
        auto jt = memo.find(k);
        if (jt != memo.end()) return jt->second;
        QPoly f(k + 1, mpq_class(0));
        f[0] = -1;
        f[k] = 1;  // x^k - 1
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) f = qp_divmod(f, get(d)).first;
        return memo.emplace(k, std::move(f)).first->second;
    };
    return get(n);
}

// ---- prime-field helpers (p < 2^62) ----

unsigned long addm(unsigned long a, unsigned long b, unsigned long p) {
    unsigned long s = a + b;
    return s >= p ? s - p : s;
}
unsigned long mulm(unsigned long a, unsigned long b, unsigned long p) {
    return (unsigned long)((unsigned __int128)a * b % p);
}
unsigned long invm(unsigned long a, unsigned long p) {
    if (a == 0) throw DivisionByZeroError("inverse of 0 in F_p");
    __int128 t = 0, newt = 1;
    __int128 r = (__int128)p, newr = (__int128)a;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return (unsigned long)t;
}

std::string qpoly_str(const std::vector<mpq_class>& c, const std::string& var) {
    std::vector<std::string> parts;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        std::string coef = c[k].get_str();
        std::string term;
        if (k == 0) {
            term = coef;
        } else {
            std::string v = (k == 1) ? var : var + "^" + std::to_string(k);
            if (coef == "1")
                term = v;
            else if (coef == "-1")
                term = "-" + v;
            else
                term = coef + "*" + v;
        }
        parts.push_back(term);
    }
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

}  // namespace

// ---- Field ----

bool Field::same(const Field& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case FieldKind::Rational: return true;
        case FieldKind::Prime: return p == other.p;
        case FieldKind::Cyclotomic: return conductor == other.conductor;
        case FieldKind::Fraction: return ring->same(*other.ring);
    }
    return false;
}

std::string Field::name() const {
    switch (kind) {
        case FieldKind::Rational: return "QQ";
        case FieldKind::Prime: return "GF(" + std::to_string(p) + ")";
        case FieldKind::Cyclotomic: return "QQ(zeta_" + std::to_string(conductor) + ")";
        case FieldKind::Fraction: return "Frac(" + ring->name() + ")";
    }
    return "?";
}

FieldPtr rationals() {
    static FieldPtr f = std::make_shared<Field>(Field{FieldKind::Rational, 0, 0, {}, nullptr});
    return f;
}

FieldPtr prime_field(unsigned long p) {
    if (p < 2 || p > (1UL << 62))
        throw ValidationError("prime field characteristic out of range: " + std::to_string(p));
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw ValidationError(std::to_string(p) + " is not prime");
    static std::map<unsigned long, FieldPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<Field>(Field{FieldKind::Prime, p, 0, {}, nullptr});
    cache.emplace(p, f);
    return f;
}

CyclotomicFieldInfo cyclotomic_field(unsigned n) {
    if (n < 1) throw ValidationError("cyclotomic conductor must be >= 1");
    QPoly phi = cyclo_poly(n);
    CyclotomicFieldInfo info;
    info.n = n;
    info.phi = phi;
    if (phi.size() == 2) {  // Phi_n = x +- 1, the field is Q itself
        info.field = rationals();
        info.zeta = FieldScalar::rational(-phi[0]);
        return info;
    }
    static std::map<unsigned, FieldPtr> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it == cache.end()) {
            auto f = std::make_shared<Field>(Field{FieldKind::Cyclotomic, 0, n, phi, nullptr});
            it = cache.emplace(n, f).first;
        }
        info.field = it->second;
    }
    std::vector<mpq_class> z(info.field->ext_degree(), mpq_class(0));
    z[1] = 1;
    info.zeta = FieldScalar::cyclotomic(info.field, std::move(z));
    return info;
}

// ---- FieldScalar ----

FieldScalar::FieldScalar() : field_(rationals()), v_(mpq_class(0)) {}

FieldScalar FieldScalar::rational(const mpq_class& v) {
    FieldScalar s;
    mpq_class c = v;
    c.canonicalize();
    s.v_ = std::move(c);
    return s;
}

FieldScalar FieldScalar::integer(long v) { return rational(mpq_class(v)); }

FieldScalar FieldScalar::prime_residue(const FieldPtr& f, unsigned long v) {
    FieldScalar s;
    s.field_ = f;
    s.v_ = PrimeVal{v % f->p};
    return s;
}

FieldScalar FieldScalar::cyclotomic(const FieldPtr& f, std::vector<mpq_class> coeffs) {
    if (coeffs.size() != f->ext_degree())
        throw DimensionError("cyclotomic coefficient vector has wrong length");
    FieldScalar s;
    s.field_ = f;
    s.v_ = CycloVal{std::move(coeffs)};
    return s;
}

FieldScalar FieldScalar::fraction(const FieldPtr& f, std::shared_ptr<const RatFuncRep> rep) {
    FieldScalar s;
    s.field_ = f;
    s.v_ = std::move(rep);
    return s;
}

FieldScalar FieldScalar::in_field(const FieldPtr& f, long v) {
    switch (f->kind) {
        case FieldKind::Rational: return integer(v);
        case FieldKind::Prime: {
            long long r = (long long)v % (long long)f->p;
            if (r < 0) r += (long long)f->p;
            return prime_residue(f, (unsigned long)r);
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c(f->ext_degree(), mpq_class(0));
            c[0] = v;
            return cyclotomic(f, std::move(c));
        }
        case FieldKind::Fraction:
            return to_scalar(f, MPoly::constant(f->ring, v));
    }
    throw ValidationError("unknown field kind");
}

const mpq_class& FieldScalar::rational_value() const { return std::get<mpq_class>(v_); }
unsigned long FieldScalar::prime_value() const { return std::get<PrimeVal>(v_).v; }
const std::vector<mpq_class>& FieldScalar::cyclo_coeffs() const {
    return std::get<CycloVal>(v_).c;
}
const std::shared_ptr<const RatFuncRep>& FieldScalar::frac_rep() const {
    return std::get<std::shared_ptr<const RatFuncRep>>(v_);
}

bool FieldScalar::is_zero() const {
    switch (kind()) {
        case FieldKind::Rational: return rational_value() == 0;
        case FieldKind::Prime: return prime_value() == 0;
        case FieldKind::Cyclotomic:
            for (const auto& c : cyclo_coeffs())
                if (c != 0) return false;
            return true;
        case FieldKind::Fraction: return frac_rep()->f.is_zero();
    }
    return false;
}

bool FieldScalar::is_one() const {
    switch (kind()) {
        case FieldKind::Rational: return rational_value() == 1;
        case FieldKind::Prime: return prime_value() == 1;
        case FieldKind::Cyclotomic: {
            const auto& c = cyclo_coeffs();
            if (c[0] != 1) return false;
            for (size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
            return true;
        }
        case FieldKind::Fraction: return frac_rep()->f.num() == frac_rep()->f.den();
    }
    return false;
}

FieldScalar coerce_to(const FieldScalar& s, const FieldPtr& f) {
    if (s.field()->same(*f)) return s;
    if (s.kind() == FieldKind::Rational) {
        const mpq_class& r = s.rational_value();
        switch (f->kind) {
            case FieldKind::Prime: {
                mpz_class num = r.get_num() % (long)f->p;
                mpz_class den = r.get_den() % (long)f->p;
                long long n = num.get_si();
                if (n < 0) n += (long long)f->p;
                long long d = den.get_si();
                if (d == 0)
                    throw DivisionByZeroError("denominator divisible by the characteristic");
                return FieldScalar::prime_residue(
                    f, mulm((unsigned long)n, invm((unsigned long)d, f->p), f->p));
            }
            case FieldKind::Cyclotomic: {
                std::vector<mpq_class> c(f->ext_degree(), mpq_class(0));
                c[0] = r;
                return FieldScalar::cyclotomic(f, std::move(c));
            }
            case FieldKind::Fraction:
                return to_scalar(
                    f, MPoly::constant(f->ring, coerce_to(s, f->ring->base())));
            default: break;
        }
    }
    if (f->kind == FieldKind::Fraction && s.field()->same(*f->ring->base()))
        return to_scalar(f, MPoly::constant(f->ring, s));
    throw FieldMismatchError("cannot coerce " + s.field()->name() + " into " + f->name());
}

void coerce_pair(FieldScalar& a, FieldScalar& b) {
    if (a.field_->same(*b.field_)) return;
    if (a.kind() == FieldKind::Rational) {
        a = coerce_to(a, b.field_);
        return;
    }
    if (b.kind() == FieldKind::Rational) {
        b = coerce_to(b, a.field_);
        return;
    }
    if (a.kind() == FieldKind::Fraction && b.field_->same(*a.field_->ring->base())) {
        b = coerce_to(b, a.field_);
        return;
    }
    if (b.kind() == FieldKind::Fraction && a.field_->same(*b.field_->ring->base())) {
        a = coerce_to(a, b.field_);
        return;
    }
    throw FieldMismatchError("incompatible fields " + a.field_->name() + " and " +
                             b.field_->name());
}

FieldScalar operator+(const FieldScalar& a0, const FieldScalar& b0) {
    FieldScalar a = a0, b = b0;
    coerce_pair(a, b);
    switch (a.kind()) {
        case FieldKind::Rational:
            return FieldScalar::rational(a.rational_value() + b.rational_value());
        case FieldKind::Prime:
            return FieldScalar::prime_residue(
                a.field(), addm(a.prime_value(), b.prime_value(), a.field()->p));
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c = a.cyclo_coeffs();
            const auto& d = b.cyclo_coeffs();
            for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            return FieldScalar::cyclotomic(a.field(), std::move(c));
        }
        case FieldKind::Fraction:
            return to_scalar(a.field(), a.frac_rep()->f + b.frac_rep()->f);
    }
    throw ValidationError("unknown field kind");
}

FieldScalar FieldScalar::operator-() const {
    switch (kind()) {
        case FieldKind::Rational: return rational(-rational_value());
        case FieldKind::Prime: {
            unsigned long v = prime_value();
            return prime_residue(field_, v == 0 ? 0 : field_->p - v);
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c = cyclo_coeffs();
            for (auto& x : c) x = -x;
            return cyclotomic(field_, std::move(c));
        }
        case FieldKind::Fraction: return to_scalar(field_, -frac_rep()->f);
    }
    throw ValidationError("unknown field kind");
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }

FieldScalar operator*(const FieldScalar& a0, const FieldScalar& b0) {
    FieldScalar a = a0, b = b0;
    coerce_pair(a, b);
    switch (a.kind()) {
        case FieldKind::Rational:
            return FieldScalar::rational(a.rational_value() * b.rational_value());
        case FieldKind::Prime:
            return FieldScalar::prime_residue(
                a.field(), mulm(a.prime_value(), b.prime_value(), a.field()->p));
        case FieldKind::Cyclotomic: {
            QPoly prod = qp_mul(a.cyclo_coeffs(), b.cyclo_coeffs());
            QPoly red = qp_rem(prod, a.field()->modulus);
            red.resize(a.field()->ext_degree(), mpq_class(0));
            return FieldScalar::cyclotomic(a.field(), std::move(red));
        }
        case FieldKind::Fraction:
            return to_scalar(a.field(), a.frac_rep()->f * b.frac_rep()->f);
    }
    throw ValidationError("unknown field kind");
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_->name());
    switch (kind()) {
        case FieldKind::Rational: return rational(1 / rational_value());
        case FieldKind::Prime:
            return prime_residue(field_, invm(prime_value(), field_->p));
        case FieldKind::Cyclotomic: {
            QPoly inv = qp_modinv(cyclo_coeffs(), field_->modulus);
            inv.resize(field_->ext_degree(), mpq_class(0));
            return cyclotomic(field_, std::move(inv));
        }
        case FieldKind::Fraction: return to_scalar(field_, frac_rep()->f.inverse());
    }
    throw ValidationError("unknown field kind");
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by zero in " + b.field()->name());
    return a * b.inverse();
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) { return *this = *this + o; }
FieldScalar& FieldScalar::operator-=(const FieldScalar& o) { return *this = *this - o; }
FieldScalar& FieldScalar::operator*=(const FieldScalar& o) { return *this = *this * o; }
FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this = *this / o; }

FieldScalar FieldScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar acc = one(field_);
    FieldScalar base = *this;
    unsigned long k = (unsigned long)e;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const FieldScalar& a0, const FieldScalar& b0) {
    FieldScalar a = a0, b = b0;
    coerce_pair(a, b);
    switch (a.kind()) {
        case FieldKind::Rational: return a.rational_value() == b.rational_value();
        case FieldKind::Prime: return a.prime_value() == b.prime_value();
        case FieldKind::Cyclotomic: return a.cyclo_coeffs() == b.cyclo_coeffs();
        case FieldKind::Fraction: return a.frac_rep()->f == b.frac_rep()->f;
    }
    return false;
}

std::string FieldScalar::str() const {
    switch (kind()) {
        case FieldKind::Rational: return rational_value().get_str();
        case FieldKind::Prime: return std::to_string(prime_value());
        case FieldKind::Cyclotomic: return qpoly_str(cyclo_coeffs(), "q");
        case FieldKind::Fraction: return frac_rep()->f.str();
    }
    return "?";
}

// ---- scalar literal parser ----

namespace {

struct ScalarParser {
    const std::string& s;
    const FieldPtr& f;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text, const FieldPtr& field) : s(text), f(field) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, (int)pos + 1);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    FieldScalar parse() {
        FieldScalar v = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input in scalar literal");
        return v;
    }

    FieldScalar expr() {
        FieldScalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    FieldScalar term() {
        FieldScalar v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }

    FieldScalar factor() {
        if (eat('-')) return -factor();
        FieldScalar v = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer_literal();
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    long integer_literal() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer exponent");
        return std::stol(s.substr(start, pos - start));
    }

    FieldScalar atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of scalar literal");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldScalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            mpz_class z(s.substr(start, pos - start));
            return coerce_to(FieldScalar::rational(mpq_class(z)), f);
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (f->kind == FieldKind::Cyclotomic && name == "q") {
                std::vector<mpq_class> z(f->ext_degree(), mpq_class(0));
                z[1] = 1;
                return FieldScalar::cyclotomic(f, std::move(z));
            }
            if (f->kind == FieldKind::Fraction) {
                auto idx = f->ring->var_index(name);
                if (idx) return to_scalar(f, MPoly::variable(f->ring, *idx));
            }
            fail("unknown symbol '" + name + "' in " + f->name());
        }
        fail(std::string("unexpected character '") + c + "' in scalar literal");
    }
};

}  // namespace

FieldScalar parse_scalar(const std::string& text, const FieldPtr& f) {
    return ScalarParser(text, f).parse();
}

unsigned long field_characteristic(const Field& f) {
    if (f.kind == FieldKind::Prime) return f.p;
    if (f.kind == FieldKind::Fraction) return field_characteristic(*f.ring->base());
    return 0;
}

}  // namespace hopfid
