#include "hopfid/mpoly.hpp"

#include <algorithm>

namespace hopfid {

// ---- PolyRing ----

PolyRingPtr PolyRing::make(FieldPtr base, std::vector<std::string> vars) {
    if (base->kind == FieldKind::Fraction)
        throw ValidationError("polynomial rings over fraction fields are not supported");
    auto ring = std::shared_ptr<PolyRing>(new PolyRing());
    ring->base_ = std::move(base);
    ring->vars_ = std::move(vars);
    for (size_t i = 0; i < ring->vars_.size(); ++i) {
        const std::string& v = ring->vars_[i];
        if (v.empty()) throw ValidationError("empty variable name");
        if (!ring->index_.emplace(v, i).second)
            throw ValidationError("duplicate variable name '" + v + "'");
    }
    return ring;
}

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool PolyRing::same(const PolyRing& o) const {
    return base_->same(*o.base_) && vars_ == o.vars_;
}

std::string PolyRing::name() const {
    std::string s = base_->name() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

// ---- MPoly ----

MPoly::MPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}

MPoly MPoly::constant(const PolyRingPtr& ring, const FieldScalar& c) {
    MPoly p(ring);
    FieldScalar v = coerce_to(c, ring->base());
    if (!v.is_zero()) p.terms_.emplace(Exponents(ring->arity(), 0), std::move(v));
    return p;
}

MPoly MPoly::constant(const PolyRingPtr& ring, long c) {
    return constant(ring, FieldScalar::in_field(ring->base(), c));
}

MPoly MPoly::variable(const PolyRingPtr& ring, size_t idx) {
    if (idx >= ring->arity()) throw DimensionError("variable index out of range");
    MPoly p(ring);
    Exponents e(ring->arity(), 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), FieldScalar::one(ring->base()));
    return p;
}

MPoly MPoly::variable(const PolyRingPtr& ring, const std::string& name) {
    auto idx = ring->var_index(name);
    if (!idx) throw ValidationError("unknown variable '" + name + "' in " + ring->name());
    return variable(ring, *idx);
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

FieldScalar MPoly::constant_term() const {
    Exponents zero(ring_->arity(), 0);
    auto it = terms_.find(zero);
    if (it == terms_.end()) return FieldScalar::zero(ring_->base());
    return it->second;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::pair<Exponents, FieldScalar> MPoly::leading() const {
    if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void MPoly::add_term(const Exponents& e, const FieldScalar& c) {
    if (e.size() != ring_->arity()) throw DimensionError("exponent vector has wrong length");
    FieldScalar v = coerce_to(c, ring_->base());
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (!a.ring_->same(*b.ring_)) throw FieldMismatchError("polynomials over different rings");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (!a.ring_->same(*b.ring_)) throw FieldMismatchError("polynomials over different rings");
    MPoly r(a.ring_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly operator*(const MPoly& a, const FieldScalar& c0) {
    FieldScalar c = coerce_to(c0, a.ring_->base());
    MPoly r(a.ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.terms_) {
        FieldScalar w = v * c;
        if (!w.is_zero()) r.terms_.emplace(e, std::move(w));
    }
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = constant(ring_, 1);
    MPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MPoly::operator==(const MPoly& o) const {
    if (!ring_->same(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

bool MPoly::divides_exactly(const MPoly& divisor, MPoly* quotient) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    MPoly q(ring_);
    MPoly r = *this;
    auto [de, dc] = divisor.leading();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading();
        Exponents qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < de[i]) return false;
            qe[i] = re[i] - de[i];
        }
        FieldScalar qc = rc / dc;
        MPoly t(ring_);
        t.terms_.emplace(qe, qc);
        q = q + t;
        r = r - t * divisor;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

MPoly MPoly::divexact(const MPoly& divisor) const {
    MPoly q(ring_);
    if (!divides_exactly(divisor, &q))
        throw ValidationError("inexact polynomial division");
    return q;
}

FieldScalar MPoly::eval(const std::vector<FieldScalar>& values) const {
    if (values.size() != ring_->arity())
        throw DimensionError("evaluation point has wrong arity");
    FieldScalar acc = FieldScalar::integer(0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        FieldScalar t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= values[i].pow((long)e[i]);
        if (first) {
            acc = t;
            first = false;
        } else {
            acc += t;
        }
    }
    return acc;
}

namespace {
bool simple_coeff(const std::string& s) { return s.find(' ') == std::string::npos; }
}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        std::string vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->vars()[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        std::string coef = it->second.str();
        std::string term;
        if (vars.empty())
            term = simple_coeff(coef) ? coef : "(" + coef + ")";
        else if (coef == "1")
            term = vars;
        else if (coef == "-1")
            term = "-" + vars;
        else if (simple_coeff(coef))
            term = coef + "*" + vars;
        else
            term = "(" + coef + ")*" + vars;
        parts.push_back(std::move(term));
    }
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

// ---- RatFunc ----

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(num_.ring()) {
    den_ = MPoly::constant(num_.ring(), 1);
}

namespace {

// Componentwise-min exponent vector over all terms; requires a nonzero input.
Exponents monomial_content(const MPoly& p) {
    auto it = p.terms().begin();
    Exponents m = it->first;
    for (++it; it != p.terms().end(); ++it)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], it->first[i]);
    return m;
}

MPoly divide_by_monomial(const MPoly& p, const Exponents& m) {
    MPoly out(p.ring());
    for (const auto& [e, c] : p.terms()) {
        Exponents shifted = e;
        for (size_t i = 0; i < m.size(); ++i) shifted[i] -= m[i];
        out.add_term(shifted, c);
    }
    return out;
}

}  // namespace

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (!num_.ring()->same(*den_.ring()))
        throw FieldMismatchError("numerator and denominator over different rings");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.ring(), 1);
        return;
    }
    Exponents cn = monomial_content(num_), cd = monomial_content(den_);
    bool any = false;
    for (size_t i = 0; i < cn.size(); ++i) {
        cn[i] = std::min(cn[i], cd[i]);
        any = any || cn[i] > 0;
    }
    if (any) {
        num_ = divide_by_monomial(num_, cn);
        den_ = divide_by_monomial(den_, cn);
    }
    FieldScalar lc = den_.leading().second;
    if (!lc.is_one()) {
        FieldScalar inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RatFunc::is_poly() const {
    return den_.is_constant() && den_.constant_term().is_one();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    // Normalized representations make structurally equal denominators common;
    // adding numerators directly avoids squaring the denominator.
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

FieldScalar RatFunc::eval(const std::vector<FieldScalar>& values) const {
    FieldScalar d = den_.eval(values);
    if (d.is_zero())
        throw DivisionByZeroError("denominator vanishes at the evaluation point");
    return num_.eval(values) / d;
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---- FieldScalar bridge ----

FieldPtr fraction_field(const PolyRingPtr& ring) {
    auto f = std::make_shared<Field>();
    f->kind = FieldKind::Fraction;
    f->ring = ring;
    return f;
}

FieldScalar to_scalar(const FieldPtr& frac_field, const RatFunc& f) {
    if (frac_field->kind != FieldKind::Fraction || !frac_field->ring->same(*f.ring()))
        throw FieldMismatchError("rational function does not belong to " + frac_field->name());
    return FieldScalar::fraction(frac_field, std::make_shared<RatFuncRep>(RatFuncRep{f}));
}

FieldScalar to_scalar(const FieldPtr& frac_field, const MPoly& p) {
    return to_scalar(frac_field, RatFunc(p));
}

const RatFunc& as_ratfunc(const FieldScalar& s) {
    if (s.kind() != FieldKind::Fraction)
        throw FieldMismatchError("scalar is not a rational function");
    return s.frac_rep()->f;
}

MPoly embed(const MPoly& p, const PolyRingPtr& target) {
    const PolyRingPtr& src = p.ring();
    if (src->same(*target)) return p;
    if (!src->base()->same(*target->base()))
        throw FieldMismatchError("cannot embed " + src->name() + " into " + target->name());
    std::vector<size_t> where(src->arity());
    for (size_t i = 0; i < src->arity(); ++i) {
        auto idx = target->var_index(src->vars()[i]);
        if (!idx)
            throw FieldMismatchError("variable " + src->vars()[i] + " is missing in " +
                                     target->name());
        where[i] = *idx;
    }
    MPoly out(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents big(target->arity(), 0);
        for (size_t i = 0; i < e.size(); ++i) big[where[i]] = e[i];
        out.add_term(big, c);
    }
    return out;
}

RatFunc embed(const RatFunc& f, const PolyRingPtr& target) {
    return RatFunc(embed(f.num(), target), embed(f.den(), target));
}

}  // namespace hopfid
