#include "hopfid/freealg.hpp"

#include <algorithm>

#include "hopfid/errors.hpp"

namespace hopfid {

namespace {

void require_same_host(const FreeElement& a, const FreeElement& b) {
    if (a.host() == b.host()) return;
    // Distinct pointers are fine as long as the hosts agree structurally, so
    // that elements returned by different calls remain interoperable.
    if (!same_structure(*a.host(), *b.host()))
        throw ValidationError("free elements live over different Hopf algebras");
}

}  // namespace

FreeElement::FreeElement(HopfPtr h, unsigned degree_limit) : h_(std::move(h)), limit_(degree_limit) {
    if (!h_) throw ValidationError("free element requires a host Hopf algebra");
}

FreeElement FreeElement::zero(const HopfPtr& h, unsigned limit) { return FreeElement(h, limit); }

FreeElement FreeElement::unit(const HopfPtr& h, unsigned limit) {
    return scalar(h, FieldScalar::one(h->field()), limit);
}

FreeElement FreeElement::scalar(const HopfPtr& h, const FieldScalar& c, unsigned limit) {
    FreeElement e(h, limit);
    e.add_term({}, c);
    return e;
}

FreeElement FreeElement::generator(const HopfPtr& h, const Coord& x, unsigned limit) {
    if (x.size() != h->dim())
        throw DimensionError("coordinate vector size mismatch in generator");
    FreeElement e(h, limit);
    for (size_t i = 0; i < x.size(); ++i) e.add_term({(unsigned)i}, x[i]);
    return e;
}

FreeElement FreeElement::letter(const HopfPtr& h, size_t i, unsigned limit) {
    if (i >= h->dim()) throw DimensionError("basis index out of range in letter");
    FreeElement e(h, limit);
    e.add_term({(unsigned)i}, FieldScalar::one(h->field()));
    return e;
}

unsigned FreeElement::degree() const {
    unsigned d = 0;
    for (const auto& [w, c] : terms_) d = std::max<unsigned>(d, (unsigned)w.size());
    return d;
}

bool FreeElement::is_homogeneous(unsigned r) const {
    for (const auto& [w, c] : terms_)
        if (w.size() != r) return false;
    return true;
}

void FreeElement::add_term(const FreeWord& w, const FieldScalar& c) {
    if (w.size() > limit_)
        throw LimitError("word of degree " + std::to_string(w.size()) +
                         " exceeds the degree limit " + std::to_string(limit_));
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    require_same_host(a, b);
    FreeElement out(a.h_, std::max(a.limit_, b.limit_));
    out.terms_ = a.terms_;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) { return a + (-b); }

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    require_same_host(a, b);
    FreeElement out(a.h_, std::max(a.limit_, b.limit_));
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            FreeWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

FreeElement operator*(const FieldScalar& c, const FreeElement& a) {
    FreeElement out(a.h_, a.limit_);
    for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
    return out;
}

FreeElement FreeElement::operator-() const {
    FreeElement out(h_, limit_);
    for (const auto& [w, c] : terms_) out.add_term(w, -c);
    return out;
}

FreeElement FreeElement::pow(unsigned e) const {
    FreeElement out = unit(h_, limit_);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool operator==(const FreeElement& a, const FreeElement& b) {
    require_same_host(a, b);
    return a.terms_ == b.terms_;
}

std::string FreeElement::str() const {
    const auto& labels = h_->alg.basis;
    std::vector<std::string> parts;
    for (const auto& [w, c] : terms_) {
        std::string atom;
        for (size_t t = 0; t < w.size(); ++t) {
            if (t) atom += "*";
            atom += "X[" + labels[w[t]] + "]";
        }
        parts.push_back(term_str(c, atom));
    }
    return join_terms(parts);
}

std::string TensorWithH::str(const HopfAlgebra& h) const {
    std::vector<std::string> parts;
    for (const auto& [key, c] : terms) {
        std::string atom;
        for (size_t t = 0; t < key.first.size(); ++t) {
            if (t) atom += "*";
            atom += "X[" + h.alg.basis[key.first[t]] + "]";
        }
        if (atom.empty()) atom = "1";
        parts.push_back(term_str(c, atom + "(x)" + h.alg.basis[key.second]));
    }
    return join_terms(parts);
}

TensorWithH coaction_T(const FreeElement& p) {
    const HopfAlgebra& h = *p.host();
    const FieldPtr& field = h.field();
    TensorWithH out;
    for (const auto& [word, coeff] : p.terms()) {
        // Letter-wise legs: accumulate (left word, right H-element) pairs.
        std::map<FreeWord, Coord> acc;
        acc.emplace(FreeWord{}, h.alg.unit);
        for (unsigned letter : word) {
            std::map<FreeWord, Coord> next;
            for (const auto& [w, hv] : acc)
                for (size_t j = 0; j < h.dim(); ++j)
                    for (size_t k = 0; k < h.dim(); ++k) {
                        const FieldScalar& m = h.comult[letter][j][k];
                        if (m.is_zero()) continue;
                        FreeWord w2 = w;
                        w2.push_back((unsigned)j);
                        Coord prod = h.alg.multiply(hv, h.alg.basis_vec(k));
                        auto it = next.find(w2);
                        if (it == next.end())
                            it = next.emplace(w2, coord_zero(h.dim(), field)).first;
                        coord_axpy(it->second, m, prod);
                    }
            acc = std::move(next);
        }
        for (const auto& [w, hv] : acc)
            for (size_t l = 0; l < h.dim(); ++l) {
                if (hv[l].is_zero()) continue;
                auto key = std::make_pair(w, l);
                auto it = out.terms.try_emplace(key, FieldScalar::zero(field)).first;
                it->second += coeff * hv[l];
                if (it->second.is_zero()) out.terms.erase(it);
            }
    }
    return out;
}

std::vector<std::pair<unsigned, FreeElement>> homogeneous_components(const FreeElement& p) {
    std::map<unsigned, FreeElement> buckets;
    for (const auto& [w, c] : p.terms()) {
        auto it = buckets.find((unsigned)w.size());
        if (it == buckets.end())
            it = buckets.emplace((unsigned)w.size(), FreeElement(p.host(), p.degree_limit())).first;
        it->second.add_term(w, c);
    }
    return {buckets.begin(), buckets.end()};
}

bool is_coinvariant(const FreeElement& p) {
    const HopfAlgebra& h = *p.host();
    TensorWithH expected;
    for (const auto& [w, c] : p.terms())
        for (size_t l = 0; l < h.dim(); ++l) {
            if (h.alg.unit[l].is_zero()) continue;
            expected.terms.emplace(std::make_pair(w, l), c * h.alg.unit[l]);
        }
    return coaction_T(p) == expected;
}

FreeElement p_element(const HopfPtr& h, const Coord& x) {
    TensorSq dx = h->comult_of(x);
    FreeElement out(h);
    for (size_t j = 0; j < h->dim(); ++j)
        for (size_t k = 0; k < h->dim(); ++k) {
            if (dx[j][k].is_zero()) continue;
            out = out + dx[j][k] * (FreeElement::letter(h, j) *
                                    FreeElement::generator(h, h->antipode[k]));
        }
    return out;
}

FreeElement q_element(const HopfPtr& h, const Coord& x, const Coord& y) {
    TensorSq dx = h->comult_of(x);
    TensorSq dy = h->comult_of(y);
    FreeElement out(h);
    for (size_t j = 0; j < h->dim(); ++j)
        for (size_t k = 0; k < h->dim(); ++k) {
            if (dx[j][k].is_zero()) continue;
            for (size_t u = 0; u < h->dim(); ++u)
                for (size_t v = 0; v < h->dim(); ++v) {
                    if (dy[u][v].is_zero()) continue;
                    Coord tail = h->antipode_of(h->alg.mult[k][v]);
                    out = out + (dx[j][k] * dy[u][v]) *
                                    (FreeElement::letter(h, j) * FreeElement::letter(h, u) *
                                     FreeElement::generator(h, tail));
                }
        }
    return out;
}

}  // namespace hopfid
