#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfid/hopf.hpp"

namespace hopfid {

using HopfPtr = std::shared_ptr<const HopfAlgebra>;
// A word X_{x_{i_1}} ... X_{x_{i_r}} over basis indices of H; empty = 1.
using FreeWord = std::vector<unsigned>;

// Element of the tensor algebra T(X_H) on the coalgebra underlying H: a sparse
// combination of words. X_x X_y and X_{xy} are distinct by construction (words
// never merge letters). Word length is capped by a per-element degree limit
// since T^r grows as (dim H)^r; exceeding it throws LimitError.
class FreeElement {
public:
    static constexpr unsigned kDefaultDegreeLimit = 8;

    explicit FreeElement(HopfPtr h, unsigned degree_limit = kDefaultDegreeLimit);
    static FreeElement zero(const HopfPtr& h, unsigned limit = kDefaultDegreeLimit);
    static FreeElement unit(const HopfPtr& h, unsigned limit = kDefaultDegreeLimit);
    static FreeElement scalar(const HopfPtr& h, const FieldScalar& c,
                              unsigned limit = kDefaultDegreeLimit);
    // X_x for x given by coordinates, expanded by linearity over basis letters.
    static FreeElement generator(const HopfPtr& h, const Coord& x,
                                 unsigned limit = kDefaultDegreeLimit);
    // X_{x_i} for a single basis element.
    static FreeElement letter(const HopfPtr& h, size_t i,
                              unsigned limit = kDefaultDegreeLimit);

    const HopfPtr& host() const { return h_; }
    unsigned degree_limit() const { return limit_; }
    const std::map<FreeWord, FieldScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;  // longest stored word, 0 for the zero element
    bool is_homogeneous(unsigned r) const;

    void add_term(const FreeWord& w, const FieldScalar& c);

    friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(const FieldScalar& c, const FreeElement& a);
    friend FreeElement operator*(const FreeElement& a, const FieldScalar& c) { return c * a; }
    FreeElement operator-() const;
    FreeElement pow(unsigned e) const;
    friend bool operator==(const FreeElement& a, const FreeElement& b);
    friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

    // Renders in the expression grammar: "2*X[x]*X[y] - X[xy]".
    std::string str() const;

private:
    HopfPtr h_;
    unsigned limit_ = kDefaultDegreeLimit;
    std::map<FreeWord, FieldScalar> terms_;
};

// Element of T(X_H) (x) H: sparse (word, H-basis index) -> coefficient.
struct TensorWithH {
    std::map<std::pair<FreeWord, size_t>, FieldScalar> terms;

    bool operator==(const TensorWithH& o) const { return terms == o.terms; }
    bool operator!=(const TensorWithH& o) const { return !(*this == o); }
    std::string str(const HopfAlgebra& h) const;
};

// The coaction delta: X_x -> X_{x_1} (x) x_2, extended as an algebra map; it
// preserves the grading T^r(X_H) (x) H.
TensorWithH coaction_T(const FreeElement& p);

// Splits into word-length components; degrees strictly increasing, sum = p.
std::vector<std::pair<unsigned, FreeElement>> homogeneous_components(const FreeElement& p);

// True iff delta(p) = p (x) 1.
bool is_coinvariant(const FreeElement& p);

// The standard coinvariants P_x = X_{x_1} X_{S(x_2)} and
// Q_{x,y} = X_{x_1} X_{y_1} X_{S(x_2 y_2)}.
FreeElement p_element(const HopfPtr& h, const Coord& x);
FreeElement q_element(const HopfPtr& h, const Coord& x, const Coord& y);

}  // namespace hopfid
