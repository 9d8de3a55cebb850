#pragma once

#include <map>
#include <vector>

#include "hopfid/scalar.hpp"

namespace hopfid {

// Words over a generator alphabet (indices), and linear combinations of words.
using NCWord = std::vector<unsigned>;
using NCElem = std::map<NCWord, FieldScalar>;

// A rewriting rule lhs -> sum of (coefficient, word). Rules are oriented so
// that each application strictly decreases the (length, lex) order of the word;
// the builders' rule sets are confluent on their stated bases, which the
// structure-constant expansion checks.
struct NCRule {
    NCWord lhs;
    std::vector<std::pair<FieldScalar, NCWord>> rhs;
};

void nc_add(NCElem& acc, const NCWord& w, const FieldScalar& c);

// Fully reduces coeff * w: repeatedly replaces the leftmost occurrence of any
// rule's lhs (first matching rule wins at equal positions).
NCElem nc_reduce(const NCWord& w, const FieldScalar& coeff, const std::vector<NCRule>& rules);
NCElem nc_reduce(const NCElem& e, const std::vector<NCRule>& rules);

// Expands a reduced element in the given basis of irreducible words; throws
// ValidationError if some irreducible word is not a basis word.
std::vector<FieldScalar> nc_expand(const NCElem& e, const std::vector<NCWord>& basis,
                                   const FieldPtr& field);

}  // namespace hopfid
