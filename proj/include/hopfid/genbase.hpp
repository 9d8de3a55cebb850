#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfid/cocycle.hpp"
#include "hopfid/hopf.hpp"
#include "hopfid/mpoly.hpp"

namespace hopfid {

// The convolution inverse of x -> t_x inside Frac S(t_H): the unique linear
// map with sum t_{x_1} tinv_{x_2} = sum tinv_{x_1} t_{x_2} = eps(x).
struct TInverse {
    HopfAlgebra host;
    PolyRingPtr t_ring;           // polynomial ring on the t-variables
    std::vector<RatFunc> values;  // tinv of each basis element
};

// Solves the n x n system over Frac S(t_H) and verifies both convolution
// identities. Throws ValidationError if the coefficient matrix is singular,
// which cannot happen for a genuine coalgebra.
TInverse t_inverse(const HopfAlgebra& h);

// The generic cocycle attached to (H, alpha):
//   sigma(x,y)     = sum t_{x_1} t_{y_1} alpha(x_2,y_2) tinv_{x_3 y_3}
//   sigma_inv(x,y) = sum t_{x_1 y_1} alpha_inv(x_2,y_2) tinv_{x_3} tinv_{y_3}
// sigma satisfies the cocycle identity over Frac S(t_H) and sigma_inv is its
// convolution inverse, but sigma is not normalized: sigma(1,x) = eps(x) t_1.
struct SigmaTable {
    HopfAlgebra host;
    TwoCocycle alpha;
    PolyRingPtr t_ring;
    std::vector<std::vector<RatFunc>> sigma;
    std::vector<std::vector<RatFunc>> sigma_inv;
};

// Computes both tables (entries in parallel when requested) and verifies the
// cocycle identity, the convolution-inverse law, and that specializing
// t_x -> eps(x) recovers alpha, before returning.
SigmaTable sigma_table(const HopfAlgebra& h, const TwoCocycle& alpha, bool parallel = true);

// Raw table assembly without verification; exposed for the serial/parallel
// equivalence tests and the benchmark.
std::pair<std::vector<std::vector<RatFunc>>, std::vector<std::vector<RatFunc>>>
sigma_entries(const HopfAlgebra& h, const TwoCocycle& alpha, const TInverse& ti, bool parallel);

// Violations of the SigmaTable invariants; empty for tables built by
// sigma_table.
std::vector<std::string> verify_sigma(const SigmaTable& s);

// One labeled generator of the generic base algebra.
struct BaseGenerator {
    std::string label;  // "sigma(x,y)" or "sigma^-1(x,y)"
    size_t i, j;
    int exponent;  // +1 for sigma, -1 for sigma_inv
    RatFunc value;
};

// The 2n^2 entries of both tables with exact duplicates removed (first
// occurrence wins, row-major sigma entries before sigma_inv).
std::vector<BaseGenerator> generic_base_generators(const SigmaTable& s);

// "numerator | denominator" with monomials in descending lex order over the
// t-variable registry; the fixed serialization format for sigma tables.
std::string ratfunc_str(const RatFunc& f);

}  // namespace hopfid
