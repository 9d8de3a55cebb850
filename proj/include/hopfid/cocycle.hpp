#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfid/comod.hpp"
#include "hopfid/hopf.hpp"

namespace hopfid {

// A bilinear form H x H -> k as the matrix of values on basis pairs:
// table[i][j] = f(x_i, x_j).
using ScalarTable = std::vector<std::vector<FieldScalar>>;

// Convolution product of bilinear forms on H:
// (f * g)(x, y) = sum f(x_1, y_1) g(x_2, y_2).
ScalarTable convolve(const HopfAlgebra& h, const ScalarTable& f, const ScalarTable& g);

// The convolution unit (x, y) -> eps(x) eps(y).
ScalarTable convolution_unit(const HopfAlgebra& h);

// Solves f * g = unit for g and confirms g * f = unit before returning;
// nullopt when f is not convolution-invertible. Works for arbitrary bilinear
// forms, normalized or not.
std::optional<ScalarTable> convolution_inverse(const HopfAlgebra& h, const ScalarTable& f);

// A normalized convolution-invertible two-cocycle on H, stored with its
// eagerly computed inverse.
struct TwoCocycle {
    HopfAlgebra hopf;
    ScalarTable alpha;
    ScalarTable alpha_inv;
};

// Violated cocycle axioms of a candidate table (empty = valid): the cocycle
// identity sum alpha(x_1, y_1) alpha(x_2 y_2, z) = sum alpha(y_1, z_1)
// alpha(x, y_2 z_2) on all basis triples, and normalization
// alpha(x, 1) = alpha(1, x) = eps(x). Messages name basis elements.
std::vector<std::string> verify_cocycle(const HopfAlgebra& h, const ScalarTable& alpha);

// Same checks plus the two-sided convolution inverse stored in c.
std::vector<std::string> verify_cocycle(const TwoCocycle& c);

// Validates alpha and computes its inverse; throws ValidationError when the
// axioms fail or no inverse exists.
TwoCocycle make_cocycle(const HopfAlgebra& h, ScalarTable alpha);

// alpha_0(x, y) = eps(x) eps(y), its own inverse.
TwoCocycle trivial_cocycle(const HopfAlgebra& h);

// A cleft comodule algebra: the twist of H by a cocycle, or a member of the
// four-dimensional family A_{a,b,c} over the Sweedler algebra. The provenance
// fields record which construction produced it.
struct CleftAlgebra {
    ComoduleAlgebra comod;
    std::optional<TwoCocycle> cocycle;               // set by twist()
    std::optional<std::array<FieldScalar, 3>> abc;   // set by sweedler_cleft()
};

// The twisted algebra: basis u_x for x in the basis of H, products
// u_x u_y = sum alpha(x_1, y_1) u_{x_2 y_2}, coaction delta(u_x) = u_{x_1} (x) x_2.
// The result is verified as a comodule algebra; its coinvariants are k u_1.
CleftAlgebra twist(const HopfAlgebra& h, const TwoCocycle& c);

// A_{a,b,c} over the Sweedler algebra: generated by u_x, u_y with
// u_x^2 = a, u_y u_x = b - u_x u_y, u_y^2 = c, basis (u_1, u_x, u_y, u_xy).
// Requires a != 0 and characteristic != 2. Scalars may live in any common
// field, including Frac(Q[a,b,c]) for the generic member.
CleftAlgebra sweedler_cleft(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c);

// The generic member: a, b, c independent indeterminates over Frac(Q[a,b,c]).
CleftAlgebra sweedler_cleft_generic();

// True when the underlying algebra has a one-dimensional center.
bool is_nondegenerate(const CleftAlgebra& a);

}  // namespace hopfid
