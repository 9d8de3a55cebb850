#pragma once

#include <string>
#include <vector>

#include "hopfid/hopf.hpp"

namespace hopfid {

// coaction[i][j][k] = d^i_{jk} with delta(a_i) = sum d^i_{jk} a_j (x) x_k.
using CoactionTable = std::vector<std::vector<std::vector<FieldScalar>>>;

// A finite-dimensional right H-comodule algebra by structure constants.
struct ComoduleAlgebra {
    FinDimAlgebra alg;  // A, dimension m
    HopfAlgebra hopf;   // H, dimension n
    CoactionTable coaction;

    size_t adim() const { return alg.dim; }
    size_t hdim() const { return hopf.dim(); }
    const FieldPtr& field() const { return alg.field; }
    // delta applied to a coordinate vector, as an m x n matrix over (A, H) bases.
    std::vector<std::vector<FieldScalar>> coact(const Coord& a) const;
};

// Violated comodule-algebra axioms (empty = valid): coassociativity and counit
// law of the coaction, delta multiplicative, delta(1) = 1 (x) 1, plus the
// underlying algebra's axioms.
std::vector<std::string> verify_comodule_algebra(const ComoduleAlgebra& a);

// Echelon-normalized basis of A^H = {a : delta(a) = a (x) 1}.
std::vector<Coord> coinvariants(const ComoduleAlgebra& a);

// Echelon-normalized basis of the center {a : ab = ba for all b}.
std::vector<Coord> center(const FinDimAlgebra& a);
inline std::vector<Coord> center(const ComoduleAlgebra& a) { return center(a.alg); }

// The space of linear maps f: H -> A with delta_A(f(x)) = f(x_1) (x) x_2.
// Each basis element is the m x n matrix F of f (f(x_c) = sum_j F[j][c] a_j).
// These are exactly the generator images of H-comodule algebra maps
// T(X_H) -> A, so this space parametrizes all such maps.
struct ComoduleMapSpace {
    size_t adim = 0, hdim = 0;
    std::vector<std::vector<std::vector<FieldScalar>>> basis;
};
ComoduleMapSpace comodule_map_space(const ComoduleAlgebra& a);

// A = H with delta = Delta.
ComoduleAlgebra hopf_as_comodule(const HopfAlgebra& h);

// A graded by G (grading[i] = group index of basis element a_i), coaction
// delta(a) = a (x) g on the g-component, over k[G]. Throws ValidationError if
// the product table violates A_g A_h <= A_{gh} or the unit is not in A_e.
ComoduleAlgebra graded_algebra_as_comodule(const FiniteGroup& g, const FinDimAlgebra& a,
                                           const std::vector<size_t>& grading);

// G acting on A by algebra automorphisms (action[g][i] = coordinates of the
// image of a_i under g), coaction delta(a) = sum_g (g . a) (x) e_g over the
// dual group algebra. Validates that each map is an algebra automorphism and
// that composition follows the Cayley table.
ComoduleAlgebra g_algebra_as_comodule(const FiniteGroup& g, const FinDimAlgebra& a,
                                      const std::vector<std::vector<Coord>>& action);

}  // namespace hopfid
