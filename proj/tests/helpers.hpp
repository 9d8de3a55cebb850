#pragma once

#include "hopfid/hopf.hpp"

namespace hopfid::testutil {

inline FieldScalar Q(long n, long d = 1) { return FieldScalar::rational(mpq_class(n, d)); }

// 2x2 matrix algebra, basis (E11, E22, E12, E21): diagonal units first so the
// Z/2 grading (diagonal even, antidiagonal odd) is the split by index < 2.
inline FinDimAlgebra m2_algebra() {
    FinDimAlgebra a;
    a.field = rationals();
    a.dim = 4;
    a.basis = {"E11", "E22", "E12", "E21"};
    a.mult.assign(4, std::vector<Coord>(4, coord_zero(4, a.field)));
    auto set = [&](size_t i, size_t j, size_t k) { a.mult[i][j][k] = Q(1); };
    // E_ab E_cd = [b == c] E_ad with E11=(1,1), E22=(2,2), E12=(1,2), E21=(2,1)
    set(0, 0, 0);  // E11 E11 = E11
    set(0, 2, 2);  // E11 E12 = E12
    set(1, 1, 1);  // E22 E22 = E22
    set(1, 3, 3);  // E22 E21 = E21
    set(2, 1, 2);  // E12 E22 = E12
    set(2, 3, 0);  // E12 E21 = E11
    set(3, 0, 3);  // E21 E11 = E21
    set(3, 2, 1);  // E21 E12 = E22
    a.unit = coord_zero(4, a.field);
    a.unit[0] = Q(1);
    a.unit[1] = Q(1);
    return a;
}

}  // namespace hopfid::testutil
