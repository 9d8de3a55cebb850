#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfid/cocycle.hpp"
#include "hopfid/freealg.hpp"
#include "hopfid/matrix.hpp"
#include "hopfid/mpoly.hpp"

namespace hopfid {

// Element of S(vars) (x) A: sparse map from a monomial in the t- (or c-)
// variables to a coordinate vector over A. Stored zero coordinate vectors are
// dropped. The monomial-indexed view is what degree-r kernel assembly reads
// off directly, and coordinates may live in any FieldScalar field.
struct MixedElement {
    std::shared_ptr<const ComoduleAlgebra> host;
    std::vector<std::string> vars;
    std::map<Exponents, Coord> terms;

    bool is_zero() const { return terms.empty(); }
    unsigned degree() const;  // max total monomial degree, 0 when zero
    std::string str() const;
};

// "t_" + basis label, with '^' stripped to keep names parseable.
std::vector<std::string> t_variable_names(const HopfAlgebra& h);

// The universal map on the twist: X_x -> t_{x_1} u_{x_2}, extended as an
// algebra map into S(t_H) (x) A. Degree-r words land in S^r (x) A.
MixedElement mu_alpha(const FreeElement& p, const CleftAlgebra& a);

struct IdentityVerdict {
    bool is_identity = false;
    // A rational point for image.vars with nonzero evaluation; absent when
    // is_identity, and absent over a finite field with no nonzero point (the
    // warning explains).
    std::optional<std::vector<FieldScalar>> witness;
    MixedElement image;
    std::string warning;  // set when the coefficient field is finite
};

// P is an H-identity for the twisted algebra iff mu_alpha(P) = 0. The witness
// search scans integer grids of growing radius, which terminates over an
// infinite field; over F_p the grid covers all residues before giving up.
IdentityVerdict is_identity_twisted(const FreeElement& p, const CleftAlgebra& a);

// Decision for a general comodule algebra: evaluates P under the generic
// comodule algebra map sum c_s f_s with f_s the echelon basis of
// comodule_map_space(a) and c_s fresh indeterminates; P is an identity iff
// the result vanishes identically.
IdentityVerdict is_identity_general(const FreeElement& p, const ComoduleAlgebra& a);

// The comodule algebra map T(X_H) -> A with X_{x_i} -> sum m^i_{jk} chi_j u_{x_k}
// (the specialization of mu_alpha at t = chi), evaluated at P.
Coord evaluate_at_specialization(const FreeElement& p, const CleftAlgebra& a,
                                 const std::vector<FieldScalar>& chi);

// The matrix of mu_alpha restricted to T^r: rows indexed by (degree-r
// monomial, A-coordinate) pairs, columns by the n^r words in lex order.
// Kernel vectors are exactly the coefficient vectors of degree-r identities.
// The parallel path assembles word columns concurrently; both paths produce
// identical matrices.
ExactMatrix degree_matrix(unsigned r, const CleftAlgebra& a, bool parallel = true);

// Echelon basis of the degree-r identities of the twist; empty for r = 0.
// Throws LimitError when n^r exceeds word_cap.
std::vector<FreeElement> identities_of_degree(unsigned r, const CleftAlgebra& a,
                                              size_t word_cap = 20000);

// Smallest r <= max_r with a nonzero degree-r identity space, with its basis.
std::optional<std::pair<unsigned, std::vector<FreeElement>>> minimal_identity_degree(
    const CleftAlgebra& a, unsigned max_r, size_t word_cap = 20000);

// Checks the ideal/coideal structure around a given identity P: every
// homogeneous component is an identity, every component P_k of
// coaction_T(P) = sum P_k (x) x_k is an identity, and Q P, P Q remain
// identities for sampled Q. Returns violation messages (expected empty).
std::vector<std::string> check_ideal_properties(const FreeElement& p, const CleftAlgebra& a);

struct UniversalImageFlags {
    bool coinvariant = false;  // image lies in S(t_H) (x) k u_1
    bool central = false;      // image lies in S(t_H) (x) Z(A)
};
UniversalImageFlags universal_image_flags(const FreeElement& p, const CleftAlgebra& a);

}  // namespace hopfid
