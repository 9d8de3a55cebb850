#pragma once

#include <json.hpp>
#include <string>

#include "hopfid/cocycle.hpp"
#include "hopfid/comod.hpp"
#include "hopfid/genbase.hpp"

namespace hopfid {

// Key order is part of the format: reports must be byte-deterministic.
using Json = nlohmann::ordered_json;

// Field descriptors use Field::name(): "QQ", "GF(p)", "QQ(zeta_n)", and
// "Frac(<base>[v1,v2,...])". Throws ParseError on anything else.
FieldPtr parse_field(const std::string& name);

// Hopf algebra file: {field, dim, basis, unit, mult, comult, counit,
// antipode} with scalars as strings, mult as [i, j, coords] triples in
// row-major order and comult as sparse [i, j, k, scalar] entries in lex
// order. Writers and readers round-trip structure constants exactly.
Json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j);

// Cocycle file: {hopf, alpha}. "hopf" is an inline object or a file path
// resolved against base_dir; alpha is an n x n table of scalar strings. The
// reader revalidates and recomputes the convolution inverse.
Json cocycle_to_json(const TwoCocycle& c);
TwoCocycle cocycle_from_json(const Json& j, const std::string& base_dir = "");

// Comodule algebra file: {hopf, field?, dim, basis, unit, mult, coaction}
// with the coaction as sparse [i, j, k, scalar] entries; the algebra field
// defaults to the Hopf algebra's. The reader revalidates the axioms.
Json comodule_to_json(const ComoduleAlgebra& a);
ComoduleAlgebra comodule_from_json(const Json& j, const std::string& base_dir = "");

// Sigma table report: both tables as "numerator | denominator" strings plus
// the deduplicated generator list.
Json sigma_to_json(const SigmaTable& s);

// File plumbing; load throws ParseError with the path on malformed JSON.
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);
HopfAlgebra load_hopf(const std::string& path);
TwoCocycle load_cocycle(const std::string& path);
ComoduleAlgebra load_comodule(const std::string& path);

}  // namespace hopfid
