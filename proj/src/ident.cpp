#include "hopfid/ident.hpp"

#include <algorithm>
#include <functional>

#include "hopfid/errors.hpp"
#include "hopfid/parallel.hpp"

namespace hopfid {

namespace {

void require_same_hopf(const FreeElement& p, const ComoduleAlgebra& a) {
    if (p.host()->dim() != a.hdim() || !same_structure(*p.host(), a.hopf))
        throw ValidationError("free element and comodule algebra have different Hopf hosts");
}

std::string finite_field_warning(const FieldPtr& f) {
    if (!f->is_finite()) return {};
    return "coefficient field " + f->name() + " is finite; identity decisions assume an "
           "infinite base field";
}

void accumulate(std::map<Exponents, Coord>& acc, const Exponents& e, const FieldScalar& c,
                const Coord& v, const FieldPtr& field) {
    auto it = acc.try_emplace(e, coord_zero(v.size(), field)).first;
    coord_axpy(it->second, c, v);
    if (coord_is_zero(it->second)) acc.erase(it);
}

// Walks the letters of one word, mapping letter i to the linear images
// images[i] = list of (variable index, coefficient, A-coordinates), and
// multiplying in A. Shared by mu_alpha, the generic evaluation, and the
// degree matrix.
using LetterImage = std::vector<std::tuple<size_t, FieldScalar, Coord>>;

std::map<Exponents, Coord> walk_word(const FreeWord& word, const std::vector<LetterImage>& images,
                                     size_t nvars, const FinDimAlgebra& alg) {
    std::map<Exponents, Coord> acc;
    acc.emplace(Exponents(nvars, 0), alg.unit);
    for (unsigned letter : word) {
        std::map<Exponents, Coord> next;
        for (const auto& [e, v] : acc)
            for (const auto& [var, coeff, img] : images[letter]) {
                Exponents e2 = e;
                ++e2[var];
                accumulate(next, e2, coeff, alg.multiply(v, img), alg.field);
            }
        acc = std::move(next);
    }
    return acc;
}

// Letter images for mu_alpha: X_{x_i} -> sum m^i_{jk} t_j u_{x_k}.
std::vector<LetterImage> mu_letter_images(const CleftAlgebra& a) {
    const HopfAlgebra& h = a.comod.hopf;
    size_t n = h.dim();
    std::vector<LetterImage> images(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const FieldScalar& m = h.comult[i][j][k];
                if (m.is_zero()) continue;
                images[i].emplace_back(j, coerce_to(m, a.comod.field()),
                                       a.comod.alg.basis_vec(k));
            }
    return images;
}

std::map<Exponents, Coord> image_of(const FreeElement& p, const std::vector<LetterImage>& images,
                                    size_t nvars, const FinDimAlgebra& alg) {
    std::map<Exponents, Coord> out;
    for (const auto& [word, coeff] : p.terms())
        for (const auto& [e, v] : walk_word(word, images, nvars, alg))
            accumulate(out, e, coerce_to(coeff, alg.field), v, alg.field);
    return out;
}

// Deterministic nonzero point of a nonzero image. Each variable scans the
// values 0, 1, -1, 2, -2, ... (rank order); the grid expands by max rank, so
// small non-negative points are tried first. Over characteristic zero a grid
// of per-variable size above the degree suffices; over F_p the scan stops
// once all residues are covered.
std::optional<std::vector<FieldScalar>> find_nonzero_point(const MixedElement& img) {
    size_t d = img.vars.size();
    const FieldPtr& field = img.host->field();
    long maxdeg = 0;
    for (const auto& [e, v] : img.terms)
        for (unsigned x : e) maxdeg = std::max(maxdeg, (long)x);
    long lmax = maxdeg + 1;
    unsigned long p = field_characteristic(*field);
    if (p && (long)p - 1 < lmax) lmax = (long)p - 1;

    auto value_of = [](long rank) {  // 0, 1, -1, 2, -2, ...
        return rank % 2 ? (rank + 1) / 2 : -rank / 2;
    };
    for (long shell = 0; shell <= lmax; ++shell) {
        // Odometer over ranks [0, shell]^d (last variable fastest), keeping
        // only points whose max rank equals the shell.
        std::vector<long> rank(d, 0);
        while (true) {
            bool on_shell = shell == 0;
            for (long r : rank)
                if (r == shell) on_shell = true;
            if (on_shell) {
                Coord acc = coord_zero(img.host->adim(), field);
                for (const auto& [e, coords] : img.terms) {
                    FieldScalar s = FieldScalar::one(field);
                    for (size_t i = 0; i < d; ++i)
                        for (unsigned t = 0; t < e[i]; ++t)
                            s = s * FieldScalar::in_field(field, value_of(rank[i]));
                    coord_axpy(acc, s, coords);
                }
                if (!coord_is_zero(acc)) {
                    std::vector<FieldScalar> out;
                    for (long r : rank) out.push_back(FieldScalar::in_field(field, value_of(r)));
                    return out;
                }
            }
            size_t i = d;
            while (i > 0 && rank[i - 1] == shell) rank[--i] = 0;
            if (i == 0) break;
            ++rank[i - 1];
        }
        if (d == 0) break;
    }
    return std::nullopt;
}

std::vector<Exponents> monomials_of_degree(size_t nvars, unsigned r) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    // Lex-ascending enumeration of all exponent vectors with |e| = r.
    std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned left) {
        if (pos + 1 == nvars) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (r == 0) out.push_back({});
        return out;
    }
    rec(0, r);
    return out;
}

size_t checked_word_count(size_t n, unsigned r, size_t cap) {
    size_t total = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (total > cap / n)
            throw LimitError("degree-" + std::to_string(r) + " word count exceeds the cap of " +
                             std::to_string(cap));
        total *= n;
    }
    if (total > cap)
        throw LimitError("degree-" + std::to_string(r) + " word count exceeds the cap of " +
                         std::to_string(cap));
    return total;
}

}  // namespace

unsigned MixedElement::degree() const {
    unsigned d = 0;
    for (const auto& [e, v] : terms) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::string MixedElement::str() const {
    const auto& labels = host->alg.basis;
    std::vector<std::string> parts;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string mono;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
        }
        for (size_t j = 0; j < it->second.size(); ++j) {
            if (it->second[j].is_zero()) continue;
            std::string atom = mono.empty() ? labels[j] : mono + "*" + labels[j];
            parts.push_back(term_str(it->second[j], atom));
        }
    }
    return join_terms(parts);
}

std::vector<std::string> t_variable_names(const HopfAlgebra& h) {
    std::vector<std::string> out;
    for (const auto& label : h.alg.basis) {
        std::string name = "t_";
        for (char c : label)
            if (c != '^') name += c;
        out.push_back(name);
    }
    return out;
}

MixedElement mu_alpha(const FreeElement& p, const CleftAlgebra& a) {
    require_same_hopf(p, a.comod);
    MixedElement out{std::make_shared<const ComoduleAlgebra>(a.comod),
                     t_variable_names(a.comod.hopf), {}};
    out.terms = image_of(p, mu_letter_images(a), out.vars.size(), a.comod.alg);
    return out;
}

IdentityVerdict is_identity_twisted(const FreeElement& p, const CleftAlgebra& a) {
    IdentityVerdict v;
    v.image = mu_alpha(p, a);
    v.warning = finite_field_warning(a.comod.field());
    v.is_identity = v.image.is_zero();
    if (!v.is_identity) v.witness = find_nonzero_point(v.image);
    return v;
}

IdentityVerdict is_identity_general(const FreeElement& p, const ComoduleAlgebra& a) {
    require_same_hopf(p, a);
    auto space = comodule_map_space(a);
    size_t d = space.basis.size();

    std::vector<LetterImage> images(a.hdim());
    for (size_t i = 0; i < a.hdim(); ++i)
        for (size_t s = 0; s < d; ++s) {
            Coord img = coord_zero(a.adim(), a.field());
            for (size_t j = 0; j < a.adim(); ++j) img[j] = space.basis[s][j][i];
            if (coord_is_zero(img)) continue;
            images[i].emplace_back(s, FieldScalar::one(a.field()), img);
        }

    IdentityVerdict v;
    v.image.host = std::make_shared<const ComoduleAlgebra>(a);
    for (size_t s = 0; s < d; ++s) v.image.vars.push_back("c_" + std::to_string(s + 1));
    v.image.terms = image_of(p, images, d, a.alg);
    v.warning = finite_field_warning(a.field());
    v.is_identity = v.image.is_zero();
    if (!v.is_identity) v.witness = find_nonzero_point(v.image);
    return v;
}

Coord evaluate_at_specialization(const FreeElement& p, const CleftAlgebra& a,
                                 const std::vector<FieldScalar>& chi) {
    require_same_hopf(p, a.comod);
    const HopfAlgebra& h = a.comod.hopf;
    size_t n = h.dim();
    if (chi.size() != n) throw DimensionError("specialization must provide one value per t-variable");
    const FinDimAlgebra& alg = a.comod.alg;
    std::vector<Coord> gen(n, coord_zero(n, alg.field));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const FieldScalar& m = h.comult[i][j][k];
                if (!m.is_zero()) gen[i][k] += coerce_to(m * chi[j], alg.field);
            }
    Coord out = coord_zero(n, alg.field);
    for (const auto& [word, coeff] : p.terms()) {
        Coord v = alg.unit;
        for (unsigned letter : word) v = alg.multiply(v, gen[letter]);
        coord_axpy(out, coerce_to(coeff, alg.field), v);
    }
    return out;
}

ExactMatrix degree_matrix(unsigned r, const CleftAlgebra& a, bool parallel) {
    const ComoduleAlgebra& c = a.comod;
    size_t n = c.hdim(), m = c.adim();
    size_t nwords = 1;
    for (unsigned i = 0; i < r; ++i) nwords *= n;

    auto monos = monomials_of_degree(n, r);
    std::map<Exponents, size_t> mono_idx;
    for (size_t i = 0; i < monos.size(); ++i) mono_idx.emplace(monos[i], i);

    auto images = mu_letter_images(a);
    std::vector<std::map<Exponents, Coord>> cols(nwords);
    auto compute = [&](size_t w) {
        FreeWord word(r);
        size_t rem = w;
        for (unsigned pos = r; pos-- > 0;) {
            word[pos] = (unsigned)(rem % n);
            rem /= n;
        }
        cols[w] = walk_word(word, images, n, c.alg);
    };
    if (parallel)
        parallel_for(nwords, compute);
    else
        for (size_t w = 0; w < nwords; ++w) compute(w);

    ExactMatrix mat(monos.size() * m, nwords, c.field());
    for (size_t w = 0; w < nwords; ++w)
        for (const auto& [e, v] : cols[w]) {
            auto it = mono_idx.find(e);
            if (it == mono_idx.end())
                throw ValidationError("universal image violates the degree grading");
            for (size_t j = 0; j < m; ++j)
                if (!v[j].is_zero()) mat.set(it->second * m + j, w, v[j]);
        }
    return mat;
}

std::vector<FreeElement> identities_of_degree(unsigned r, const CleftAlgebra& a,
                                              size_t word_cap) {
    if (r == 0) return {};  // mu is injective on T^0 = k
    size_t n = a.comod.hdim();
    size_t nwords = checked_word_count(n, r, word_cap);

    auto kern = kernel_basis(degree_matrix(r, a, true));
    auto host = std::make_shared<const HopfAlgebra>(a.comod.hopf);
    unsigned limit = std::max(FreeElement::kDefaultDegreeLimit, r);
    std::vector<FreeElement> out;
    for (const auto& vec : kern) {
        FreeElement e(host, limit);
        for (size_t w = 0; w < nwords; ++w) {
            if (vec[w].is_zero()) continue;
            FreeWord word(r);
            size_t rem = w;
            for (unsigned pos = r; pos-- > 0;) {
                word[pos] = (unsigned)(rem % n);
                rem /= n;
            }
            e.add_term(word, vec[w]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<std::pair<unsigned, std::vector<FreeElement>>> minimal_identity_degree(
    const CleftAlgebra& a, unsigned max_r, size_t word_cap) {
    for (unsigned r = 1; r <= max_r; ++r) {
        auto basis = identities_of_degree(r, a, word_cap);
        if (!basis.empty()) return std::make_pair(r, std::move(basis));
    }
    return std::nullopt;
}

std::vector<std::string> check_ideal_properties(const FreeElement& p, const CleftAlgebra& a) {
    std::vector<std::string> report;
    if (!is_identity_twisted(p, a).is_identity) {
        report.push_back("element is not an identity");
        return report;
    }
    for (const auto& [deg, comp] : homogeneous_components(p))
        if (!is_identity_twisted(comp, a).is_identity)
            report.push_back("degree-" + std::to_string(deg) +
                             " homogeneous component is not an identity");

    // coaction_T(P) = sum_k P_k (x) x_k: each coideal component must be an identity.
    const auto& labels = p.host()->alg.basis;
    std::map<size_t, FreeElement> comps;
    for (const auto& [key, c] : coaction_T(p).terms) {
        auto it = comps.try_emplace(key.second, FreeElement(p.host(), p.degree_limit())).first;
        it->second.add_term(key.first, c);
    }
    for (const auto& [k, pk] : comps)
        if (!is_identity_twisted(pk, a).is_identity)
            report.push_back("coideal component at basis element " + labels[k] +
                             " is not an identity");

    std::vector<FreeElement> samples;
    for (size_t i = 0; i < std::min<size_t>(p.host()->dim(), 4); ++i)
        samples.push_back(FreeElement::letter(p.host(), i));
    samples.push_back(FreeElement::letter(p.host(), 0) *
                      FreeElement::letter(p.host(), p.host()->dim() - 1));
    for (const auto& q : samples) {
        if (!is_identity_twisted(q * p, a).is_identity)
            report.push_back("left multiple by " + q.str() + " is not an identity");
        if (!is_identity_twisted(p * q, a).is_identity)
            report.push_back("right multiple by " + q.str() + " is not an identity");
    }
    return report;
}

UniversalImageFlags universal_image_flags(const FreeElement& p, const CleftAlgebra& a) {
    MixedElement img = mu_alpha(p, a);
    const FinDimAlgebra& alg = a.comod.alg;
    UniversalImageFlags flags{true, true};

    size_t j0 = 0;
    while (j0 < alg.dim && alg.unit[j0].is_zero()) ++j0;
    for (const auto& [e, v] : img.terms) {
        FieldScalar lam = v[j0] / alg.unit[j0];
        Coord diff = v;
        coord_axpy(diff, -lam, alg.unit);
        if (!coord_is_zero(diff)) {
            flags.coinvariant = false;
            break;
        }
    }

    auto zbasis = center(alg);
    ExactMatrix zmat(alg.dim, zbasis.size(), alg.field);
    for (size_t c = 0; c < zbasis.size(); ++c)
        for (size_t rw = 0; rw < alg.dim; ++rw) zmat.set(rw, c, zbasis[c][rw]);
    for (const auto& [e, v] : img.terms)
        if (!solve_linear(zmat, v)) {
            flags.central = false;
            break;
        }
    return flags;
}

}  // namespace hopfid
