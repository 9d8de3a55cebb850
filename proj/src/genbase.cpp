#include "hopfid/genbase.hpp"

#include <map>
#include <tuple>

#include "hopfid/errors.hpp"
#include "hopfid/ident.hpp"
#include "hopfid/matrix.hpp"
#include "hopfid/parallel.hpp"

namespace hopfid {

namespace {

// Sparse term of the iterated coproduct: x_i -> sum c * x_j (x) x_k (x) x_l.
struct Delta2Term {
    size_t j, k, l;
    FieldScalar c;
};

std::vector<Delta2Term> delta2_of(const HopfAlgebra& h, size_t i) {
    std::vector<Delta2Term> out;
    size_t n = h.dim();
    for (size_t u = 0; u < n; ++u)
        for (size_t l = 0; l < n; ++l) {
            const FieldScalar& c1 = h.comult[i][u][l];
            if (c1.is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    const FieldScalar& c2 = h.comult[u][j][k];
                    if (c2.is_zero()) continue;
                    out.push_back({j, k, l, c1 * c2});
                }
        }
    return out;
}

PolyRingPtr make_t_ring(const HopfAlgebra& h) {
    if (h.field()->kind == FieldKind::Fraction)
        throw ValidationError(
            "generic base construction needs a rational, prime, or cyclotomic base field");
    return PolyRing::make(h.field(), t_variable_names(h));
}

// sum_u v[u] * f[u] for a coordinate vector v and RatFunc values f.
RatFunc contract(const Coord& v, const std::vector<RatFunc>& f, const PolyRingPtr& ring) {
    RatFunc acc = RatFunc::zero(ring);
    for (size_t u = 0; u < v.size(); ++u) {
        if (v[u].is_zero()) continue;
        acc = acc + RatFunc(MPoly::constant(ring, v[u])) * f[u];
    }
    return acc;
}

}  // namespace

TInverse t_inverse(const HopfAlgebra& h) {
    size_t n = h.dim();
    PolyRingPtr ring = make_t_ring(h);
    FieldPtr frac = fraction_field(ring);

    ExactMatrix m(n, n, frac);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            MPoly e(ring);
            for (size_t j = 0; j < n; ++j) {
                const FieldScalar& c = h.comult[i][j][k];
                if (!c.is_zero()) e = e + MPoly::variable(ring, j) * c;
            }
            if (!e.is_zero()) m.set(i, k, to_scalar(frac, e));
        }
    std::vector<FieldScalar> rhs;
    for (size_t i = 0; i < n; ++i)
        rhs.push_back(to_scalar(frac, MPoly::constant(ring, h.counit[i])));

    auto sol = solve_linear(m, rhs);
    if (!sol)
        throw ValidationError(
            "the t-inverse system is singular; the coproduct data is corrupt");

    TInverse out{h, ring, {}};
    out.values.reserve(n);
    for (size_t k = 0; k < n; ++k) out.values.push_back(as_ratfunc((*sol)[k]));

    // The solve enforces the right identity; the left one is a theorem about
    // genuine coalgebras, so check it rather than trust the input.
    for (size_t i = 0; i < n; ++i) {
        RatFunc left = RatFunc::zero(ring);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const FieldScalar& c = h.comult[i][j][k];
                if (c.is_zero()) continue;
                left = left + RatFunc(MPoly::variable(ring, k) * c) * out.values[j];
            }
        if (left != RatFunc(MPoly::constant(ring, h.counit[i])))
            throw ValidationError("t-inverse left convolution identity fails at " +
                                  h.alg.basis[i]);
    }
    return out;
}

std::pair<std::vector<std::vector<RatFunc>>, std::vector<std::vector<RatFunc>>>
sigma_entries(const HopfAlgebra& h, const TwoCocycle& alpha, const TInverse& ti, bool parallel) {
    size_t n = h.dim();
    const PolyRingPtr& ring = ti.t_ring;

    // Linear extensions of t and tinv to basis products x_l * x_r.
    std::vector<std::vector<MPoly>> t_prod(n, std::vector<MPoly>(n, MPoly(ring)));
    std::vector<std::vector<RatFunc>> tinv_prod(n, std::vector<RatFunc>(n, RatFunc::zero(ring)));
    for (size_t l = 0; l < n; ++l)
        for (size_t r = 0; r < n; ++r) {
            const Coord& w = h.alg.mult[l][r];
            MPoly tp(ring);
            for (size_t u = 0; u < n; ++u)
                if (!w[u].is_zero()) tp = tp + MPoly::variable(ring, u) * w[u];
            t_prod[l][r] = tp;
            tinv_prod[l][r] = contract(w, ti.values, ring);
        }

    std::vector<std::vector<Delta2Term>> d2;
    d2.reserve(n);
    for (size_t i = 0; i < n; ++i) d2.push_back(delta2_of(h, i));

    std::vector<std::vector<RatFunc>> sig(n, std::vector<RatFunc>(n, RatFunc::zero(ring)));
    std::vector<std::vector<RatFunc>> sig_inv = sig;

    auto body = [&](size_t slot) {
        size_t a = slot / n, b = slot % n;
        // Group the 6-fold sums by the rational factor so each entry adds at
        // most n^2 fractions: sigma by tinv_{x_l x_r}, sigma_inv by
        // tinv_l tinv_r; the grouped weight is a plain polynomial.
        std::map<std::pair<size_t, size_t>, MPoly> w_sig, w_inv;
        for (const auto& ta : d2[a])
            for (const auto& tb : d2[b]) {
                FieldScalar cs = ta.c * tb.c * alpha.alpha[ta.k][tb.k];
                if (!cs.is_zero()) {
                    MPoly m = MPoly::variable(ring, ta.j) * MPoly::variable(ring, tb.j) * cs;
                    auto [it, fresh] = w_sig.try_emplace({ta.l, tb.l}, m);
                    if (!fresh) it->second = it->second + m;
                }
                FieldScalar ci = ta.c * tb.c * alpha.alpha_inv[ta.k][tb.k];
                if (!ci.is_zero() && !t_prod[ta.j][tb.j].is_zero()) {
                    MPoly m = t_prod[ta.j][tb.j] * ci;
                    auto [it, fresh] = w_inv.try_emplace({ta.l, tb.l}, m);
                    if (!fresh) it->second = it->second + m;
                }
            }
        RatFunc s = RatFunc::zero(ring), si = RatFunc::zero(ring);
        for (const auto& [lr, w] : w_sig)
            s = s + RatFunc(w) * tinv_prod[lr.first][lr.second];
        for (const auto& [lr, w] : w_inv)
            si = si + RatFunc(w) * ti.values[lr.first] * ti.values[lr.second];
        sig[a][b] = s;
        sig_inv[a][b] = si;
    };
    if (parallel)
        parallel_for(n * n, body);
    else
        for (size_t slot = 0; slot < n * n; ++slot) body(slot);

    return {std::move(sig), std::move(sig_inv)};
}

std::vector<std::string> verify_sigma(const SigmaTable& s) {
    const HopfAlgebra& h = s.host;
    size_t n = h.dim();
    const PolyRingPtr& ring = s.t_ring;
    std::vector<std::string> bad;
    auto name = [&](size_t i) { return h.alg.basis[i]; };

    // Twisted products W(i,j)[u] = sum sigma(x_i1, x_j1) (x_i2 x_j2)_u; both
    // sides of the cocycle identity contract these against sigma.
    std::vector<std::vector<std::vector<RatFunc>>> w(
        n, std::vector<std::vector<RatFunc>>(n, std::vector<RatFunc>(n, RatFunc::zero(ring))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    const FieldScalar& c1 = h.comult[i][a][b];
                    if (c1.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c)
                        for (size_t d = 0; d < n; ++d) {
                            const FieldScalar& c2 = h.comult[j][c][d];
                            if (c2.is_zero() || s.sigma[a][c].is_zero()) continue;
                            const Coord& prod = h.alg.mult[b][d];
                            for (size_t u = 0; u < n; ++u) {
                                if (prod[u].is_zero()) continue;
                                w[i][j][u] = w[i][j][u] +
                                             RatFunc(MPoly::constant(ring, c1 * c2 * prod[u])) *
                                                 s.sigma[a][c];
                            }
                        }
                }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                RatFunc lhs = RatFunc::zero(ring), rhs = RatFunc::zero(ring);
                for (size_t u = 0; u < n; ++u) {
                    if (!w[i][j][u].is_zero()) lhs = lhs + w[i][j][u] * s.sigma[u][k];
                    if (!w[j][k][u].is_zero()) rhs = rhs + s.sigma[i][u] * w[j][k][u];
                }
                if (lhs != rhs)
                    bad.push_back("sigma cocycle identity fails at (" + name(i) + ", " +
                                  name(j) + ", " + name(k) + ")");
            }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RatFunc fwd = RatFunc::zero(ring), bwd = RatFunc::zero(ring);
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    const FieldScalar& c1 = h.comult[i][a][b];
                    if (c1.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c)
                        for (size_t d = 0; d < n; ++d) {
                            const FieldScalar& c2 = h.comult[j][c][d];
                            if (c2.is_zero()) continue;
                            RatFunc cc(MPoly::constant(ring, c1 * c2));
                            fwd = fwd + cc * s.sigma[a][c] * s.sigma_inv[b][d];
                            bwd = bwd + cc * s.sigma_inv[a][c] * s.sigma[b][d];
                        }
                }
            RatFunc eps(MPoly::constant(ring, h.counit[i] * h.counit[j]));
            if (fwd != eps || bwd != eps)
                bad.push_back("sigma and sigma_inv are not convolution inverse at (" +
                              name(i) + ", " + name(j) + ")");
        }

    // The counit point of the torsor: t_x -> eps(x) turns sigma back into
    // alpha and sigma_inv into alpha_inv.
    std::vector<FieldScalar> eps_point = h.counit;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (s.sigma[i][j].eval(eps_point) != s.alpha.alpha[i][j])
                bad.push_back("specializing t at the counit does not recover alpha at (" +
                              name(i) + ", " + name(j) + ")");
            if (s.sigma_inv[i][j].eval(eps_point) != s.alpha.alpha_inv[i][j])
                bad.push_back(
                    "specializing t at the counit does not recover alpha_inv at (" + name(i) +
                    ", " + name(j) + ")");
        }
    return bad;
}

SigmaTable sigma_table(const HopfAlgebra& h, const TwoCocycle& alpha, bool parallel) {
    if (!same_structure(h, alpha.hopf))
        throw ValidationError("cocycle is defined over a different Hopf algebra");
    auto bad = verify_cocycle(alpha);
    if (!bad.empty()) throw ValidationError("invalid cocycle: " + bad.front());

    TInverse ti = t_inverse(h);
    auto [sig, sig_inv] = sigma_entries(h, alpha, ti, parallel);
    SigmaTable out{h, alpha, ti.t_ring, std::move(sig), std::move(sig_inv)};
    auto violations = verify_sigma(out);
    if (!violations.empty())
        throw ValidationError("generic cocycle verification failed: " + violations.front());
    return out;
}

std::vector<BaseGenerator> generic_base_generators(const SigmaTable& s) {
    size_t n = s.host.dim();
    std::vector<BaseGenerator> out;
    auto add = [&](size_t i, size_t j, int e, const RatFunc& v) {
        for (const auto& g : out)
            if (g.value == v) return;
        std::string head = e > 0 ? "sigma(" : "sigma^-1(";
        out.push_back({head + s.host.alg.basis[i] + "," + s.host.alg.basis[j] + ")", i, j, e, v});
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) add(i, j, 1, s.sigma[i][j]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) add(i, j, -1, s.sigma_inv[i][j]);
    return out;
}

std::string ratfunc_str(const RatFunc& f) { return f.num().str() + " | " + f.den().str(); }

}  // namespace hopfid
