#include "hopfid/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace hopfid {

void nc_add(NCElem& acc, const NCWord& w, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

namespace {
// Leftmost match position and rule index, or nullopt when irreducible.
std::optional<std::pair<size_t, size_t>> find_redex(const NCWord& w,
                                                    const std::vector<NCRule>& rules) {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t r = 0; r < rules.size(); ++r) {
            const NCWord& l = rules[r].lhs;
            if (l.empty() || pos + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + (long)pos))
                return std::make_pair(pos, r);
        }
    }
    return std::nullopt;
}
}  // namespace

NCElem nc_reduce(const NCWord& w, const FieldScalar& coeff, const std::vector<NCRule>& rules) {
    NCElem out;
    std::deque<std::pair<NCWord, FieldScalar>> work;
    work.emplace_back(w, coeff);
    while (!work.empty()) {
        auto [word, c] = std::move(work.front());
        work.pop_front();
        if (c.is_zero()) continue;
        auto redex = find_redex(word, rules);
        if (!redex) {
            nc_add(out, word, c);
            continue;
        }
        auto [pos, r] = *redex;
        const NCRule& rule = rules[r];
        for (const auto& [rc, rw] : rule.rhs) {
            NCWord next;
            next.reserve(word.size() - rule.lhs.size() + rw.size());
            next.insert(next.end(), word.begin(), word.begin() + (long)pos);
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), word.begin() + (long)(pos + rule.lhs.size()), word.end());
            work.emplace_back(std::move(next), c * rc);
        }
    }
    return out;
}

NCElem nc_reduce(const NCElem& e, const std::vector<NCRule>& rules) {
    NCElem out;
    for (const auto& [w, c] : e)
        for (const auto& [rw, rc] : nc_reduce(w, c, rules)) nc_add(out, rw, rc);
    return out;
}

std::vector<FieldScalar> nc_expand(const NCElem& e, const std::vector<NCWord>& basis,
                                   const FieldPtr& field) {
    std::map<NCWord, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<FieldScalar> out(basis.size(), FieldScalar::zero(field));
    for (const auto& [w, c] : e) {
        auto it = index.find(w);
        if (it == index.end())
            throw ValidationError("rewriting produced a word outside the declared basis");
        out[it->second] = coerce_to(c, field);
    }
    return out;
}

}  // namespace hopfid
