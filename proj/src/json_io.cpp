#include "hopfid/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "hopfid/errors.hpp"

namespace hopfid {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

const Json& field_at(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

size_t index_in(const Json& v, size_t dim, const char* what) {
    if (!v.is_number_unsigned() || v.get<size_t>() >= dim)
        bad(std::string("invalid ") + what + " index");
    return v.get<size_t>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) bad(std::string(what) + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

Coord parse_coords(const Json& j, size_t dim, const FieldPtr& f, const char* what) {
    auto strs = string_list(j, what);
    if (strs.size() != dim) bad(std::string(what) + " has the wrong length");
    Coord out;
    out.reserve(dim);
    for (const auto& s : strs) out.push_back(parse_scalar(s, f));
    return out;
}

Json coords_to_json(const Coord& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

// mult as [i, j, coords] triples; shared by the Hopf and comodule formats.
std::vector<std::vector<Coord>> parse_mult(const Json& j, size_t dim, const FieldPtr& f) {
    if (!j.is_array()) bad("mult must be an array of [i, j, coords] triples");
    std::vector<std::vector<Coord>> mult(dim, std::vector<Coord>(dim, coord_zero(dim, f)));
    std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) bad("mult entries must be [i, j, coords]");
        size_t i = index_in(t[0], dim, "mult row");
        size_t k = index_in(t[1], dim, "mult column");
        if (seen[i][k]) bad("duplicate mult entry");
        seen[i][k] = true;
        mult[i][k] = parse_coords(t[2], dim, f, "mult coords");
    }
    return mult;
}

Json mult_to_json(const std::vector<std::vector<Coord>>& mult) {
    Json out = Json::array();
    for (size_t i = 0; i < mult.size(); ++i)
        for (size_t j = 0; j < mult[i].size(); ++j)
            out.push_back(Json::array({i, j, coords_to_json(mult[i][j])}));
    return out;
}

// Resolves an embedded Hopf algebra: inline object or path relative to base_dir.
HopfAlgebra resolve_hopf(const Json& j, const std::string& base_dir) {
    if (j.is_object()) return hopf_from_json(j);
    if (j.is_string()) {
        std::filesystem::path p(j.get<std::string>());
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        return load_hopf(p.string());
    }
    bad("'hopf' must be an inline object or a file path");
}

}  // namespace

FieldPtr parse_field(const std::string& name) {
    if (name == "QQ") return rationals();
    auto num_arg = [&](const std::string& head) -> std::optional<unsigned long> {
        if (name.size() <= head.size() + 1 || name.compare(0, head.size(), head) != 0 ||
            name.back() != ')')
            return std::nullopt;
        std::string digits = name.substr(head.size(), name.size() - head.size() - 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoul(digits);
    };
    if (auto p = num_arg("GF(")) return prime_field(*p);
    if (auto n = num_arg("QQ(zeta_")) return cyclotomic_field(*n).field;
    if (name.size() > 6 && name.compare(0, 5, "Frac(") == 0 && name.back() == ')') {
        std::string inner = name.substr(5, name.size() - 6);
        auto open = inner.find('[');
        if (open == std::string::npos || inner.back() != ']')
            bad("malformed fraction field '" + name + "'");
        FieldPtr base = parse_field(inner.substr(0, open));
        std::string vars = inner.substr(open + 1, inner.size() - open - 2);
        std::vector<std::string> names;
        size_t start = 0;
        while (start <= vars.size() && !vars.empty()) {
            size_t comma = vars.find(',', start);
            names.push_back(vars.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return fraction_field(PolyRing::make(base, names));
    }
    bad("unknown field '" + name + "'");
}

Json hopf_to_json(const HopfAlgebra& h) {
    size_t n = h.dim();
    Json j;
    j["field"] = h.field()->name();
    j["dim"] = n;
    j["basis"] = h.alg.basis;
    j["unit"] = coords_to_json(h.alg.unit);
    j["mult"] = mult_to_json(h.alg.mult);
    Json cm = Json::array();
    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                if (!h.comult[i][a][b].is_zero())
                    cm.push_back(Json::array({i, a, b, h.comult[i][a][b].str()}));
    j["comult"] = cm;
    j["counit"] = coords_to_json(h.counit);
    Json ap = Json::array();
    for (const auto& row : h.antipode) ap.push_back(coords_to_json(row));
    j["antipode"] = ap;
    return j;
}

HopfAlgebra hopf_from_json(const Json& j) {
    FieldPtr f = parse_field(field_at(j, "field").get<std::string>());
    const Json& jd = field_at(j, "dim");
    if (!jd.is_number_unsigned() || jd.get<size_t>() == 0) bad("dim must be a positive integer");
    size_t n = jd.get<size_t>();

    HopfAlgebra h;
    h.alg.field = f;
    h.alg.dim = n;
    h.alg.basis = string_list(field_at(j, "basis"), "basis");
    if (h.alg.basis.size() != n) bad("basis has the wrong length");
    h.alg.unit = parse_coords(field_at(j, "unit"), n, f, "unit");
    h.alg.mult = parse_mult(field_at(j, "mult"), n, f);

    h.comult.assign(n, tensor_zero(n, f));
    const Json& cm = field_at(j, "comult");
    if (!cm.is_array()) bad("comult must be an array of [i, j, k, scalar] entries");
    for (const auto& e : cm) {
        if (!e.is_array() || e.size() != 4 || !e[3].is_string())
            bad("comult entries must be [i, j, k, scalar-string]");
        size_t i = index_in(e[0], n, "comult");
        size_t a = index_in(e[1], n, "comult");
        size_t b = index_in(e[2], n, "comult");
        h.comult[i][a][b] = h.comult[i][a][b] + parse_scalar(e[3].get<std::string>(), f);
    }
    h.counit = parse_coords(field_at(j, "counit"), n, f, "counit");
    const Json& ap = field_at(j, "antipode");
    if (!ap.is_array() || ap.size() != n) bad("antipode must list one coordinate row per basis");
    for (const auto& row : ap) h.antipode.push_back(parse_coords(row, n, f, "antipode"));

    auto violations = verify_hopf(h);
    if (!violations.empty())
        throw ValidationError("hopf algebra file fails verification: " + violations.front());
    return h;
}

Json cocycle_to_json(const TwoCocycle& c) {
    Json j;
    j["hopf"] = hopf_to_json(c.hopf);
    Json rows = Json::array();
    for (const auto& row : c.alpha) rows.push_back(coords_to_json(row));
    j["alpha"] = rows;
    return j;
}

TwoCocycle cocycle_from_json(const Json& j, const std::string& base_dir) {
    HopfAlgebra h = resolve_hopf(field_at(j, "hopf"), base_dir);
    const Json& rows = field_at(j, "alpha");
    if (!rows.is_array() || rows.size() != h.dim()) bad("alpha must be an n x n table");
    ScalarTable alpha;
    for (const auto& row : rows)
        alpha.push_back(parse_coords(row, h.dim(), h.field(), "alpha row"));
    return make_cocycle(h, alpha);
}

Json comodule_to_json(const ComoduleAlgebra& a) {
    Json j;
    j["hopf"] = hopf_to_json(a.hopf);
    j["field"] = a.field()->name();
    j["dim"] = a.adim();
    j["basis"] = a.alg.basis;
    j["unit"] = coords_to_json(a.alg.unit);
    j["mult"] = mult_to_json(a.alg.mult);
    Json co = Json::array();
    for (size_t i = 0; i < a.adim(); ++i)
        for (size_t p = 0; p < a.adim(); ++p)
            for (size_t k = 0; k < a.hdim(); ++k)
                if (!a.coaction[i][p][k].is_zero())
                    co.push_back(Json::array({i, p, k, a.coaction[i][p][k].str()}));
    j["coaction"] = co;
    return j;
}

ComoduleAlgebra comodule_from_json(const Json& j, const std::string& base_dir) {
    ComoduleAlgebra a;
    a.hopf = resolve_hopf(field_at(j, "hopf"), base_dir);
    FieldPtr f = j.contains("field") ? parse_field(j.at("field").get<std::string>())
                                     : a.hopf.field();
    if (!f->same(*a.hopf.field()))
        bad("comodule field must match the Hopf algebra field");
    const Json& jd = field_at(j, "dim");
    if (!jd.is_number_unsigned() || jd.get<size_t>() == 0) bad("dim must be a positive integer");
    size_t m = jd.get<size_t>();
    size_t n = a.hopf.dim();

    a.alg.field = f;
    a.alg.dim = m;
    a.alg.basis = string_list(field_at(j, "basis"), "basis");
    if (a.alg.basis.size() != m) bad("basis has the wrong length");
    a.alg.unit = parse_coords(field_at(j, "unit"), m, f, "unit");
    a.alg.mult = parse_mult(field_at(j, "mult"), m, f);

    a.coaction.assign(m, std::vector<std::vector<FieldScalar>>(
                             m, std::vector<FieldScalar>(n, FieldScalar::zero(f))));
    const Json& co = field_at(j, "coaction");
    if (!co.is_array()) bad("coaction must be an array of [i, j, k, scalar] entries");
    for (const auto& e : co) {
        if (!e.is_array() || e.size() != 4 || !e[3].is_string())
            bad("coaction entries must be [i, j, k, scalar-string]");
        size_t i = index_in(e[0], m, "coaction");
        size_t p = index_in(e[1], m, "coaction");
        size_t k = index_in(e[2], n, "coaction");
        a.coaction[i][p][k] = a.coaction[i][p][k] + parse_scalar(e[3].get<std::string>(), f);
    }

    auto violations = verify_comodule_algebra(a);
    if (!violations.empty())
        throw ValidationError("comodule algebra file fails verification: " + violations.front());
    return a;
}

Json sigma_to_json(const SigmaTable& s) {
    Json j;
    j["field"] = s.host.field()->name();
    j["t_vars"] = s.t_ring->vars();
    auto table = [&](const std::vector<std::vector<RatFunc>>& t) {
        Json rows = Json::array();
        for (const auto& row : t) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(ratfunc_str(v));
            rows.push_back(r);
        }
        return rows;
    };
    j["sigma"] = table(s.sigma);
    j["sigma_inv"] = table(s.sigma_inv);
    Json gens = Json::array();
    for (const auto& g : generic_base_generators(s)) {
        Json e;
        e["label"] = g.label;
        e["value"] = ratfunc_str(g.value);
        gens.push_back(e);
    }
    j["generators"] = gens;
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open file: " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON in " + path);
    return j;
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

HopfAlgebra load_hopf(const std::string& path) { return hopf_from_json(load_json(path)); }

TwoCocycle load_cocycle(const std::string& path) {
    return cocycle_from_json(load_json(path),
                             std::filesystem::path(path).parent_path().string());
}

ComoduleAlgebra load_comodule(const std::string& path) {
    return comodule_from_json(load_json(path),
                              std::filesystem::path(path).parent_path().string());
}

}  // namespace hopfid
