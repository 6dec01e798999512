#include "leibniz/json_io.hpp"

#include <fstream>

namespace leibniz::io {

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return s.to_text();
    auto z = s.cplx();
    return json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()});
}

Scalar scalar_from_json(const json& j, Backend b) {
    if (b == Backend::exact) {
        if (!j.is_string())
            throw parse_error("exact scalar must be a string like \"p/q+r/s i\"");
        return parse_exact_scalar(j.get<std::string>());
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw parse_error("float scalar must be an array [re, im]");
    return Scalar::fp(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["ambient"] = s.ambient();
    j["dim"] = s.dim();
    j["basis"] = matrix_to_json(s.basis());
    return j;
}

Subspace subspace_from_json(const json& j, Backend b, const TolerancePolicy& tol) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
        throw parse_error("subspace needs \"ambient\" and \"basis\"");
    size_t ambient = j.at("ambient").get<size_t>();
    const json& basis = j.at("basis");
    if (!basis.is_array()) throw parse_error("subspace basis must be an array of vectors");
    Matrix rows(basis.size(), ambient, b);
    for (size_t i = 0; i < basis.size(); ++i) {
        const json& row = basis[i];
        if (!row.is_array() || row.size() != ambient)
            throw parse_error("subspace basis vector has wrong length");
        for (size_t k = 0; k < ambient; ++k) rows.at(i, k) = scalar_from_json(row[k], b);
    }
    return Subspace::span_of(rows, tol);
}

json element_to_json(const Element& e) {
    json arr = json::array();
    for (const Scalar& s : e) arr.push_back(scalar_to_json(s));
    return arr;
}

namespace {

Backend backend_from_json(const json& j) {
    if (!j.contains("scalar")) throw parse_error("missing \"scalar\" (\"exact\" or \"float\")");
    std::string s = j.at("scalar").get<std::string>();
    if (s == "exact") return Backend::exact;
    if (s == "float") return Backend::floating;
    throw parse_error("\"scalar\" must be \"exact\" or \"float\"");
}

ParsedAlgebra cyclic_from_json(const json& j) {
    Backend b = backend_from_json(j);
    size_t dim = j.at("dim").get<size_t>();
    if (!j.contains("coeffs")) throw parse_error("cyclic form needs \"coeffs\"");
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw parse_error("\"coeffs\" must be an array");
    if (dim >= 2 && coeffs.size() == dim)
        throw parse_error(
            "cyclic form takes alpha_2..alpha_n only (dim-1 coefficients); alpha_1 is "
            "structurally zero and must not be supplied");
    CyclicPresentation p;
    p.dim = dim;
    for (const json& c : coeffs) p.coeffs.push_back(scalar_from_json(c, b));
    p.validate();
    return ParsedAlgebra{build_cyclic(p), std::move(p)};
}

}  // namespace

ParsedAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("algebra file must be a JSON object");
    if (j.contains("type")) {
        std::string t = j.at("type").get<std::string>();
        if (t != "cyclic") throw parse_error("unknown algebra type: " + t);
        return cyclic_from_json(j);
    }
    Backend b = backend_from_json(j);
    if (!j.contains("dim")) throw parse_error("missing \"dim\"");
    size_t dim = j.at("dim").get<size_t>();
    if (dim == 0) throw parse_error("\"dim\" must be positive");
    LeibnizAlgebra a(dim, b);
    if (!j.contains("products")) throw parse_error("missing \"products\"");
    const json& prods = j.at("products");
    if (!prods.is_array()) throw parse_error("\"products\" must be an array");
    std::vector<bool> seen(dim * dim, false);
    for (const json& e : prods) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
            throw parse_error("product entry needs \"i\", \"j\", \"coeffs\"");
        long i = e.at("i").get<long>(), jj = e.at("j").get<long>();
        if (i < 1 || jj < 1 || size_t(i) > dim || size_t(jj) > dim)
            throw parse_error("product indices are 1-based and must lie in [1, dim]");
        if (seen[(i - 1) * dim + (jj - 1)])
            throw parse_error("duplicate product entry for (i,j)=(" + std::to_string(i) + "," +
                              std::to_string(jj) + ")");
        seen[(i - 1) * dim + (jj - 1)] = true;
        const json& coeffs = e.at("coeffs");
        if (!coeffs.is_array() || coeffs.size() != dim)
            throw parse_error("product coeffs must have length dim");
        for (size_t k = 0; k < dim; ++k)
            a.c(size_t(i - 1), size_t(jj - 1), k) = scalar_from_json(coeffs[k], b);
    }
    if (j.contains("labels")) {
        const json& labels = j.at("labels");
        if (!labels.is_array() || labels.size() != dim)
            throw parse_error("\"labels\" must list one name per basis element");
        std::vector<std::string> l;
        for (const json& s : labels) l.push_back(s.get<std::string>());
        a.set_labels(std::move(l));
    }
    return ParsedAlgebra{std::move(a), std::nullopt};
}

ParsedAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

json algebra_to_json(const LeibnizAlgebra& a) {
    json j;
    j["dim"] = a.dim();
    j["scalar"] = backend_name(a.backend());
    json prods = json::array();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t jj = 0; jj < a.dim(); ++jj) {
            bool nonzero = false;
            for (size_t k = 0; k < a.dim(); ++k)
                if (!a.c(i, jj, k).is_zero()) nonzero = true;
            if (!nonzero) continue;
            json e;
            e["i"] = i + 1;
            e["j"] = jj + 1;
            json coeffs = json::array();
            for (size_t k = 0; k < a.dim(); ++k) coeffs.push_back(scalar_to_json(a.c(i, jj, k)));
            e["coeffs"] = std::move(coeffs);
            prods.push_back(std::move(e));
        }
    j["products"] = std::move(prods);
    return j;
}

json presentation_to_json(const CyclicPresentation& p) {
    json j;
    j["type"] = "cyclic";
    j["dim"] = p.dim;
    j["scalar"] = backend_name(p.backend());
    json coeffs = json::array();
    for (const Scalar& s : p.coeffs) coeffs.push_back(scalar_to_json(s));
    j["coeffs"] = std::move(coeffs);
    return j;
}

json check_to_json(const LeibnizCheckResult& r) {
    json j;
    j["ok"] = r.ok;
    json v = json::array();
    for (const LeibnizViolation& x : r.violations) {
        json e;
        e["at"] = json::array({x.i + 1, x.j + 1, x.k + 1});
        e["residual"] = x.residual;
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    return j;
}

json series_to_json(const SeriesReport& r) {
    json j;
    j["kind"] = series_kind_name(r.kind);
    json terms = json::array();
    for (const Subspace& t : r.terms) terms.push_back(subspace_to_json(t));
    j["terms"] = std::move(terms);
    j["stabilized"] = r.stabilized;
    if (r.vanishes_at)
        j["vanishes_at"] = *r.vanishes_at;
    else
        j["vanishes_at"] = nullptr;
    j["verdict"] = series_verdict_name(r.verdict);
    return j;
}

json engel_to_json(const EngelReport& r) {
    json j;
    j["side"] = r.side == Side::left ? "left" : "right";
    j["all_nilpotent"] = r.all_nilpotent;
    json w = json::array();
    for (const Element& e : r.witnesses) w.push_back(element_to_json(e));
    j["witnesses"] = std::move(w);
    j["certification"] = r.certification;
    return j;
}

json ideal_to_json(const IdealCheckResult& r) {
    json j;
    j["left"] = r.left;
    j["right"] = r.right;
    j["two_sided"] = r.two_sided;
    return j;
}

json normalizers_to_json(const NormalizerReport& r) {
    json j;
    j["left"] = subspace_to_json(r.left);
    j["right"] = subspace_to_json(r.right);
    j["both"] = subspace_to_json(r.both);
    return j;
}

json cyclicity_to_json(const CyclicityResult& r) {
    json j;
    j["cyclic"] = r.cyclic;
    if (r.generator)
        j["generator"] = element_to_json(*r.generator);
    else
        j["generator"] = nullptr;
    j["method"] = r.method == CyclicMethod::grid ? "grid" : "randomized";
    j["failure_probability"] = r.failure_probability;
    return j;
}

json class_to_json(const CanonicalClass& c) {
    json j;
    j["class"] = class_tag_name(c.tag);
    if (c.tag == ClassTag::type3)
        j["gamma"] = json::array(
            {c.gamma.real() == 0.0 ? 0.0 : c.gamma.real(),
             c.gamma.imag() == 0.0 ? 0.0 : c.gamma.imag()});
    return j;
}

json maximals_to_json(const MaximalsReport& r) {
    json j;
    json m = json::array();
    for (const Subspace& s : r.maximals) m.push_back(subspace_to_json(s));
    j["maximals"] = std::move(m);
    j["frattini"] = subspace_to_json(r.frattini);
    json roots = json::array();
    for (const RootCluster& rc : r.roots.roots) {
        json e;
        e["lambda"] = json::array({rc.value.real() == 0.0 ? 0.0 : rc.value.real(),
                                   rc.value.imag() == 0.0 ? 0.0 : rc.value.imag()});
        e["mult"] = rc.multiplicity;
        roots.push_back(std::move(e));
    }
    j["roots"] = std::move(roots);
    j["elementary"] = elementary_verdict_name(r.elementary);
    j["exact_path"] = r.exact_path;
    return j;
}

json killing_to_json(const KillingReport& r) {
    json j;
    j["gram"] = matrix_to_json(r.gram);
    j["radical"] = subspace_to_json(r.radical);
    j["trivial"] = r.trivial;
    j["radical_equals_leib"] = r.radical_equals_leib;
    j["radical_equals_whole"] = r.radical_equals_whole;
    return j;
}

json derivations_to_json(const DerivationSpace& d) {
    json j;
    j["dim"] = d.basis.size();
    j["inner_dim"] = d.inner_basis.size();
    j["outer_dim"] = d.outer_dim;
    json basis = json::array();
    for (const Matrix& m : d.basis) basis.push_back(matrix_to_json(m));
    j["basis"] = std::move(basis);
    json inner = json::array();
    for (const Matrix& m : d.inner_basis) inner.push_back(matrix_to_json(m));
    j["inner_basis"] = std::move(inner);
    return j;
}

json semisimplicity_to_json(const SemisimplicityReport& r) {
    json j;
    j["solvable"] = r.solvable;
    j["killing_radical_equals_leib"] = r.killing_radical_equals_leib;
    j["killing_radical_is_whole"] = r.killing_radical_is_whole;
    return j;
}

}  // namespace leibniz::io
