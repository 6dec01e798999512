#include "leibniz/commands.hpp"

#include <sstream>

namespace leibniz {

namespace {

using io::json;

io::ParsedAlgebra apply_backend(const io::ParsedAlgebra& in, const CommandOptions& opt) {
    if (!opt.force_backend || *opt.force_backend == in.algebra.backend()) return in;
    if (*opt.force_backend == Backend::exact)
        throw parse_error("cannot promote float input to the exact backend");
    io::ParsedAlgebra out{in.algebra.to_float(), std::nullopt};
    if (in.presentation) out.presentation = in.presentation->to_float();
    return out;
}

// Returns a failure outcome when the tensor is invalid and that is not
// explicitly allowed; otherwise nullopt and the caller proceeds.
std::optional<CommandOutcome> gate_on_leibniz(const io::ParsedAlgebra& in,
                                              const CommandOptions& opt, json& report) {
    LeibnizCheckResult chk = verify_leibniz(in.algebra, opt.tol);
    report["leibniz"] = io::check_to_json(chk);
    if (!chk.ok && !opt.allow_invalid) {
        CommandOutcome out;
        out.exit_code = exit_property_failure;
        out.report = report;
        out.report["error"] =
            "structure tensor violates the Leibniz identity (use --allow-invalid to proceed)";
        return out;
    }
    return std::nullopt;
}

// Cyclic presentation of the input: from the file if it was in cyclic form,
// otherwise recovered through a generator search. Throws parse_error when the
// algebra is not cyclic (the command cannot apply).
CyclicPresentation require_presentation(const io::ParsedAlgebra& in, const CommandOptions& opt,
                                        json* report) {
    if (in.presentation) return *in.presentation;
    CyclicityResult cy = is_cyclic(in.algebra, opt.tol);
    if (report) (*report)["cyclicity"] = io::cyclicity_to_json(cy);
    if (!cy.cyclic) throw parse_error("input algebra is not cyclic");
    return presentation_of_generator(in.algebra, *cy.generator, opt.tol);
}

}  // namespace

Element parse_element_text(const std::string& text, size_t dim, Backend b) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != dim)
        throw parse_error("element needs exactly " + std::to_string(dim) + " coordinates");
    Element e;
    e.reserve(dim);
    for (const std::string& p : parts) {
        if (b == Backend::exact) {
            e.push_back(parse_exact_scalar(p));
        } else {
            size_t used = 0;
            double v;
            try {
                v = std::stod(p, &used);
            } catch (const std::exception&) {
                throw parse_error("bad float coordinate: " + p);
            }
            while (used < p.size() && std::isspace(static_cast<unsigned char>(p[used]))) ++used;
            if (used != p.size()) throw parse_error("bad float coordinate: " + p);
            e.push_back(Scalar::fp(v));
        }
    }
    return e;
}

CommandOutcome cmd_check(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    LeibnizCheckResult chk = verify_leibniz(in.algebra, opt.tol);
    CommandOutcome out;
    out.report = io::check_to_json(chk);
    out.exit_code = chk.ok ? exit_ok : exit_property_failure;
    return out;
}

CommandOutcome cmd_classify(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    if (in.algebra.dim() != 3)
        throw parse_error("classification covers 3-dimensional algebras only");
    CyclicPresentation p = require_presentation(in, opt, &out.report);
    out.report["presentation"] = io::presentation_to_json(p);
    out.report["classification"] = io::class_to_json(classify3(p, opt.tol));
    return out;
}

CommandOutcome cmd_series(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    out.report["lower_central"] = io::series_to_json(lower_central_series(in.algebra, opt.tol));
    out.report["derived"] = io::series_to_json(derived_series(in.algebra, opt.tol));
    out.report["right_normed"] = io::series_to_json(right_normed_series(in.algebra, opt.tol));
    return out;
}

CommandOutcome cmd_engel(const io::ParsedAlgebra& raw, const std::string& element_text,
                         const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    Element x = parse_element_text(element_text, in.algebra.dim(), in.algebra.backend());
    out.report["element"] = io::element_to_json(x);
    out.report["engel"] = io::subspace_to_json(engel_subalgebra(in.algebra, x, opt.tol));
    FittingDecomposition f = fitting(in.algebra, x, opt.tol);
    json fj;
    fj["null_part"] = io::subspace_to_json(f.null_part);
    fj["range_part"] = io::subspace_to_json(f.range_part);
    out.report["fitting"] = std::move(fj);
    return out;
}

CommandOutcome cmd_cartan(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    CyclicPresentation p = require_presentation(in, opt, &out.report);
    Subspace cartan = cartan_cyclic(p, opt.tol);
    out.report["cartan"] = io::subspace_to_json(cartan);
    LeibnizAlgebra a = build_cyclic(p);
    out.report["normalizers"] = io::normalizers_to_json(normalizers(a, cartan, opt.tol));
    return out;
}

CommandOutcome cmd_maximals(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    CyclicPresentation p = require_presentation(in, opt, &out.report);
    MaximalsReport rep = maximal_subalgebras(p, opt.tol);
    out.report["maximals_report"] = io::maximals_to_json(rep);
    LeibnizAlgebra a = build_cyclic(p);
    if (a.backend() != rep.maximals.front().backend()) a = a.to_float();
    MaximalIdealSummary ideals = nilpotency_via_maximals(a, rep.maximals, opt.tol);
    json ij;
    ij["all_left"] = ideals.all_left;
    ij["all_right"] = ideals.all_right;
    ij["all_two_sided"] = ideals.all_two_sided;
    out.report["ideal_status"] = std::move(ij);
    return out;
}

CommandOutcome cmd_derivations(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    out.report["derivations"] = io::derivations_to_json(derivations(in.algebra, opt.tol));
    return out;
}

CommandOutcome cmd_killing(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    out.report["killing"] = io::killing_to_json(killing(in.algebra, opt.tol));
    out.report["semisimplicity"] =
        io::semisimplicity_to_json(semisimplicity_counterexamples(in.algebra, opt.tol));
    return out;
}

CommandOutcome cmd_is_cyclic(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    if (auto bad = gate_on_leibniz(in, opt, out.report)) return *bad;
    CyclicityResult cy = is_cyclic(in.algebra, opt.tol);
    out.report["cyclicity"] = io::cyclicity_to_json(cy);
    if (cy.cyclic)
        out.report["presentation"] = io::presentation_to_json(
            presentation_of_generator(in.algebra, *cy.generator, opt.tol));
    return out;
}

CommandOutcome cmd_analyze(const io::ParsedAlgebra& raw, const CommandOptions& opt) {
    io::ParsedAlgebra in = apply_backend(raw, opt);
    CommandOutcome out;
    json& rep = out.report;
    rep["dim"] = in.algebra.dim();
    rep["scalar"] = backend_name(in.algebra.backend());
    if (auto bad = gate_on_leibniz(in, opt, rep)) return *bad;
    const TolerancePolicy& tol = opt.tol;
    const LeibnizAlgebra& a = in.algebra;

    rep["lie"] = is_lie(a, tol);
    rep["square"] = io::subspace_to_json(algebra_square(a, tol));
    rep["leib"] = io::subspace_to_json(leib_ideal(a, tol));

    CyclicityResult cy = is_cyclic(a, tol);
    rep["cyclicity"] = io::cyclicity_to_json(cy);
    std::optional<CyclicPresentation> pres = in.presentation;
    if (!pres && cy.cyclic) pres = presentation_of_generator(a, *cy.generator, tol);
    if (pres)
        rep["presentation"] = io::presentation_to_json(*pres);
    else
        rep["presentation"] = json{{"skipped", "algebra is not cyclic"}};

    if (pres && a.dim() == 3)
        rep["classification"] = io::class_to_json(classify3(*pres, tol));
    else
        rep["classification"] =
            json{{"skipped", pres ? "classification covers dimension 3 only"
                                  : "algebra is not cyclic"}};

    json series;
    series["lower_central"] = io::series_to_json(lower_central_series(a, tol));
    series["derived"] = io::series_to_json(derived_series(a, tol));
    series["right_normed"] = io::series_to_json(right_normed_series(a, tol));
    rep["series"] = std::move(series);

    json engel;
    engel["left"] = io::engel_to_json(engel_condition(a, Side::left, tol));
    engel["right"] = io::engel_to_json(engel_condition(a, Side::right, tol));
    rep["engel_condition"] = std::move(engel);

    if (pres) {
        Subspace cartan = cartan_cyclic(*pres, tol);
        rep["cartan"] = io::subspace_to_json(cartan);
        LeibnizAlgebra built = build_cyclic(*pres);
        rep["cartan_normalizers"] = io::normalizers_to_json(normalizers(built, cartan, tol));
        MaximalsReport mx = maximal_subalgebras(*pres, tol);
        rep["maximals"] = io::maximals_to_json(mx);
        LeibnizAlgebra for_ideals =
            built.backend() == mx.frattini.backend() ? built : built.to_float();
        MaximalIdealSummary ideals = nilpotency_via_maximals(for_ideals, mx.maximals, tol);
        json ij;
        ij["all_left"] = ideals.all_left;
        ij["all_right"] = ideals.all_right;
        ij["all_two_sided"] = ideals.all_two_sided;
        rep["maximals_ideal_status"] = std::move(ij);
    } else {
        rep["cartan"] = json{{"skipped", "algebra is not cyclic"}};
        rep["maximals"] = json{{"skipped", "algebra is not cyclic"}};
    }

    rep["derivations"] = io::derivations_to_json(derivations(a, tol));
    rep["killing"] = io::killing_to_json(killing(a, tol));
    rep["semisimplicity"] = io::semisimplicity_to_json(semisimplicity_counterexamples(a, tol));
    return out;
}

}  // namespace leibniz
