// Acceptance gate: eight end-to-end criteria over the library, printed one
// PASS/FAIL line each. argv[1] = fixture directory. Exit code = number of
// failed criteria. Timed criteria fail when they overrun their budget.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "leibniz/json_io.hpp"

using namespace leibniz;

namespace {

std::string g_dir;
TolerancePolicy g_tol;

struct Gate {
    std::vector<std::string> fails;
    void check(bool ok, const std::string& what) {
        if (!ok) fails.push_back(what);
    }
};

Scalar q(long num, long den = 1) { return Scalar::exact(num) / Scalar::exact(den); }

CyclicPresentation pres3(Scalar a, Scalar b) {
    return CyclicPresentation{3, {std::move(a), std::move(b)}};
}

LeibnizAlgebra load(const std::string& name) {
    return io::load_algebra_file(g_dir + "/" + name).algebra;
}

Subspace span_rows(std::vector<std::vector<Scalar>> rows, Backend b) {
    return Subspace::span_of(Matrix::from_rows(std::move(rows), b), g_tol);
}

Subspace square_span(Backend b) {  // span{a^2, a^3} in dimension 3
    Scalar z = Scalar::zero(b), o = Scalar::one(b);
    return span_rows({{z, o, z}, {z, z, o}}, b);
}

// ---------------------------------------------------------------- criterion 1

void c1_trichotomy(Gate& g) {
    // 21x21 grid of half-integer rational pairs: the class is total and
    // matches the defining condition of exactly one branch.
    for (long k1 = -10; k1 <= 10; ++k1)
        for (long k2 = -10; k2 <= 10; ++k2) {
            CanonicalClass c = classify3(pres3(q(k1, 2), q(k2, 2)), g_tol);
            ClassTag expect = k1 != 0   ? ClassTag::type3
                              : k2 != 0 ? ClassTag::type2
                                        : ClassTag::nilpotent;
            g.check(c.tag == expect, "grid point (" + std::to_string(k1) + "/2," +
                                         std::to_string(k2) + "/2) got the wrong class");
            if (c.tag == ClassTag::type3) {
                double a = std::arg(c.gamma);
                g.check(std::abs(c.gamma) <= 1e-12 || (a >= 0.0 && a < M_PI),
                        "gamma not normalized into the upper half-plane on the grid");
            }
        }

    std::mt19937 rng(416);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    auto nonzero = [&] {
        double re = u(rng), im = u(rng);
        while (std::hypot(re, im) < 1e-3) re = u(rng), im = u(rng);
        return std::complex<double>(re, im);
    };
    for (int it = 0; it < 200; ++it) {
        std::complex<double> alpha = it % 4 == 0 ? 0.0 : nonzero();
        std::complex<double> beta = it % 8 == 0 ? 0.0 : nonzero();
        CanonicalClass c = classify3(pres3(Scalar::fp(alpha), Scalar::fp(beta)), g_tol);
        ClassTag expect = alpha != 0.0  ? ClassTag::type3
                          : beta != 0.0 ? ClassTag::type2
                                        : ClassTag::nilpotent;
        g.check(c.tag == expect, "random float pair got the wrong class");
        if (c.tag == ClassTag::type3) {
            double a = std::arg(c.gamma);
            g.check(std::abs(c.gamma) <= 1e-12 || (a >= 0.0 && a < M_PI),
                    "gamma not normalized on a random pair");
        }
    }

    // gamma and -gamma present the same algebra
    for (int it = 0; it < 50; ++it) {
        std::complex<double> gm = nonzero();
        CanonicalClass cp = classify3(pres3(Scalar::fp(1.0), Scalar::fp(gm)), g_tol);
        CanonicalClass cm = classify3(pres3(Scalar::fp(1.0), Scalar::fp(-gm)), g_tol);
        g.check(class_equal(cp, cm, g_tol), "classes of +gamma and -gamma must coincide");
    }

    // distinct |gamma| on alpha=1 gives distinct classes
    std::uniform_real_distribution<double> mod(0.2, 3.0), ph(0.0, 6.28318);
    for (int it = 0; it < 50; ++it) {
        double m1 = mod(rng), m2 = mod(rng);
        while (std::abs(m1 - m2) < 0.1) m2 = mod(rng);
        std::complex<double> g1 = std::polar(m1, ph(rng)), g2 = std::polar(m2, ph(rng));
        CanonicalClass c1 = classify3(pres3(Scalar::fp(1.0), Scalar::fp(g1)), g_tol);
        CanonicalClass c2 = classify3(pres3(Scalar::fp(1.0), Scalar::fp(g2)), g_tol);
        g.check(!class_equal(c1, c2, g_tol),
                "different |gamma| values must land in different classes");
    }
}

// ---------------------------------------------------------------- criterion 2

void c2_maximals_table(Gate& g) {
    const Backend ex = Backend::exact;
    Scalar z = q(0), o = q(1), i1 = Scalar::exact(0, 1);
    Subspace a2 = square_span(ex);

    // a*a^3 = 0: the square is the only maximal subalgebra and the Frattini
    auto m0 = maximal_subalgebras(pres3(q(0), q(0)), g_tol);
    g.check(m0.exact_path, "nilpotent row must verify its roots exactly");
    g.check(m0.maximals.size() == 1 && m0.maximals[0].equals(a2, g_tol),
            "nilpotent row: single maximal = the square");
    g.check(m0.frattini.equals(a2, g_tol), "nilpotent row: Frattini = the square");
    g.check(m0.elementary == ElementaryVerdict::no, "nilpotent row is not elementary");
    g.check(frattini_oracle(pres3(q(0), q(0)), g_tol).equals(m0.frattini, g_tol),
            "nilpotent row: oracle Frattini agrees");

    // a*a^3 = a^3: maximals {A^2, span{a - a^2, a - a^3}}, Frattini span{a^2 - a^3}
    auto m2 = maximal_subalgebras(pres3(q(0), q(1)), g_tol);
    g.check(m2.exact_path, "idempotent row must verify its roots exactly");
    g.check(m2.maximals.size() == 2, "idempotent row has two maximal subalgebras");
    Subspace plane = span_rows({{o, -o, z}, {o, z, -o}}, ex);
    size_t hits_sq = 0, hits_pl = 0;
    for (const Subspace& s : m2.maximals) {
        if (s.equals(a2, g_tol)) ++hits_sq;
        if (s.equals(plane, g_tol)) ++hits_pl;
    }
    g.check(hits_sq == 1 && hits_pl == 1, "idempotent row: listed maximals reproduced");
    g.check(m2.frattini.equals(span_rows({{z, o, -o}}, ex), g_tol),
            "idempotent row: Frattini = span{a^2 - a^3}");
    g.check(m2.elementary == ElementaryVerdict::no, "idempotent row is not elementary");
    g.check(frattini_oracle(pres3(q(0), q(1)), g_tol).equals(m2.frattini, g_tol),
            "idempotent row: oracle Frattini agrees");

    // a*a^3 = a^2 + 2i a^3: maximals {A^2, span{ia - a^2, a + a^3}},
    // Frattini span{ia^2 - a^3}
    auto mi = maximal_subalgebras(pres3(q(1), Scalar::exact(0, 2)), g_tol);
    g.check(mi.exact_path, "double-root row must verify its roots exactly");
    g.check(mi.maximals.size() == 2, "double-root row has two maximal subalgebras");
    Subspace slant = span_rows({{i1, -o, z}, {o, z, o}}, ex);
    hits_sq = hits_pl = 0;
    for (const Subspace& s : mi.maximals) {
        if (s.equals(a2, g_tol)) ++hits_sq;
        if (s.equals(slant, g_tol)) ++hits_pl;
    }
    g.check(hits_sq == 1 && hits_pl == 1, "double-root row: listed maximals reproduced");
    g.check(mi.frattini.equals(span_rows({{z, i1, -o}}, ex), g_tol),
            "double-root row: Frattini = span{ia^2 - a^3}");
    g.check(mi.elementary == ElementaryVerdict::no, "double-root row is not elementary");
    g.check(frattini_oracle(pres3(q(1), Scalar::exact(0, 2)), g_tol).equals(mi.frattini, g_tol),
            "double-root row: oracle Frattini agrees");

    // generic gamma: three maximals {A^2, span{r a^2 - a^3, a + r' a^2}},
    // Frattini 0, elementary
    const std::complex<double> gammas[] = {{1.0, 0.0}, {3.0, 1.0}};
    const Scalar betas[] = {q(1), Scalar::exact(3, 1)};
    for (int row = 0; row < 2; ++row) {
        std::complex<double> gm = gammas[row];
        CyclicPresentation p = pres3(q(1), betas[row]);
        auto mg = maximal_subalgebras(p, g_tol);
        g.check(!mg.exact_path, "generic row takes the float path");
        g.check(mg.maximals.size() == 3, "generic row has three maximal subalgebras");
        std::complex<double> disc = std::sqrt(gm * gm + 4.0);
        std::complex<double> r1 = (gm + disc) / 2.0, r2 = (gm - disc) / 2.0;
        const Backend fl = Backend::floating;
        Scalar zf = Scalar::fp(0.0), of = Scalar::fp(1.0);
        std::vector<Subspace> expected = {
            square_span(fl),
            span_rows({{zf, Scalar::fp(r1), -of}, {of, Scalar::fp(r2), zf}}, fl),
            span_rows({{zf, Scalar::fp(r2), -of}, {of, Scalar::fp(r1), zf}}, fl)};
        for (const Subspace& want : expected) {
            size_t hits = 0;
            for (const Subspace& got : mg.maximals)
                if (got.equals(want, g_tol)) ++hits;
            g.check(hits == 1, "generic row: a listed maximal was not reproduced");
        }
        g.check(mg.frattini.dim() == 0, "generic row: Frattini is zero");
        g.check(mg.elementary == ElementaryVerdict::yes, "generic row is elementary");
        g.check(frattini_oracle(p, g_tol).dim() == 0, "generic row: oracle Frattini agrees");
    }
}

// ---------------------------------------------------------------- criterion 3

void c3_engel_cartan(Gate& g) {
    const Backend ex = Backend::exact;
    Scalar z = q(0), o = q(1);
    Subspace full = Subspace::full(3, ex);

    struct Row {
        CyclicPresentation p;
        Subspace engel_of_a;
        bool idempotent_type;
    };
    std::vector<Row> rows;
    // a*a^3 = a^3: E(a) = span{a - a^3, a^2 - a^3}
    rows.push_back({pres3(q(0), q(1)), span_rows({{o, z, -o}, {z, o, -o}}, ex), true});
    // a*a^3 = a^2 + gamma a^3: E(a) = span{a + gamma a^2 - a^3}
    for (Scalar gm : {q(0), q(1), Scalar::exact(0, 2)})
        rows.push_back({pres3(q(1), gm), span_rows({{o, gm, -o}}, ex), false});

    for (const Row& row : rows) {
        LeibnizAlgebra a = build_cyclic(row.p);
        Element gen = a.basis_element(0);
        Subspace engel = engel_subalgebra(a, gen, g_tol);
        g.check(engel.equals(row.engel_of_a, g_tol),
                "Engel subalgebra of the generator has the listed span");

        Subspace cartan = cartan_cyclic(row.p, g_tol);
        g.check(cartan.equals(engel, g_tol), "Cartan = Engel subalgebra of the generator");

        // integer scan finds exactly the Cartan and the whole algebra
        EngelScanResult scan = engel_scan(a, -2, 2, g_tol);
        g.check(scan.distinct.size() == 2, "integer scan yields exactly two Engel subalgebras");
        size_t cart_hits = 0, full_hits = 0;
        for (const Subspace& s : scan.distinct) {
            if (s.equals(cartan, g_tol)) ++cart_hits;
            if (s.equals(full, g_tol)) ++full_hits;
        }
        g.check(cart_hits == 1 && full_hits == 1, "scan results are {Cartan, whole algebra}");
        g.check(scan.minimal_indices.size() == 1 &&
                    scan.distinct[scan.minimal_indices[0]].equals(cartan, g_tol),
                "the Cartan is the unique minimal Engel subalgebra");

        // nilpotent and self-normalizing (two-sided)
        LeibnizAlgebra inside = induced_subalgebra(a, cartan, g_tol);
        g.check(lower_central_series(inside, g_tol).verdict == SeriesVerdict::nilpotent,
                "Cartan subalgebra is nilpotent");
        NormalizerReport nrm = normalizers(a, cartan, g_tol);
        g.check(nrm.both.equals(cartan, g_tol), "Cartan is self-normalizing");
        g.check(nrm.left.equals(full, g_tol), "left normalizer of the Cartan is everything");
        if (row.idempotent_type)
            g.check(nrm.right.equals(cartan, g_tol),
                    "right normalizer of the Cartan is the Cartan itself");
    }
}

// ---------------------------------------------------------------- criterion 4

void c4_counterexamples(Gate& g) {
    LeibnizAlgebra t2 = build_cyclic(pres3(q(0), q(1)));
    auto m2 = maximal_subalgebras(pres3(q(0), q(1)), g_tol);
    MaximalIdealSummary ids = nilpotency_via_maximals(t2, m2.maximals, g_tol);
    g.check(ids.all_left, "every maximal subalgebra is a left ideal");
    g.check(!ids.all_right, "not every maximal subalgebra is a right ideal");
    g.check(lower_central_series(t2, g_tol).verdict != SeriesVerdict::nilpotent,
            "the algebra itself is not nilpotent");

    const char* non_nilpotent[] = {
        "cyclic3_type2.json",          "cyclic3_type3_gamma0.json",
        "cyclic3_type3_gamma1.json",   "cyclic3_type3_gamma2i.json",
        "cyclic3_type3_gamma3plusi.json", "cyclic3_type2_float.json",
        "cyclic3_type3_gamma_sqrt2i_float.json"};
    for (const char* name : non_nilpotent) {
        LeibnizAlgebra a = load(name);
        g.check(lower_central_series(a, g_tol).verdict != SeriesVerdict::nilpotent,
                std::string(name) + ": must not be nilpotent");
        SeriesReport rn = right_normed_series(a, g_tol);
        g.check(rn.vanishes_at.has_value() && *rn.vanishes_at == 3,
                std::string(name) + ": right-normed chain dies at term 3");
        g.check(rn.verdict == SeriesVerdict::neither_at_cutoff,
                std::string(name) + ": right-normed vanishing must certify nothing");
        EngelReport ec = engel_condition(a, Side::right, g_tol);
        g.check(ec.all_nilpotent && ec.certification == "exact",
                std::string(name) + ": all right multiplications nilpotent (certified)");
        EngelReport el = engel_condition(a, Side::left, g_tol);
        g.check(!el.all_nilpotent,
                std::string(name) + ": some left multiplication is not nilpotent");
    }

    LeibnizAlgebra nil = load("cyclic3_nilpotent.json");
    g.check(lower_central_series(nil, g_tol).verdict == SeriesVerdict::nilpotent,
            "nilpotent fixture is nilpotent");
    auto mn = maximal_subalgebras(pres3(q(0), q(0)), g_tol);
    g.check(nilpotency_via_maximals(nil, mn.maximals, g_tol).all_two_sided,
            "nilpotent fixture: every maximal subalgebra is a two-sided ideal");
}

// ---------------------------------------------------------------- criterion 5

void c5_derivations(Gate& g) {
    auto ex = [](long v) { return Scalar::exact(v); };
    auto m3 = [](std::vector<std::vector<Scalar>> rows) {
        return Matrix::from_rows(std::move(rows), Backend::exact);
    };

    LeibnizAlgebra nil = build_cyclic(pres3(q(0), q(0)));
    DerivationSpace dn = derivations(nil, g_tol);
    g.check(dn.basis.size() == 3 && dn.inner_basis.size() == 1 && dn.outer_dim == 2,
            "nilpotent family: derivation dims (3, inner 1, outer 2)");
    const Matrix nil_dirs[] = {
        m3({{ex(1), ex(0), ex(0)}, {ex(0), ex(2), ex(0)}, {ex(0), ex(0), ex(3)}}),
        m3({{ex(0), ex(0), ex(0)}, {ex(1), ex(0), ex(0)}, {ex(0), ex(1), ex(0)}}),
        m3({{ex(0), ex(0), ex(0)}, {ex(0), ex(0), ex(0)}, {ex(1), ex(0), ex(0)}})};
    for (const Matrix& d : nil_dirs)
        g.check(is_derivation(nil, d, g_tol),
                "nilpotent family: parameter direction is a derivation");

    LeibnizAlgebra t2 = build_cyclic(pres3(q(0), q(1)));
    DerivationSpace d2 = derivations(t2, g_tol);
    g.check(d2.basis.size() == 2 && d2.inner_basis.size() == 1 && d2.outer_dim == 1,
            "idempotent family: derivation dims (2, inner 1, outer 1)");
    for (auto [a2, a3] : {std::pair<long, long>{1, 0}, {0, 1}}) {
        Matrix d = m3({{ex(0), ex(0), ex(0)},
                       {ex(a2), ex(0), ex(0)},
                       {ex(a3), ex(a2 + a3), ex(a2 + a3)}});
        g.check(is_derivation(t2, d, g_tol),
                "idempotent family: unit-vector instantiation is a derivation");
    }

    for (Scalar gm : {q(1), Scalar::exact(0, 2)}) {
        LeibnizAlgebra t3 = build_cyclic(pres3(q(1), gm));
        DerivationSpace d3 = derivations(t3, g_tol);
        g.check(d3.basis.size() == 2 && d3.inner_basis.size() == 1 && d3.outer_dim == 1,
                "mixed family: derivation dims (2, inner 1, outer 1)");
        Scalar g2p1 = gm * gm + q(1);
        for (auto [u2, u3] : {std::pair<long, long>{1, 0}, {0, 1}}) {
            Scalar a2 = ex(u2), a3 = ex(u3);
            Matrix d = m3({{ex(0), ex(0), ex(0)},
                           {a2, a3, a2 + gm * a3},
                           {a3, a2 + gm * a3, gm * a2 + g2p1 * a3}});
            g.check(is_derivation(t3, d, g_tol),
                    "mixed family: unit-vector instantiation is a derivation");
        }
    }
}

// ---------------------------------------------------------------- criterion 6

void c6_killing(Gate& g) {
    Subspace a2 = square_span(Backend::exact);

    KillingReport k0 = killing(build_cyclic(pres3(q(0), q(0))), g_tol);
    g.check(k0.trivial && k0.gram.is_zero(), "nilpotent: Killing form vanishes identically");

    LeibnizAlgebra t2 = build_cyclic(pres3(q(0), q(1)));
    KillingReport k2 = killing(t2, g_tol);
    g.check(k2.gram.at(0, 0) == q(1), "idempotent: kappa(a,a) = 1");
    g.check(k2.radical.equals(a2, g_tol), "idempotent: radical = the square");
    g.check(k2.radical_equals_leib, "idempotent: radical = Leib ideal");
    g.check(leib_ideal(t2, g_tol).equals(k2.radical, g_tol),
            "idempotent: Leib ideal matches the radical");

    KillingReport k31 = killing(build_cyclic(pres3(q(1), q(1))), g_tol);
    g.check(k31.gram.at(0, 0) == q(3), "gamma=1: kappa(a,a) = gamma^2 + 2 = 3");
    g.check(k31.radical.equals(a2, g_tol), "gamma=1: radical = the square");

    KillingReport k3i = killing(build_cyclic(pres3(q(1), Scalar::exact(0, 2))), g_tol);
    g.check(k3i.gram.at(0, 0) == q(-2), "gamma=2i: kappa(a,a) = gamma^2 + 2 = -2");

    LeibnizAlgebra vanishing = load("cyclic3_type3_gamma_sqrt2i_float.json");
    KillingReport kv = killing(vanishing, g_tol);
    g.check(kv.gram.near_zero(1e-9), "gamma=sqrt(2)i: Gram residuals below 1e-9");
    g.check(kv.trivial && kv.radical_equals_whole && kv.radical.dim() == 3,
            "gamma=sqrt(2)i: radical is the whole algebra");

    SemisimplicityReport s2 = semisimplicity_counterexamples(t2, g_tol);
    g.check(s2.solvable && s2.killing_radical_equals_leib,
            "solvable algebra whose Killing radical is only the Leib ideal");
    SemisimplicityReport sv = semisimplicity_counterexamples(vanishing, g_tol);
    g.check(sv.solvable && sv.killing_radical_is_whole,
            "solvable algebra whose Killing form vanishes outright");
}

// ---------------------------------------------------------------- criterion 7

void c7_cyclicity(Gate& g) {
    const char* not_cyclic[] = {
        "cyclicity_single_square.json",     "cyclicity_symmetric_pair.json",
        "cyclicity_skew_pair.json",         "cyclicity_scaled_pair.json",
        "cyclicity_one_axis_action.json",   "cyclicity_diag_action_weighted.json",
        "cyclicity_action_with_square.json", "cyclicity_full_family.json",
        "cyclicity_diag_equal.json"};
    for (const char* name : not_cyclic) {
        LeibnizAlgebra a = load(name);
        g.check(verify_leibniz(a, g_tol).ok, std::string(name) + ": fixture tensor is valid");
        CyclicityResult cy = is_cyclic(a, g_tol);
        g.check(cy.method == CyclicMethod::grid, std::string(name) + ": grid method in use");
        g.check(!cy.cyclic, std::string(name) + ": must not be cyclic");
    }

    struct CyclicRow {
        const char* file;
        ClassTag tag;
        std::complex<double> gamma;
        double eps;
    };
    const CyclicRow cyclic_rows[] = {
        {"cyclicity_chain.json", ClassTag::nilpotent, {0, 0}, 0},
        {"cyclicity_diag_opposite.json", ClassTag::type3, {0.0, 0.0}, 1e-9},
        {"cyclicity_diag_double.json", ClassTag::type3, {0.0, 3.0 / std::sqrt(2.0)}, 1e-6},
        {"cyclicity_shear.json", ClassTag::type3, {0.0, 2.0}, 1e-9},
        {"cyclicity_shift_square.json", ClassTag::type2, {0, 0}, 0},
    };
    for (const CyclicRow& row : cyclic_rows) {
        LeibnizAlgebra a = load(row.file);
        g.check(verify_leibniz(a, g_tol).ok, std::string(row.file) + ": fixture tensor is valid");
        CyclicityResult cy = is_cyclic(a, g_tol);
        g.check(cy.method == CyclicMethod::grid, std::string(row.file) + ": grid method in use");
        g.check(cy.cyclic && cy.generator.has_value(),
                std::string(row.file) + ": must be cyclic with a generator");
        if (!cy.cyclic || !cy.generator) continue;

        // the generator really generates: its powers span everything
        std::vector<std::vector<Scalar>> pw;
        for (const Element& e : powers_of(a, *cy.generator)) pw.push_back(e);
        g.check(Subspace::span_of(Matrix::from_rows(pw, a.backend()), g_tol).dim() == a.dim(),
                std::string(row.file) + ": generator powers span the algebra");

        try {
            CyclicPresentation p = presentation_of_generator(a, *cy.generator, g_tol);
            CanonicalClass cls = classify3(p, g_tol);
            g.check(cls.tag == row.tag, std::string(row.file) + ": expected class reached");
            if (row.tag == ClassTag::type3)
                g.check(std::abs(cls.gamma - row.gamma) < row.eps,
                        std::string(row.file) + ": gamma lands at the predicted value");
        } catch (const std::exception& e) {
            g.check(false, std::string(row.file) + ": presentation failed: " + e.what());
        }
    }
}

// ---------------------------------------------------------------- criterion 8

void c8_random_properties(Gate& g) {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9), coord(-3, 3);

    for (int it = 0; it < 50; ++it) {
        size_t n = it % 2 == 0 ? 3 : 4;
        CyclicPresentation p;
        p.dim = n;
        for (size_t k = 0; k + 1 < n; ++k) p.coeffs.push_back(q(num(rng), den(rng)));
        LeibnizAlgebra a = build_cyclic(p);
        g.check(verify_leibniz(a, g_tol).ok, "random presentation satisfies the identity");

        Element gen = a.basis_element(0);
        FittingDecomposition f = fitting(a, gen, g_tol);
        g.check(f.null_part.dim() + f.range_part.dim() == n,
                "Fitting parts of the generator sum to the dimension");
        Element x;
        for (size_t i = 0; i < n; ++i) x.push_back(q(coord(rng)));
        bool zero = true;
        for (const Scalar& c : x)
            if (!c.is_zero()) zero = false;
        if (zero) x[0] = q(1);
        FittingDecomposition fx = fitting(a, x, g_tol);
        g.check(fx.null_part.dim() + fx.range_part.dim() == n,
                "Fitting parts of a random element sum to the dimension");

        auto m = maximal_subalgebras(p, g_tol);
        Subspace lhs = m.frattini, rhs = frattini_oracle(p, g_tol);
        if (lhs.basis().backend() != rhs.basis().backend()) {
            lhs = lhs.to_float();
            rhs = rhs.to_float();
        }
        g.check(lhs.equals(rhs, g_tol),
                "Frattini via the stripped polynomial = intersection of maximals");

        Subspace eg = engel_subalgebra(a, gen, g_tol);
        Subspace ex = engel_subalgebra(a, x, g_tol);
        g.check(is_subalgebra(a, eg, g_tol) && is_subalgebra(a, ex, g_tol),
                "Engel subalgebras are closed under the product");

        Matrix lx = a.left_mult(x);
        Matrix la = a.left_mult(gen);
        g.check((lx - la.scaled(x[0])).is_zero(),
                "left multiplication is the first coordinate times L_a");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <fixture-dir>\n", argv[0]);
        return 64;
    }
    g_dir = argv[1];

    struct Row {
        int id;
        const char* name;
        void (*fn)(Gate&);
        double budget_s;  // 0 = untimed
    };
    const Row rows[] = {
        {1, "classification trichotomy", c1_trichotomy, 1.0},
        {2, "maximal and Frattini subalgebra table", c2_maximals_table, 0.0},
        {3, "Engel and Cartan subalgebras", c3_engel_cartan, 0.0},
        {4, "ideal-status and series counterexamples", c4_counterexamples, 0.0},
        {5, "derivation algebra dimensions", c5_derivations, 0.0},
        {6, "Killing form radical", c6_killing, 0.0},
        {7, "single-generator decisions", c7_cyclicity, 5.0},
        {8, "random presentation properties", c8_random_properties, 10.0},
    };

    int failed = 0;
    for (const Row& row : rows) {
        Gate gate;
        auto t0 = std::chrono::steady_clock::now();
        try {
            row.fn(gate);
        } catch (const std::exception& e) {
            gate.check(false, std::string("unexpected exception: ") + e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (row.budget_s > 0 && secs > row.budget_s)
            gate.check(false, "runtime " + std::to_string(secs) + "s exceeds budget " +
                                  std::to_string(row.budget_s) + "s");
        if (gate.fails.empty()) {
            std::printf("criterion %d (%s): PASS [%.2fs]\n", row.id, row.name, secs);
        } else {
            std::string detail = gate.fails[0];
            if (gate.fails.size() > 1)
                detail += " (+" + std::to_string(gate.fails.size() - 1) + " more)";
            std::printf("criterion %d (%s): FAIL - %s\n", row.id, row.name, detail.c_str());
            ++failed;
        }
    }
    return failed;
}
