#include "leibniz/subalgebras.hpp"

#include <algorithm>
#include <cmath>

#include "leibniz/series.hpp"

namespace leibniz {

Subspace engel_subalgebra(const LeibnizAlgebra& a, const Element& x,
                          const TolerancePolicy& tol) {
    Subspace e = generalized_kernel(a.left_mult(x), a.dim(), tol);
    if (!is_subalgebra(a, e, tol))
        throw math_error("Engel subspace not closed under the product");
    return e;
}

FittingDecomposition fitting(const LeibnizAlgebra& a, const Element& x,
                             const TolerancePolicy& tol) {
    Matrix op = a.left_mult(x);
    Matrix op_n = op.pow(a.dim());
    FittingDecomposition f{kernel(op_n, tol), image(op_n, tol)};
    if (f.null_part.dim() + f.range_part.dim() != a.dim() ||
        f.null_part.intersect(f.range_part, tol).dim() != 0)
        throw math_error("Fitting components do not split the space");
    return f;
}

Subspace cartan_cyclic(const CyclicPresentation& p, const TolerancePolicy& tol) {
    LeibnizAlgebra a = build_cyclic(p);
    Subspace e = engel_subalgebra(a, a.basis_element(0), tol);
    if (lower_central_series(induced_subalgebra(a, e, tol), tol).verdict !=
        SeriesVerdict::nilpotent)
        throw math_error("Engel subalgebra of the generator is not nilpotent");
    if (!normalizers(a, e, tol).both.equals(e, tol))
        throw math_error("Engel subalgebra of the generator is not self-normalizing");
    return e;
}

EngelScanResult engel_scan(const LeibnizAlgebra& a, long lo, long hi,
                           const TolerancePolicy& tol) {
    if (lo > hi) throw std::invalid_argument("empty scan range");
    const size_t n = a.dim();
    EngelScanResult res;
    std::vector<long> c(n, lo);
    while (true) {
        bool all_zero = true;
        for (long v : c)
            if (v != 0) all_zero = false;
        if (!all_zero) {
            Element x;
            x.reserve(n);
            for (long v : c)
                x.push_back(a.backend() == Backend::exact ? Scalar::exact(v)
                                                          : Scalar::fp(double(v)));
            Subspace e = engel_subalgebra(a, x, tol);
            bool seen = false;
            for (const Subspace& d : res.distinct)
                if (d.equals(e, tol)) {
                    seen = true;
                    break;
                }
            if (!seen) {
                res.distinct.push_back(std::move(e));
                res.elements.push_back(std::move(x));
            }
        }
        size_t pos = n;
        while (pos > 0 && c[pos - 1] == hi) c[--pos] = lo;
        if (pos == 0) break;
        ++c[pos - 1];
    }
    for (size_t i = 0; i < res.distinct.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < res.distinct.size() && minimal; ++j)
            if (j != i && res.distinct[i].contains(res.distinct[j], tol) &&
                res.distinct[j].dim() < res.distinct[i].dim())
                minimal = false;
        if (minimal) res.minimal_indices.push_back(i);
    }
    return res;
}

const char* elementary_verdict_name(ElementaryVerdict v) {
    switch (v) {
        case ElementaryVerdict::yes: return "yes";
        case ElementaryVerdict::no: return "no";
        case ElementaryVerdict::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace {

struct ExactRoot {
    Scalar value;  // exact scalar, verified p(value) == 0
    int multiplicity;
};

// Try to recognize every float root cluster as a Gaussian rational and verify
// it exactly; returns empty on any failure.
std::vector<ExactRoot> verify_roots_exactly(const Poly& charpoly, const FactoredPoly& fp) {
    constexpr unsigned long max_den = 1000000;
    std::vector<ExactRoot> roots;
    for (const RootCluster& rc : fp.roots) {
        mpq_class re = rationalize(rc.value.real(), max_den);
        mpq_class im = rationalize(rc.value.imag(), max_den);
        Scalar lambda = Scalar::exact(re, im);
        if (!charpoly.eval(lambda).is_zero()) return {};
        bool dup = false;
        for (const ExactRoot& r : roots)
            if (r.value == lambda) dup = true;
        if (dup) return {};  // two clusters collapsed onto one rational: inconsistent
        roots.push_back({lambda, 0});
    }
    // exact multiplicities by repeated synthetic division
    int total = 0;
    for (ExactRoot& r : roots) {
        Poly q = charpoly;
        while (q.degree() >= 1) {
            auto [quot, rem] = q.divide_linear(r.value);
            if (!rem.is_zero()) break;
            q = quot;
            ++r.multiplicity;
        }
        total += r.multiplicity;
    }
    if (total != charpoly.degree()) return {};
    // deterministic order, independent of float clustering noise
    std::sort(roots.begin(), roots.end(), [](const ExactRoot& a, const ExactRoot& b) {
        const GaussianRational &x = a.value.rat(), &y = b.value.rat();
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    return roots;
}

ElementaryVerdict elementary_of(const LeibnizAlgebra& a, const Subspace& frattini,
                                const TolerancePolicy& tol) {
    Subspace sq = algebra_square(a, tol);
    bool square_nilpotent =
        sq.dim() == 0 || lower_central_series(induced_subalgebra(a, sq, tol), tol).verdict ==
                             SeriesVerdict::nilpotent;
    if (!square_nilpotent) return ElementaryVerdict::not_applicable;
    return frattini.dim() == 0 ? ElementaryVerdict::yes : ElementaryVerdict::no;
}

MaximalsReport maximals_float(const CyclicPresentation& p, const FactoredPoly& fp,
                              const TolerancePolicy& tol) {
    CyclicPresentation pf = p.to_float();
    CompanionData cd = companion_data(pf);
    const size_t n = p.dim;

    MaximalsReport rep;
    rep.roots = fp;
    rep.exact_path = false;
    size_t expected_frattini = 0;
    for (const RootCluster& rc : fp.roots) expected_frattini += size_t(rc.multiplicity) - 1;

    std::vector<std::complex<double>> all;
    for (const RootCluster& rc : fp.roots)
        for (int k = 0; k < rc.multiplicity; ++k) all.push_back(rc.value);

    for (size_t j = 0; j < fp.roots.size(); ++j) {
        std::vector<std::complex<double>> rest;
        bool removed = false;
        for (size_t k = 0; k < fp.roots.size(); ++k)
            for (int m = 0; m < fp.roots[k].multiplicity; ++m) {
                if (k == j && !removed) {
                    removed = true;
                    continue;
                }
                rest.push_back(fp.roots[k].value);
            }
        Subspace ker_j = kernel(poly_of_matrix(Poly::from_roots(rest), cd.op), tol);
        if (ker_j.dim() != n - 1)
            throw math_error("maximal subalgebra has unexpected dimension (root clustering failed)");
        rep.maximals.push_back(std::move(ker_j));
    }

    std::vector<std::complex<double>> q_roots;
    for (const RootCluster& rc : fp.roots)
        for (int k = 0; k + 1 < rc.multiplicity; ++k) q_roots.push_back(rc.value);
    rep.frattini = kernel(poly_of_matrix(Poly::from_roots(q_roots), cd.op), tol);
    if (rep.frattini.dim() != expected_frattini)
        throw math_error("Frattini dimension disagrees with root multiplicities");

    rep.elementary = elementary_of(build_cyclic(pf), rep.frattini, tol);
    return rep;
}

}  // namespace

MaximalsReport maximal_subalgebras(const CyclicPresentation& p, const TolerancePolicy& tol) {
    tol.validate();
    p.validate();
    CompanionData cd = companion_data(p);
    Poly float_charpoly =
        p.backend() == Backend::exact ? cd.charpoly.to_float() : cd.charpoly;
    FactoredPoly fp = poly_roots(float_charpoly, tol);

    if (p.backend() == Backend::exact) {
        std::vector<ExactRoot> roots = verify_roots_exactly(cd.charpoly, fp);
        if (!roots.empty()) {
            MaximalsReport rep;
            rep.exact_path = true;
            for (const ExactRoot& r : roots)
                rep.roots.roots.push_back({r.value.cplx(), r.multiplicity});
            for (const ExactRoot& r : roots) {
                auto [quot, rem] = cd.charpoly.divide_linear(r.value);
                (void)rem;  // exact zero: r.value verified as a root
                Subspace ker_j = kernel(poly_of_matrix(quot, cd.op), tol);
                if (ker_j.dim() != p.dim - 1)
                    throw math_error("maximal subalgebra has unexpected dimension");
                rep.maximals.push_back(std::move(ker_j));
            }
            Poly q = cd.charpoly;
            for (const ExactRoot& r : roots) q = q.divide_linear(r.value).first;
            rep.frattini = kernel(poly_of_matrix(q, cd.op), tol);
            rep.elementary = elementary_of(build_cyclic(p), rep.frattini, tol);
            return rep;
        }
    }

    try {
        return maximals_float(p, fp, tol);
    } catch (const math_error&) {
        // one retry with a coarser clustering radius, then give up
        TolerancePolicy wide = tol;
        wide.eps_root *= 10.0;
        FactoredPoly fp2 = poly_roots(float_charpoly, wide);
        return maximals_float(p, fp2, tol);
    }
}

Subspace frattini_oracle(const CyclicPresentation& p, const TolerancePolicy& tol) {
    MaximalsReport rep = maximal_subalgebras(p, tol);
    Subspace acc = Subspace::full(p.dim, rep.maximals.empty()
                                             ? p.backend()
                                             : rep.maximals.front().backend());
    for (const Subspace& m : rep.maximals) acc = acc.intersect(m, tol);
    return acc;
}

}  // namespace leibniz
