#include "leibniz/invariants.hpp"

#include <algorithm>

#include "leibniz/series.hpp"

namespace leibniz {

namespace {

Matrix reshape_row(const std::vector<Scalar>& flat, size_t n, Backend b) {
    Matrix m(n, n, b);
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s) m.at(r, s) = flat[r * n + s];
    return m;
}

std::vector<Scalar> flatten(const Matrix& m) {
    std::vector<Scalar> flat;
    flat.reserve(m.rows() * m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t s = 0; s < m.cols(); ++s) flat.push_back(m.at(r, s));
    return flat;
}

}  // namespace

DerivationSpace derivations(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    // Unknowns: D_{r,s} at flat index r*n+s. Equation per basis triple (i,j,k):
    // sum_m c(i,j,m) D_{k,m} - c(m,j,k) D_{m,i} - c(i,m,k) D_{m,j} = 0.
    Matrix sys(n * n * n, n * n, a.backend());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                size_t row = (i * n + j) * n + k;
                for (size_t m = 0; m < n; ++m) {
                    sys.at(row, k * n + m) += a.c(i, j, m);
                    sys.at(row, m * n + i) -= a.c(m, j, k);
                    sys.at(row, m * n + j) -= a.c(i, m, k);
                }
            }
    Subspace sol = kernel(sys, tol);

    DerivationSpace d;
    for (size_t r = 0; r < sol.dim(); ++r)
        d.basis.push_back(reshape_row(sol.basis().row(r), n, a.backend()));

    std::vector<std::vector<Scalar>> lrows;
    for (size_t i = 0; i < n; ++i) lrows.push_back(flatten(a.left_mult(a.basis_element(i))));
    Subspace inner = Subspace::span_of(Matrix::from_rows(lrows, a.backend()), tol);
    for (size_t r = 0; r < inner.dim(); ++r)
        d.inner_basis.push_back(reshape_row(inner.basis().row(r), n, a.backend()));

    d.outer_dim = d.basis.size() - d.inner_basis.size();
    return d;
}

bool is_derivation(const LeibnizAlgebra& a, const Matrix& d, const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) throw dimension_error("derivation shape mismatch");
    if (d.backend() != a.backend()) throw backend_error("derivation backend mismatch");
    double scale = std::max(1.0, a.max_constant() * std::max(1.0, d.max_abs()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Element bi = a.basis_element(i), bj = a.basis_element(j);
            Element lhs = d * a.product(bi, bj);
            Element rhs1 = a.product(d * bi, bj);
            Element rhs2 = a.product(bi, d * bj);
            for (size_t k = 0; k < n; ++k) {
                Scalar diff = lhs[k] - rhs1[k] - rhs2[k];
                if (a.backend() == Backend::exact ? !diff.is_zero()
                                                  : !diff.near_zero(tol.eps_cmp * scale))
                    return false;
            }
        }
    return true;
}

KillingReport killing(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    std::vector<Matrix> lm;
    for (size_t i = 0; i < n; ++i) lm.push_back(a.left_mult(a.basis_element(i)));

    KillingReport rep{Matrix(n, n, a.backend()), Subspace::zero(n, a.backend()), false, false,
                      false};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rep.gram.at(i, j) = (lm[i] * lm[j]).trace();

    // A float gram entry is a sum of ~n^2 structure-constant products, so
    // anything below eps_cmp at that scale is residue of a structural zero.
    // It must be snapped before the kernel's rank decision: rref thresholds
    // are relative to the matrix itself, which is meaningless when every
    // entry is residue (e.g. a form that vanishes identically).
    double scale = std::max(1.0, a.max_constant() * a.max_constant() * double(n * n));
    if (a.backend() == Backend::floating)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (rep.gram.at(i, j).near_zero(tol.eps_cmp * scale))
                    rep.gram.at(i, j) = Scalar::fp(0.0);

    rep.radical = kernel(rep.gram, tol);
    rep.trivial = a.backend() == Backend::exact ? rep.gram.is_zero()
                                                : rep.gram.near_zero(tol.eps_cmp * scale);
    rep.radical_equals_leib = rep.radical.equals(leib_ideal(a, tol), tol);
    rep.radical_equals_whole = rep.radical.dim() == n;
    return rep;
}

SemisimplicityReport semisimplicity_counterexamples(const LeibnizAlgebra& a,
                                                    const TolerancePolicy& tol) {
    SemisimplicityReport rep;
    rep.solvable = derived_series(a, tol).verdict == SeriesVerdict::solvable;
    KillingReport kr = killing(a, tol);
    Subspace leib = leib_ideal(a, tol);
    rep.killing_radical_equals_leib =
        kr.radical_equals_leib && leib.dim() < a.dim() && leib.dim() > 0;
    rep.killing_radical_is_whole = kr.radical_equals_whole;
    return rep;
}

}  // namespace leibniz
