#include "leibniz/algebra.hpp"

#include <algorithm>

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(size_t dim, Backend b)
    : dim_(dim), backend_(b), c_(dim * dim * dim, Scalar::zero(b)) {
    if (dim == 0) throw dimension_error("algebra dimension must be positive");
    labels_.reserve(dim);
    for (size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i + 1));
}

void LeibnizAlgebra::set_labels(std::vector<std::string> l) {
    if (l.size() != dim_) throw dimension_error("label count mismatch");
    labels_ = std::move(l);
}

Element LeibnizAlgebra::basis_element(size_t i) const {
    Element e(dim_, Scalar::zero(backend_));
    e[i] = Scalar::one(backend_);
    return e;
}

Element LeibnizAlgebra::product(const Element& x, const Element& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw dimension_error("element length mismatch");
    Element w(dim_, Scalar::zero(backend_));
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].backend() != backend_) throw backend_error("element backend mismatch");
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j].backend() != backend_) throw backend_error("element backend mismatch");
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (size_t k = 0; k < dim_; ++k) {
                const Scalar& s = c(i, j, k);
                if (!s.is_zero()) w[k] += f * s;
            }
        }
    }
    return w;
}

Matrix LeibnizAlgebra::left_mult(const Element& x) const {
    if (x.size() != dim_) throw dimension_error("element length mismatch");
    Matrix m(dim_, dim_, backend_);
    for (size_t j = 0; j < dim_; ++j) {
        Element col = product(x, basis_element(j));
        for (size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Matrix LeibnizAlgebra::right_mult(const Element& x) const {
    if (x.size() != dim_) throw dimension_error("element length mismatch");
    Matrix m(dim_, dim_, backend_);
    for (size_t j = 0; j < dim_; ++j) {
        Element col = product(basis_element(j), x);
        for (size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

LeibnizAlgebra LeibnizAlgebra::to_float() const {
    LeibnizAlgebra a(dim_, Backend::floating);
    for (size_t t = 0; t < c_.size(); ++t) a.c_[t] = c_[t].to_float();
    a.labels_ = labels_;
    return a;
}

double LeibnizAlgebra::max_constant() const {
    double m = 0.0;
    for (const Scalar& s : c_) m = std::max(m, s.abs());
    return m;
}

LeibnizCheckResult verify_leibniz(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    const double mc = a.max_constant();
    const double thresh = tol.eps_cmp * std::max(1.0, mc * mc);
    LeibnizCheckResult res;
    for (size_t i = 0; i < n; ++i) {
        Element bi = a.basis_element(i);
        for (size_t j = 0; j < n; ++j) {
            Element bj = a.basis_element(j);
            Element bij = a.product(bi, bj);
            for (size_t k = 0; k < n; ++k) {
                Element bk = a.basis_element(k);
                Element lhs = a.product(bi, a.product(bj, bk));
                Element rhs = a.product(bij, bk);
                Element rhs2 = a.product(bj, a.product(bi, bk));
                double residual = 0.0;
                bool bad = false;
                for (size_t m = 0; m < n; ++m) {
                    Scalar d = lhs[m] - rhs[m] - rhs2[m];
                    residual = std::max(residual, d.abs());
                    if (a.backend() == Backend::exact ? !d.is_zero() : !d.near_zero(thresh))
                        bad = true;
                }
                if (bad) {
                    res.ok = false;
                    res.violations.push_back({i, j, k, residual});
                }
            }
        }
    }
    return res;
}

Subspace leib_ideal(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    const size_t n = a.dim();
    std::vector<std::vector<Scalar>> gens;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Element w = a.product(a.basis_element(i), a.basis_element(j));
            if (i != j) {
                Element v = a.product(a.basis_element(j), a.basis_element(i));
                for (size_t k = 0; k < n; ++k) w[k] += v[k];
            }
            gens.push_back(std::move(w));
        }
    return Subspace::span_of(Matrix::from_rows(gens, a.backend()), tol);
}

Subspace subspace_product(const LeibnizAlgebra& a, const Subspace& u, const Subspace& v,
                          const TolerancePolicy& tol) {
    if (u.ambient() != a.dim() || v.ambient() != a.dim())
        throw dimension_error("subspace/algebra ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(a.dim(), a.backend());
    // float products that cancel leave ~1e-16 residue; snapped against the input
    // scale so an all-noise row cannot seed a pivot in the span below
    double snap_eps = 0.0;
    if (a.backend() == Backend::floating) {
        double scale = double(a.dim()) * double(a.dim()) * std::max(1.0, a.max_constant()) *
                       std::max(1.0, u.basis().max_abs()) * std::max(1.0, v.basis().max_abs());
        snap_eps = tol.eps_cmp * scale;
    }
    std::vector<std::vector<Scalar>> gens;
    for (size_t i = 0; i < u.dim(); ++i)
        for (size_t j = 0; j < v.dim(); ++j) {
            Element w = a.product(u.basis().row(i), v.basis().row(j));
            if (snap_eps > 0.0)
                for (Scalar& x : w)
                    if (x.near_zero(snap_eps)) x = Scalar::fp(0.0);
            gens.push_back(std::move(w));
        }
    return Subspace::span_of(Matrix::from_rows(gens, a.backend()), tol);
}

Subspace algebra_square(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    Subspace full = Subspace::full(a.dim(), a.backend());
    return subspace_product(a, full, full, tol);
}

IdealCheckResult ideal_check(const LeibnizAlgebra& a, const Subspace& s,
                             const TolerancePolicy& tol) {
    Subspace full = Subspace::full(a.dim(), a.backend());
    IdealCheckResult r;
    r.left = s.contains(subspace_product(a, full, s, tol), tol);
    r.right = s.contains(subspace_product(a, s, full, tol), tol);
    r.two_sided = r.left && r.right;
    return r;
}

namespace {

// Rows that read off coordinates modulo S: for each non-pivot column f of the
// canonical basis of S, row_f(v) = coordinate f of (v reduced against S).
Matrix mod_subspace_projection(const Subspace& s) {
    const size_t n = s.ambient();
    std::vector<size_t> pivots;
    for (size_t k = 0; k < s.dim(); ++k) {
        size_t p = 0;
        while (p < n && s.basis().at(k, p).is_zero()) ++p;
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    size_t m = n - s.dim();
    Matrix proj(m, n, s.backend());
    size_t row = 0;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        proj.at(row, f) = Scalar::one(s.backend());
        for (size_t k = 0; k < s.dim(); ++k) proj.at(row, pivots[k]) = -s.basis().at(k, f);
        ++row;
    }
    return proj;
}

}  // namespace

NormalizerReport normalizers(const LeibnizAlgebra& a, const Subspace& s,
                             const TolerancePolicy& tol) {
    const size_t n = a.dim();
    if (s.ambient() != n) throw dimension_error("subspace/algebra ambient mismatch");
    Matrix proj = mod_subspace_projection(s);  // (n-d) x n

    // x -> proj(x * s_j) and x -> proj(s_j * x) stacked over all basis rows s_j.
    Matrix left_sys(0, n, a.backend());
    Matrix right_sys(0, n, a.backend());
    for (size_t j = 0; j < s.dim(); ++j) {
        Element sj = s.basis().row(j);
        Matrix lm(n, n, a.backend());  // column i = b_i * s_j
        Matrix rm(n, n, a.backend());  // column i = s_j * b_i
        for (size_t i = 0; i < n; ++i) {
            Element li = a.product(a.basis_element(i), sj);
            Element ri = a.product(sj, a.basis_element(i));
            for (size_t k = 0; k < n; ++k) {
                lm.at(k, i) = li[k];
                rm.at(k, i) = ri[k];
            }
        }
        left_sys = left_sys.vstack(proj * lm);
        right_sys = right_sys.vstack(proj * rm);
    }
    if (a.backend() == Backend::floating) {
        // products that cancel leave residue; an all-noise system must read as
        // the zero map (normalizer = everything), so snap against the input scale
        double scale = double(n) * double(n) * std::max(1.0, a.max_constant()) *
                       std::max(1.0, s.basis().max_abs()) * std::max(1.0, proj.max_abs());
        double eps = tol.eps_cmp * scale;
        for (Matrix* m : {&left_sys, &right_sys})
            for (size_t r = 0; r < m->rows(); ++r)
                for (size_t c = 0; c < m->cols(); ++c)
                    if (m->at(r, c).near_zero(eps)) m->at(r, c) = Scalar::fp(0.0);
    }
    NormalizerReport rep{kernel(left_sys, tol), kernel(right_sys, tol),
                         Subspace::zero(n, a.backend())};
    rep.both = rep.left.intersect(rep.right, tol);
    return rep;
}

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s, const TolerancePolicy& tol) {
    return s.contains(subspace_product(a, s, s, tol), tol);
}

LeibnizAlgebra induced_subalgebra(const LeibnizAlgebra& a, const Subspace& s,
                                  const TolerancePolicy& tol) {
    if (!is_subalgebra(a, s, tol)) throw math_error("subspace is not closed under the product");
    const size_t d = s.dim();
    if (d == 0) throw dimension_error("zero subspace has no algebra structure");
    LeibnizAlgebra sub(d, a.backend());
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Element w = a.product(s.basis().row(i), s.basis().row(j));
            std::vector<Scalar> coords = s.coordinates(w, tol);
            for (size_t k = 0; k < d; ++k) sub.c(i, j, k) = coords[k];
        }
    return sub;
}

LeibnizAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& s,
                                const TolerancePolicy& tol) {
    if (!ideal_check(a, s, tol).two_sided) throw math_error("quotient needs a two-sided ideal");
    const size_t n = a.dim();
    const size_t m = n - s.dim();
    if (m == 0) throw dimension_error("quotient by the whole algebra is zero-dimensional");
    Matrix proj = mod_subspace_projection(s);
    // coset representatives: the non-pivot coordinate basis vectors
    std::vector<size_t> reps;
    std::vector<size_t> pivots;
    for (size_t k = 0; k < s.dim(); ++k) {
        size_t p = 0;
        while (p < n && s.basis().at(k, p).is_zero()) ++p;
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    for (size_t f = 0; f < n; ++f)
        if (!is_pivot[f]) reps.push_back(f);

    LeibnizAlgebra q(m, a.backend());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Element w = a.product(a.basis_element(reps[i]), a.basis_element(reps[j]));
            std::vector<Scalar> coords = proj * w;
            for (size_t k = 0; k < m; ++k) q.c(i, j, k) = coords[k];
        }
    return q;
}

bool is_lie(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    const size_t n = a.dim();
    const double thresh = tol.eps_cmp * std::max(1.0, a.max_constant());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Scalar sym = a.c(i, j, k) + a.c(j, i, k);
                if (a.backend() == Backend::exact ? !sym.is_zero() : !sym.near_zero(thresh))
                    return false;
            }
    return true;
}

}  // namespace leibniz
