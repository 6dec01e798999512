#include "leibniz/matrix.hpp"

#include <algorithm>
#include <ostream>

namespace leibniz {

Matrix Matrix::identity(size_t n, Backend b) {
    Matrix m(n, n, b);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(b);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Backend b) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, b);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

std::vector<Scalar> Matrix::row(size_t i) const {
    std::vector<Scalar> v;
    v.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

void Matrix::set_row(size_t i, const std::vector<Scalar>& v) {
    if (v.size() != cols_) throw dimension_error("row length mismatch");
    for (size_t j = 0; j < cols_; ++j) {
        if (v[j].backend() != backend_) throw backend_error("mixed backend in matrix row");
        at(i, j) = v[j];
    }
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch in +");
    Matrix r(rows_, cols_, backend_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch in -");
    Matrix r(rows_, cols_, backend_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix shape mismatch in *");
    if (backend_ != o.backend_) throw backend_error("mixed backend in matrix product");
    Matrix r(rows_, o.cols_, backend_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw dimension_error("vector length mismatch in matrix action");
    std::vector<Scalar> r(rows_, Scalar::zero(backend_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_, backend_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, backend_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(size_t k) const {
    if (rows_ != cols_) throw dimension_error("pow needs a square matrix");
    Matrix r = identity(rows_, backend_);
    for (size_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

Matrix Matrix::to_float() const {
    Matrix r(rows_, cols_, Backend::floating);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].to_float();
    return r;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw dimension_error("trace needs a square matrix");
    Scalar t = Scalar::zero(backend_);
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (cols_ != below.cols_) throw dimension_error("vstack column mismatch");
    if (backend_ != below.backend_) throw backend_error("mixed backend in vstack");
    Matrix r(rows_ + below.rows_, cols_, backend_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < below.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
    return r;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Scalar& s : e_) m = std::max(m, s.abs());
    return m;
}

bool Matrix::near_zero(double eps) const {
    for (const Scalar& s : e_)
        if (!s.near_zero(eps)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m, const TolerancePolicy& tol) {
    tol.validate();
    const bool fl = m.backend() == Backend::floating;
    const double thresh = fl ? tol.eps_rank * m.max_abs() : 0.0;

    RrefResult res{m, {}, 0};
    Matrix& a = res.mat;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // pick pivot row
        size_t piv = a.rows();
        if (fl) {
            double best = thresh;
            for (size_t i = r; i < a.rows(); ++i) {
                double v = a.at(i, c).abs();
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
        } else {
            for (size_t i = r; i < a.rows(); ++i)
                if (!a.at(i, c).is_zero()) {
                    piv = i;
                    break;
                }
        }
        if (piv == a.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        Scalar inv = Scalar::one(a.backend()) / a.at(r, c);
        for (size_t j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        a.at(r, c) = Scalar::one(a.backend());
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            Scalar f = a.at(i, c);
            if (f.is_zero()) continue;
            for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
            a.at(i, c) = Scalar::zero(a.backend());
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    if (fl) {  // snap residue so canonical forms compare cleanly
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) {
                auto z = a.at(i, j).cplx();
                double re = std::abs(z.real()) <= thresh ? 0.0 : z.real();
                double im = std::abs(z.imag()) <= thresh ? 0.0 : z.imag();
                if (re == 0.0) re = 0.0;  // clear -0.0
                if (im == 0.0) im = 0.0;
                a.at(i, j) = Scalar::fp(re, im);
            }
    }
    return res;
}

Subspace Subspace::zero(size_t ambient, Backend b) { return Subspace(Matrix(0, ambient, b)); }

Subspace Subspace::full(size_t ambient, Backend b) {
    return Subspace(Matrix::identity(ambient, b));
}

Subspace Subspace::span_of(const Matrix& generators, const TolerancePolicy& tol) {
    RrefResult r = rref(generators, tol);
    Matrix basis(r.rank, generators.cols(), generators.backend());
    for (size_t i = 0; i < r.rank; ++i) basis.set_row(i, r.mat.row(i));
    return Subspace(std::move(basis));
}

namespace {

// Reduce v against canonical basis rows; returns (coordinates, residual vector).
std::pair<std::vector<Scalar>, std::vector<Scalar>> reduce_against(const Matrix& basis,
                                                                   std::vector<Scalar> v) {
    std::vector<Scalar> coords;
    coords.reserve(basis.rows());
    for (size_t k = 0; k < basis.rows(); ++k) {
        // pivot column of row k = first structurally nonzero entry
        size_t p = 0;
        while (p < basis.cols() && basis.at(k, p).is_zero()) ++p;
        if (p == basis.cols()) {
            coords.push_back(Scalar::zero(basis.backend()));
            continue;
        }
        Scalar c = v[p];  // pivot entry is 1 in canonical form
        coords.push_back(c);
        if (!c.is_zero())
            for (size_t j = p; j < basis.cols(); ++j) v[j] -= c * basis.at(k, j);
    }
    return {std::move(coords), std::move(v)};
}

double vec_max_abs(const std::vector<Scalar>& v) {
    double m = 0.0;
    for (const Scalar& s : v) m = std::max(m, s.abs());
    return m;
}

}  // namespace

bool Subspace::contains(const std::vector<Scalar>& v, const TolerancePolicy& tol) const {
    if (v.size() != ambient()) throw dimension_error("vector/ambient mismatch");
    for (const Scalar& s : v)
        if (s.backend() != backend()) throw backend_error("mixed backend in containment test");
    auto [coords, resid] = reduce_against(basis_, v);
    (void)coords;
    if (backend() == Backend::exact) {
        for (const Scalar& s : resid)
            if (!s.is_zero()) return false;
        return true;
    }
    double eps = tol.eps_cmp * std::max(1.0, vec_max_abs(v));
    for (const Scalar& s : resid)
        if (!s.near_zero(eps)) return false;
    return true;
}

std::vector<Scalar> Subspace::coordinates(const std::vector<Scalar>& v,
                                          const TolerancePolicy& tol) const {
    auto [coords, resid] = reduce_against(basis_, v);
    double eps = backend() == Backend::exact ? 0.0 : tol.eps_cmp * std::max(1.0, vec_max_abs(v));
    for (const Scalar& s : resid)
        if (!(backend() == Backend::exact ? s.is_zero() : s.near_zero(eps)))
            throw math_error("vector outside subspace");
    return coords;
}

bool Subspace::contains(const Subspace& other, const TolerancePolicy& tol) const {
    if (other.ambient() != ambient()) throw dimension_error("ambient mismatch");
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i), tol)) return false;
    return true;
}

bool Subspace::equals(const Subspace& other, const TolerancePolicy& tol) const {
    return dim() == other.dim() && contains(other, tol) && other.contains(*this, tol);
}

Subspace Subspace::sum(const Subspace& other, const TolerancePolicy& tol) const {
    if (other.ambient() != ambient()) throw dimension_error("ambient mismatch");
    return span_of(basis_.vstack(other.basis_), tol);
}

Subspace Subspace::intersect(const Subspace& other, const TolerancePolicy& tol) const {
    if (other.ambient() != ambient()) throw dimension_error("ambient mismatch");
    if (dim() == 0 || other.dim() == 0) return zero(ambient(), backend());
    // Solve sum a_i u_i - sum b_j v_j = 0; columns of C are the u's then -v's.
    size_t p = dim(), q = other.dim();
    Matrix c(ambient(), p + q, backend());
    for (size_t i = 0; i < p; ++i)
        for (size_t x = 0; x < ambient(); ++x) c.at(x, i) = basis_.at(i, x);
    for (size_t j = 0; j < q; ++j)
        for (size_t x = 0; x < ambient(); ++x) c.at(x, p + j) = -other.basis_.at(j, x);
    Subspace k = kernel(c, tol);
    Matrix gens(k.dim(), ambient(), backend());
    for (size_t row = 0; row < k.dim(); ++row) {
        std::vector<Scalar> w(ambient(), Scalar::zero(backend()));
        for (size_t i = 0; i < p; ++i) {
            Scalar a = k.basis().at(row, i);
            if (a.is_zero()) continue;
            for (size_t x = 0; x < ambient(); ++x) w[x] += a * basis_.at(i, x);
        }
        gens.set_row(row, w);
    }
    return span_of(gens, tol);
}

Subspace Subspace::to_float() const {
    // Re-canonicalize: float rref of the exact basis rows is already reduced,
    // so this is just an entrywise conversion.
    Matrix b = basis_.to_float();
    Subspace s = zero(ambient(), Backend::floating);
    s.basis_ = std::move(b);
    return s;
}

Subspace kernel(const Matrix& m, const TolerancePolicy& tol) {
    RrefResult r = rref(m, tol);
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> gens;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n, Scalar::zero(m.backend()));
        v[f] = Scalar::one(m.backend());
        for (size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.mat.at(k, f);
        gens.push_back(std::move(v));
    }
    // build with explicit column count: from_rows on an empty list would lose the ambient
    Matrix g(gens.size(), n, m.backend());
    for (size_t i = 0; i < gens.size(); ++i) g.set_row(i, gens[i]);
    return Subspace::span_of(g, tol);
}

Subspace image(const Matrix& m, const TolerancePolicy& tol) {
    return Subspace::span_of(m.transpose(), tol);
}

Subspace generalized_kernel(const Matrix& m, size_t power, const TolerancePolicy& tol) {
    if (m.rows() != m.cols()) throw dimension_error("generalized kernel needs a square matrix");
    return kernel(m.pow(power), tol);
}

Subspace generalized_kernel_stabilized(const Matrix& m, const TolerancePolicy& tol) {
    if (m.rows() != m.cols()) throw dimension_error("generalized kernel needs a square matrix");
    Subspace prev = kernel(m, tol);
    Matrix p = m;
    for (size_t k = 2; k <= m.cols(); ++k) {
        p = p * m;
        Subspace next = kernel(p, tol);
        if (next.dim() == prev.dim()) return prev;
        prev = next;
    }
    return prev;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "[") << m.at(i, j);
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    if (m.rows() == 0) os << "[]";
    return os;
}

}  // namespace leibniz
