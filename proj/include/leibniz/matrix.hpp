#pragma once

#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

// Dense matrix over one scalar backend. Vectors are coordinate rows;
// operators act on column vectors (v -> M v).
class Matrix {
public:
    Matrix(size_t rows, size_t cols, Backend b)
        : rows_(rows), cols_(cols), backend_(b), e_(rows * cols, Scalar::zero(b)) {}

    static Matrix identity(size_t n, Backend b);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Backend b);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Backend backend() const { return backend_; }

    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Scalar> row(size_t i) const;
    void set_row(size_t i, const std::vector<Scalar>& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;  // column-vector action
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix pow(size_t k) const;  // square matrices only
    Matrix to_float() const;
    Scalar trace() const;

    Matrix vstack(const Matrix& below) const;

    double max_abs() const;
    bool near_zero(double eps) const;  // every entry
    bool is_zero() const;              // structural

private:
    size_t rows_, cols_;
    Backend backend_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix mat;                  // reduced row echelon form, same shape
    std::vector<size_t> pivots;  // pivot column per nonzero row
    size_t rank = 0;
};

// Gauss-Jordan. Exact backend: first nonzero pivot, exact arithmetic.
// Float backend: max-|entry| pivoting, entries <= eps_rank * max|input entry|
// treated as zero (and snapped to zero in the result).
RrefResult rref(const Matrix& m, const TolerancePolicy& tol);

// Subspace of C^ambient in canonical form: basis rows are the RREF of any
// generating set, so equal subspaces (same backend) have identical bases.
class Subspace {
public:
    static Subspace zero(size_t ambient, Backend b);
    static Subspace full(size_t ambient, Backend b);
    static Subspace span_of(const Matrix& generators, const TolerancePolicy& tol);

    size_t ambient() const { return basis_.cols(); }
    size_t dim() const { return basis_.rows(); }
    Backend backend() const { return basis_.backend(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v, const TolerancePolicy& tol) const;
    bool contains(const Subspace& other, const TolerancePolicy& tol) const;
    bool equals(const Subspace& other, const TolerancePolicy& tol) const;

    Subspace sum(const Subspace& other, const TolerancePolicy& tol) const;
    Subspace intersect(const Subspace& other, const TolerancePolicy& tol) const;
    Subspace to_float() const;

    // Coordinates of v in the canonical basis; throws math_error if v is outside.
    std::vector<Scalar> coordinates(const std::vector<Scalar>& v, const TolerancePolicy& tol) const;

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

Subspace kernel(const Matrix& m, const TolerancePolicy& tol);
Subspace image(const Matrix& m, const TolerancePolicy& tol);  // column space
Subspace generalized_kernel(const Matrix& m, size_t power, const TolerancePolicy& tol);
// Iterates kernel(m^k) until the dimension stops growing (k <= cols); same
// result as generalized_kernel(m, cols, tol), kept separate for cross-checks.
Subspace generalized_kernel_stabilized(const Matrix& m, const TolerancePolicy& tol);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace leibniz
