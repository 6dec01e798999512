#pragma once

#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

// Element of an algebra = coordinate vector over the algebra's basis.
using Element = std::vector<Scalar>;

// Finite-dimensional algebra given by its structure tensor:
// b_i * b_j = sum_k c(i,j,k) b_k (indices 0-based internally).
// No axioms are assumed; verify_leibniz checks the left Leibniz identity
// x(yz) = (xy)z + y(xz).
class LeibnizAlgebra {
public:
    LeibnizAlgebra(size_t dim, Backend b);

    size_t dim() const { return dim_; }
    Backend backend() const { return backend_; }

    Scalar& c(size_t i, size_t j, size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& c(size_t i, size_t j, size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l);

    Element basis_element(size_t i) const;
    Element zero_element() const { return Element(dim_, Scalar::zero(backend_)); }

    Element product(const Element& x, const Element& y) const;
    Matrix left_mult(const Element& x) const;   // L_x : v -> x*v
    Matrix right_mult(const Element& x) const;  // R_x : v -> v*x

    LeibnizAlgebra to_float() const;
    double max_constant() const;  // max |c(i,j,k)|

private:
    size_t dim_;
    Backend backend_;
    std::vector<Scalar> c_;
    std::vector<std::string> labels_;
};

struct LeibnizViolation {
    size_t i, j, k;   // 0-based basis triple
    double residual;  // max coordinate of x(yz) - (xy)z - y(xz)
};

struct LeibnizCheckResult {
    bool ok = true;
    std::vector<LeibnizViolation> violations;
};

// Checks the left Leibniz identity on all basis triples. Exact backend:
// exact; float: residual measured against eps_cmp * max(1, max|c|^2).
LeibnizCheckResult verify_leibniz(const LeibnizAlgebra& a, const TolerancePolicy& tol);

// Leib(A) = span of all squares x*x = span{b_i b_i} + span{b_i b_j + b_j b_i}.
Subspace leib_ideal(const LeibnizAlgebra& a, const TolerancePolicy& tol);

// span{ u*v : u in U, v in V }, computed from canonical basis pairs.
Subspace subspace_product(const LeibnizAlgebra& a, const Subspace& u, const Subspace& v,
                          const TolerancePolicy& tol);

// A*A, the derived subalgebra of step one.
Subspace algebra_square(const LeibnizAlgebra& a, const TolerancePolicy& tol);

struct IdealCheckResult {
    bool left = false;   // A*S <= S
    bool right = false;  // S*A <= S
    bool two_sided = false;
};
IdealCheckResult ideal_check(const LeibnizAlgebra& a, const Subspace& s,
                             const TolerancePolicy& tol);

struct NormalizerReport {
    Subspace left;   // {x : x*S <= S}
    Subspace right;  // {x : S*x <= S}
    Subspace both;
};
NormalizerReport normalizers(const LeibnizAlgebra& a, const Subspace& s,
                             const TolerancePolicy& tol);

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s, const TolerancePolicy& tol);

// Structure tensor of S in its canonical basis; throws math_error unless S is
// closed under the product.
LeibnizAlgebra induced_subalgebra(const LeibnizAlgebra& a, const Subspace& s,
                                  const TolerancePolicy& tol);

// A/S for a two-sided ideal S (verified; throws math_error otherwise).
LeibnizAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& s,
                                const TolerancePolicy& tol);

// Alternating product (b_i b_i = 0 and b_i b_j = -b_j b_i).
bool is_lie(const LeibnizAlgebra& a, const TolerancePolicy& tol);

}  // namespace leibniz
