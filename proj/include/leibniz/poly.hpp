#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

// Polynomial with coefficients ascending by degree, trailing structural zeros
// trimmed. The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    explicit Poly(Backend b) : backend_(b) {}
    explicit Poly(std::vector<Scalar> coeffs);

    static Poly from_roots(const std::vector<std::complex<double>>& roots);  // monic, float
    static Poly linear(const Scalar& root);                                  // x - root

    Backend backend() const { return backend_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(backend_);
    }

    Scalar eval(const Scalar& x) const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly to_float() const;

    // Synthetic division by (x - root): returns quotient and remainder p(root).
    std::pair<Poly, Scalar> divide_linear(const Scalar& root) const;

    std::string text() const;

private:
    Backend backend_;
    std::vector<Scalar> coeffs_;
};

struct RootCluster {
    std::complex<double> value;
    int multiplicity = 0;
};

// Distinct roots with multiplicities; sum of multiplicities equals the degree.
struct FactoredPoly {
    std::vector<RootCluster> roots;
};

// All complex roots of a degree >= 1 polynomial: closed forms through degree 3,
// Durand-Kerner beyond, roots within eps_root clustered into one multiple root.
// Works on the float image of exact input. Throws math_error if iteration fails.
FactoredPoly poly_roots(const Poly& p, const TolerancePolicy& tol);

// Horner evaluation of p at a square matrix (backends must match).
Matrix poly_of_matrix(const Poly& p, const Matrix& m);

}  // namespace leibniz
