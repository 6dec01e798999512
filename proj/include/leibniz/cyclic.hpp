#pragma once

#include <complex>
#include <optional>

#include "leibniz/algebra.hpp"
#include "leibniz/poly.hpp"

namespace leibniz {

// Cyclic algebra data: basis a, a^2, ..., a^n with a * a^i = a^{i+1} (i < n),
// a * a^n = sum_{k>=2} alpha_k a^k, and a^j * x = 0 for j >= 2. coeffs holds
// alpha_2..alpha_n; alpha_1 is structurally zero and may not be supplied.
struct CyclicPresentation {
    size_t dim = 0;
    std::vector<Scalar> coeffs;  // length dim - 1

    Backend backend() const;
    void validate() const;  // dim >= 2, length, uniform backend
    CyclicPresentation to_float() const;
};

LeibnizAlgebra build_cyclic(const CyclicPresentation& p);

// Matrix of left multiplication by the generator, and its characteristic
// polynomial p(x) = x^n - alpha_n x^{n-1} - ... - alpha_2 x.
struct CompanionData {
    Matrix op;
    Poly charpoly;
};
CompanionData companion_data(const CyclicPresentation& p);

// Left-normed powers t, t*t, t*(t*t), ...: exactly dim of them.
std::vector<Element> powers_of(const LeibnizAlgebra& a, const Element& t);

enum class CyclicMethod { grid, randomized };

struct CyclicityResult {
    bool cyclic = false;
    std::optional<Element> generator;  // first generator in scan order, if any
    CyclicMethod method = CyclicMethod::grid;
    // Probability that "not cyclic" is wrong (randomized path only; the grid
    // path and any found generator are certain up to tolerance).
    double failure_probability = 0.0;
};

// Does some element generate the whole algebra through its powers? Scans the
// deterministic grid {0..n(n+1)/2}^n for n <= 4 (a polynomial-identity test:
// the power-determinant has per-variable degree <= n(n+1)/2), random integer
// points beyond that.
CyclicityResult is_cyclic(const LeibnizAlgebra& a, const TolerancePolicy& tol);

// The alpha-coefficients of t * t^n over t^2..t^n for a verified generator t.
// Throws math_error if t does not generate or its alpha_1-coordinate is not 0.
CyclicPresentation presentation_of_generator(const LeibnizAlgebra& a, const Element& t,
                                             const TolerancePolicy& tol);

enum class ClassTag { nilpotent, type2, type3 };

const char* class_tag_name(ClassTag t);

// Isomorphism class of a 3-dimensional cyclic algebra:
//   nilpotent: a*a^3 = 0
//   type2:     a*a^3 = a^3
//   type3:     a*a^3 = a^2 + gamma*a^3 with gamma normalized into arg in [0, pi)
//              (gamma and -gamma give isomorphic algebras).
struct CanonicalClass {
    ClassTag tag = ClassTag::nilpotent;
    std::complex<double> gamma{0.0, 0.0};  // meaningful for type3 only
};

CanonicalClass classify3(const CyclicPresentation& p, const TolerancePolicy& tol);
bool class_equal(const CanonicalClass& x, const CanonicalClass& y, const TolerancePolicy& tol);
bool isomorphic3(const CyclicPresentation& p, const CyclicPresentation& q,
                 const TolerancePolicy& tol);

}  // namespace leibniz
