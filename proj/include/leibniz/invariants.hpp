#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

struct DerivationSpace {
    std::vector<Matrix> basis;        // canonical basis of the derivation algebra
    std::vector<Matrix> inner_basis;  // basis of span{ L_x : x in A }
    size_t outer_dim = 0;             // dim Der(A) - dim Inner(A)
};

// All D with D(xy) = (Dx)y + x(Dy), solved as a linear system over the n^2
// matrix entries. Inner derivations are the left multiplications.
DerivationSpace derivations(const LeibnizAlgebra& a, const TolerancePolicy& tol);

bool is_derivation(const LeibnizAlgebra& a, const Matrix& d, const TolerancePolicy& tol);

struct KillingReport {
    Matrix gram;       // kappa(b_i, b_j) = trace(L_i L_j)
    Subspace radical;  // kernel of the form
    bool trivial = false;
    bool radical_equals_leib = false;
    bool radical_equals_whole = false;
};

KillingReport killing(const LeibnizAlgebra& a, const TolerancePolicy& tol);

// How the Killing form fails to detect solvability: these algebras are
// solvable (radical = whole algebra), yet the Killing radical can coincide
// with the proper ideal Leib(A), or degenerate to everything only at special
// parameter values.
struct SemisimplicityReport {
    bool solvable = false;                   // derived series vanishes
    bool killing_radical_equals_leib = false;  // radical == Leib(A) != A
    bool killing_radical_is_whole = false;     // radical == A
};

SemisimplicityReport semisimplicity_counterexamples(const LeibnizAlgebra& a,
                                                    const TolerancePolicy& tol);

}  // namespace leibniz
