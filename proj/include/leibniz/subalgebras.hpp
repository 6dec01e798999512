#pragma once

#include "leibniz/cyclic.hpp"

namespace leibniz {

// Generalized kernel of left multiplication by x (Fitting null component);
// verified to be closed under the product before returning.
Subspace engel_subalgebra(const LeibnizAlgebra& a, const Element& x, const TolerancePolicy& tol);

struct FittingDecomposition {
    Subspace null_part;   // generalized kernel of L_x
    Subspace range_part;  // image of L_x^dim
};

// Fitting decomposition of the algebra under L_x; throws math_error when the
// two parts fail to split the space (a float-degeneracy guard).
FittingDecomposition fitting(const LeibnizAlgebra& a, const Element& x,
                             const TolerancePolicy& tol);

// The Engel subalgebra of the generator = the Cartan subalgebra of a cyclic
// algebra. Verified nilpotent and self-normalizing; throws math_error if not.
Subspace cartan_cyclic(const CyclicPresentation& p, const TolerancePolicy& tol);

struct EngelScanResult {
    std::vector<Element> elements;        // one representative per distinct subalgebra
    std::vector<Subspace> distinct;       // distinct Engel subalgebras found
    std::vector<size_t> minimal_indices;  // entries of `distinct` minimal by inclusion
};

// Engel subalgebras of all nonzero integer-coordinate elements in [lo,hi]^dim.
EngelScanResult engel_scan(const LeibnizAlgebra& a, long lo, long hi,
                           const TolerancePolicy& tol);

enum class ElementaryVerdict { yes, no, not_applicable };
const char* elementary_verdict_name(ElementaryVerdict v);

struct MaximalsReport {
    std::vector<Subspace> maximals;  // one per distinct eigenvalue of L_a
    Subspace frattini = Subspace::zero(0, Backend::exact);  // intersection of the maximals
    FactoredPoly roots;              // eigenvalues of L_a with multiplicities
    ElementaryVerdict elementary;    // frattini == 0, when A*A is nilpotent
    bool exact_path = false;         // true when roots verified in Q(i) and kernels exact
};

// Maximal subalgebras of a cyclic algebra: kernels of (p/(x - lambda_j))(L_a)
// over the distinct eigenvalues lambda_j; the Frattini subalgebra is the
// kernel of (prod (x - lambda_j)^(m_j - 1))(L_a).
MaximalsReport maximal_subalgebras(const CyclicPresentation& p, const TolerancePolicy& tol);

// Frattini subalgebra computed the definitional way, as the intersection of
// all maximal subalgebras. Cross-check for MaximalsReport.frattini.
Subspace frattini_oracle(const CyclicPresentation& p, const TolerancePolicy& tol);

}  // namespace leibniz
