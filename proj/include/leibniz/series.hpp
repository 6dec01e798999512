#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class SeriesKind { lower_central, derived, right_normed };
enum class SeriesVerdict { nilpotent, solvable, neither_at_cutoff };

const char* series_kind_name(SeriesKind k);
const char* series_verdict_name(SeriesVerdict v);

struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;  // first term is the whole algebra
    bool stabilized = false;      // hit a fixed point within the cutoff
    std::optional<size_t> vanishes_at;  // 1-based index of the first zero term
    SeriesVerdict verdict = SeriesVerdict::neither_at_cutoff;
};

// A^1 = A, A^{k+1} = A * A^k. Vanishing <=> nilpotent.
SeriesReport lower_central_series(const LeibnizAlgebra& a, const TolerancePolicy& tol);
// A^(0) = A, A^(k+1) = A^(k) * A^(k). Vanishing <=> solvable.
SeriesReport derived_series(const LeibnizAlgebra& a, const TolerancePolicy& tol);
// B_1 = A, B_{k+1} = B_k * A. Vanishing certifies nothing about nilpotency
// (right multiplications can all be nilpotent in a non-nilpotent algebra),
// so this report never claims a verdict; vanishes_at still records the length.
SeriesReport right_normed_series(const LeibnizAlgebra& a, const TolerancePolicy& tol);

enum class Side { left, right };

struct EngelReport {
    Side side;
    bool all_nilpotent = false;      // over the certified set (see certification)
    std::vector<Element> witnesses;  // sampled elements whose operator is not nilpotent
    // "exact": every length-dim word in the basis operators vanishes, which
    // certifies nilpotency of the operator of *every* element.
    // "basis-grid": only the sampled elements were checked.
    std::string certification;
};

// Is every left (right) multiplication operator nilpotent?
EngelReport engel_condition(const LeibnizAlgebra& a, Side side, const TolerancePolicy& tol);

struct MaximalIdealSummary {
    bool all_left = true;
    bool all_right = true;
    bool all_two_sided = true;
};

// Ideal status of a given family of maximal subalgebras. "All maximals are
// left ideals" does NOT imply nilpotency; "all two-sided" does (for the
// algebras in scope). The caller pairs this with a series verdict.
MaximalIdealSummary nilpotency_via_maximals(const LeibnizAlgebra& a,
                                            const std::vector<Subspace>& maximals,
                                            const TolerancePolicy& tol);

}  // namespace leibniz
