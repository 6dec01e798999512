#include "leibniz/series.hpp"

#include <cmath>
#include <functional>

namespace leibniz {

const char* series_kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::lower_central: return "lower_central";
        case SeriesKind::derived: return "derived";
        case SeriesKind::right_normed: return "right_normed";
    }
    return "?";
}

const char* series_verdict_name(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::nilpotent: return "nilpotent";
        case SeriesVerdict::solvable: return "solvable";
        case SeriesVerdict::neither_at_cutoff: return "neither-at-cutoff";
    }
    return "?";
}

namespace {

// next(prev) must be monotone (next <= prev); dims then strictly decrease
// until the fixed point, so dim equality detects stabilization.
SeriesReport run_series(const LeibnizAlgebra& a, SeriesKind kind,
                        const std::function<Subspace(const Subspace&)>& next) {
    SeriesReport rep;
    rep.kind = kind;
    Subspace cur = Subspace::full(a.dim(), a.backend());
    rep.terms.push_back(cur);
    for (size_t step = 0; step <= a.dim() + 1; ++step) {
        Subspace nxt = next(cur);
        if (nxt.dim() == cur.dim()) {
            rep.stabilized = true;
            break;
        }
        rep.terms.push_back(nxt);
        if (nxt.dim() == 0) {
            rep.stabilized = true;
            rep.vanishes_at = rep.terms.size();
            break;
        }
        cur = nxt;
    }
    switch (kind) {
        case SeriesKind::lower_central:
            rep.verdict = rep.vanishes_at ? SeriesVerdict::nilpotent
                                          : SeriesVerdict::neither_at_cutoff;
            break;
        case SeriesKind::derived:
            rep.verdict =
                rep.vanishes_at ? SeriesVerdict::solvable : SeriesVerdict::neither_at_cutoff;
            break;
        case SeriesKind::right_normed:
            rep.verdict = SeriesVerdict::neither_at_cutoff;
            break;
    }
    return rep;
}

}  // namespace

SeriesReport lower_central_series(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    Subspace full = Subspace::full(a.dim(), a.backend());
    return run_series(a, SeriesKind::lower_central, [&](const Subspace& prev) {
        return subspace_product(a, full, prev, tol);
    });
}

SeriesReport derived_series(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    return run_series(a, SeriesKind::derived, [&](const Subspace& prev) {
        return subspace_product(a, prev, prev, tol);
    });
}

SeriesReport right_normed_series(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    Subspace full = Subspace::full(a.dim(), a.backend());
    return run_series(a, SeriesKind::right_normed, [&](const Subspace& prev) {
        return subspace_product(a, prev, full, tol);
    });
}

namespace {

bool matrix_nilpotent(const Matrix& m, const TolerancePolicy& tol) {
    Matrix p = m.pow(m.rows());
    if (m.backend() == Backend::exact) return p.is_zero();
    double scale = std::max(1.0, std::pow(m.max_abs(), double(m.rows())));
    return p.near_zero(tol.eps_cmp * scale);
}

// DFS over words in the basis operators; zero prefixes prune their subtree.
bool words_vanish(const std::vector<Matrix>& ops, const Matrix& prefix, size_t depth,
                  double zero_eps) {
    if (depth == 0) {
        if (prefix.backend() == Backend::exact) return prefix.is_zero();
        return prefix.near_zero(zero_eps);
    }
    for (const Matrix& op : ops) {
        Matrix next = prefix * op;
        bool zero =
            next.backend() == Backend::exact ? next.is_zero() : next.near_zero(zero_eps);
        if (zero) continue;
        if (!words_vanish(ops, next, depth - 1, zero_eps)) return false;
    }
    return true;
}

}  // namespace

EngelReport engel_condition(const LeibnizAlgebra& a, Side side, const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    EngelReport rep;
    rep.side = side;

    std::vector<Matrix> ops;
    for (size_t i = 0; i < n; ++i) {
        Element bi = a.basis_element(i);
        ops.push_back(side == Side::left ? a.left_mult(bi) : a.right_mult(bi));
    }

    // Word certificate: if every product of dim operators (in any order)
    // vanishes, then the multiplication operator of every element, a linear
    // combination of the basis operators, has vanishing dim-th power.
    double op_scale = 1.0;
    for (const Matrix& op : ops) op_scale = std::max(op_scale, op.max_abs());
    double word_eps = tol.eps_cmp * std::pow(op_scale, double(n));
    if (n <= 6 && words_vanish(ops, Matrix::identity(n, a.backend()), n, word_eps)) {
        rep.all_nilpotent = true;
        rep.certification = "exact";
        return rep;
    }

    rep.certification = "basis-grid";
    rep.all_nilpotent = true;
    auto check = [&](const Element& x) {
        Matrix m = side == Side::left ? a.left_mult(x) : a.right_mult(x);
        if (!matrix_nilpotent(m, tol)) {
            rep.all_nilpotent = false;
            rep.witnesses.push_back(x);
        }
    };
    if (n <= 6) {
        // all integer coordinate vectors in {-1,0,1}^n, zero excluded
        std::vector<long> c(n, -1);
        while (true) {
            bool all_zero = true;
            for (long v : c)
                if (v != 0) all_zero = false;
            if (!all_zero) {
                Element x;
                x.reserve(n);
                for (long v : c)
                    x.push_back(a.backend() == Backend::exact ? Scalar::exact(v)
                                                              : Scalar::fp(double(v)));
                check(x);
            }
            size_t pos = n;
            while (pos > 0 && c[pos - 1] == 1) c[--pos] = -1;
            if (pos == 0) break;
            ++c[pos - 1];
        }
    } else {
        for (size_t i = 0; i < n; ++i) {
            check(a.basis_element(i));
            for (size_t j = i + 1; j < n; ++j) {
                Element x = a.basis_element(i), y = a.basis_element(j);
                Element sum = x, dif = x;
                sum[j] = Scalar::one(a.backend());
                dif[j] = -Scalar::one(a.backend());
                check(sum);
                check(dif);
            }
        }
    }
    return rep;
}

MaximalIdealSummary nilpotency_via_maximals(const LeibnizAlgebra& a,
                                            const std::vector<Subspace>& maximals,
                                            const TolerancePolicy& tol) {
    MaximalIdealSummary s;
    for (const Subspace& m : maximals) {
        IdealCheckResult r = ideal_check(a, m, tol);
        s.all_left = s.all_left && r.left;
        s.all_right = s.all_right && r.right;
        s.all_two_sided = s.all_two_sided && r.two_sided;
    }
    return s;
}

}  // namespace leibniz
