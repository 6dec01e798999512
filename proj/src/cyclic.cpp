#include "leibniz/cyclic.hpp"

#include <cmath>
#include <random>

namespace leibniz {

Backend CyclicPresentation::backend() const {
    return coeffs.empty() ? Backend::exact : coeffs.front().backend();
}

void CyclicPresentation::validate() const {
    if (dim < 2) throw dimension_error("cyclic presentation needs dim >= 2");
    if (coeffs.size() != dim - 1)
        throw dimension_error("cyclic presentation needs exactly dim-1 coefficients (alpha_2..alpha_n)");
    for (const Scalar& s : coeffs)
        if (s.backend() != backend()) throw backend_error("mixed backend in presentation");
}

CyclicPresentation CyclicPresentation::to_float() const {
    CyclicPresentation q;
    q.dim = dim;
    q.coeffs.reserve(coeffs.size());
    for (const Scalar& s : coeffs) q.coeffs.push_back(s.to_float());
    return q;
}

LeibnizAlgebra build_cyclic(const CyclicPresentation& p) {
    p.validate();
    const size_t n = p.dim;
    LeibnizAlgebra a(n, p.backend());
    for (size_t j = 0; j + 1 < n; ++j) a.c(0, j, j + 1) = Scalar::one(p.backend());
    for (size_t k = 2; k <= n; ++k) a.c(0, n - 1, k - 1) = p.coeffs[k - 2];
    std::vector<std::string> labels;
    labels.push_back("a");
    for (size_t k = 2; k <= n; ++k) labels.push_back("a^" + std::to_string(k));
    a.set_labels(std::move(labels));
    return a;
}

CompanionData companion_data(const CyclicPresentation& p) {
    p.validate();
    LeibnizAlgebra a = build_cyclic(p);
    Matrix t = a.left_mult(a.basis_element(0));
    std::vector<Scalar> c(p.dim + 1, Scalar::zero(p.backend()));
    c[p.dim] = Scalar::one(p.backend());
    for (size_t k = 2; k <= p.dim; ++k) c[k - 1] = -p.coeffs[k - 2];
    return {std::move(t), Poly(std::move(c))};
}

std::vector<Element> powers_of(const LeibnizAlgebra& a, const Element& t) {
    std::vector<Element> pw;
    pw.push_back(t);
    for (size_t k = 1; k < a.dim(); ++k) pw.push_back(a.product(t, pw.back()));
    return pw;
}

namespace {

bool generates(const LeibnizAlgebra& a, const Element& t, const TolerancePolicy& tol) {
    Matrix rows = Matrix::from_rows(powers_of(a, t), a.backend());
    return rref(rows, tol).rank == a.dim();
}

}  // namespace

CyclicityResult is_cyclic(const LeibnizAlgebra& a, const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    CyclicityResult res;

    // necessary: the span of all products has dimension exactly n-1
    if (algebra_square(a, tol).dim() != n - 1) return res;

    if (n <= 4) {
        // The grid {0..d}^n with d = n(n+1)/2 decides whether the determinant
        // of the power rows vanishes identically (per-variable degree <= d).
        const long d = static_cast<long>(n * (n + 1) / 2);
        std::vector<long> c(n, 0);
        while (true) {
            bool all_zero = true;
            for (long v : c)
                if (v != 0) all_zero = false;
            if (!all_zero) {
                Element t;
                t.reserve(n);
                for (long v : c)
                    t.push_back(a.backend() == Backend::exact ? Scalar::exact(v)
                                                              : Scalar::fp(double(v)));
                if (generates(a, t, tol)) {
                    res.cyclic = true;
                    res.generator = std::move(t);
                    return res;
                }
            }
            size_t pos = n;  // odometer, last coordinate fastest: lexicographic order
            while (pos > 0 && c[pos - 1] == d) c[--pos] = 0;
            if (pos == 0) break;
            ++c[pos - 1];
        }
        return res;
    }

    res.method = CyclicMethod::randomized;
    constexpr int samples = 32;
    constexpr long box = 1 << 16;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // fixed seed: deterministic tool
    std::uniform_int_distribution<long> dist(1, box);
    for (int s = 0; s < samples; ++s) {
        Element t;
        t.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            long v = dist(rng);
            t.push_back(a.backend() == Backend::exact ? Scalar::exact(v)
                                                      : Scalar::fp(double(v)));
        }
        if (generates(a, t, tol)) {
            res.cyclic = true;
            res.generator = std::move(t);
            return res;
        }
    }
    double per_sample = double(n * (n + 1) / 2) / double(box);  // Schwartz-Zippel
    res.failure_probability = std::pow(per_sample, samples);
    return res;
}

CyclicPresentation presentation_of_generator(const LeibnizAlgebra& a, const Element& t,
                                             const TolerancePolicy& tol) {
    tol.validate();
    const size_t n = a.dim();
    std::vector<Element> pw = powers_of(a, t);
    Element target = a.product(t, pw.back());

    // solve sum_k x_k t^k = t * t^n  (columns are the powers)
    Matrix aug(n, n + 1, a.backend());
    for (size_t k = 0; k < n; ++k)
        for (size_t r = 0; r < n; ++r) aug.at(r, k) = pw[k][r];
    for (size_t r = 0; r < n; ++r) aug.at(r, n) = target[r];
    RrefResult rr = rref(aug, tol);
    bool full_rank = rr.rank == n;
    for (size_t k = 0; k < n && full_rank; ++k)
        if (rr.pivots[k] != k) full_rank = false;
    if (!full_rank) throw math_error("element does not generate the algebra");

    std::vector<Scalar> x(n, Scalar::zero(a.backend()));
    for (size_t k = 0; k < n; ++k) x[k] = rr.mat.at(k, n);
    double scale = 1.0;
    for (const Element& p : pw)
        for (const Scalar& s : p) scale = std::max(scale, s.abs());
    if (!(a.backend() == Backend::exact ? x[0].is_zero()
                                        : x[0].near_zero(tol.eps_cmp * scale)))
        throw math_error("generator has nonzero alpha_1-coordinate; product is not Leibniz");

    CyclicPresentation pres;
    pres.dim = n;
    pres.coeffs.assign(x.begin() + 1, x.end());
    return pres;
}

const char* class_tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::nilpotent: return "nilpotent";
        case ClassTag::type2: return "type2";
        case ClassTag::type3: return "type3";
    }
    return "?";
}

namespace {

// Normalize gamma under gamma ~ -gamma into arg in [0, pi): real values go to
// |Re|, lower half-plane reflects up, near-axis components snap to the axis.
std::complex<double> normalize_gamma(std::complex<double> g, const TolerancePolicy& tol) {
    if (std::abs(g) <= tol.eps_cmp) return {0.0, 0.0};
    if (std::abs(g.imag()) <= tol.eps_cmp) return {std::abs(g.real()), 0.0};
    if (g.imag() < 0.0) g = -g;
    if (std::abs(g.real()) <= tol.eps_cmp) return {0.0, g.imag()};
    return g;
}

}  // namespace

CanonicalClass classify3(const CyclicPresentation& p, const TolerancePolicy& tol) {
    tol.validate();
    p.validate();
    if (p.dim != 3) throw dimension_error("classify3 needs a 3-dimensional presentation");
    const Scalar& alpha = p.coeffs[0];
    const Scalar& beta = p.coeffs[1];
    const bool alpha_zero =
        alpha.is_exact() ? alpha.is_zero() : alpha.near_zero(tol.eps_cmp);
    const bool beta_zero = beta.is_exact() ? beta.is_zero() : beta.near_zero(tol.eps_cmp);

    CanonicalClass cls;
    if (alpha_zero && beta_zero) {
        cls.tag = ClassTag::nilpotent;
        return cls;
    }
    if (alpha_zero) {
        cls.tag = ClassTag::type2;
        return cls;
    }
    cls.tag = ClassTag::type3;
    std::complex<double> g = beta.cplx() / std::sqrt(alpha.cplx());
    cls.gamma = normalize_gamma(g, tol);
    return cls;
}

bool class_equal(const CanonicalClass& x, const CanonicalClass& y, const TolerancePolicy& tol) {
    if (x.tag != y.tag) return false;
    if (x.tag != ClassTag::type3) return true;
    return std::abs(x.gamma - y.gamma) <= tol.eps_cmp * std::max(1.0, std::abs(x.gamma));
}

bool isomorphic3(const CyclicPresentation& p, const CyclicPresentation& q,
                 const TolerancePolicy& tol) {
    return class_equal(classify3(p, tol), classify3(q, tol), tol);
}

}  // namespace leibniz
