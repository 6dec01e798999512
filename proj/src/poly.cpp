#include "leibniz/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace leibniz {

Poly::Poly(std::vector<Scalar> coeffs) : backend_(Backend::exact), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) return;
    backend_ = coeffs_.front().backend();
    for (const Scalar& c : coeffs_)
        if (c.backend() != backend_) throw backend_error("mixed backend in polynomial");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_roots(const std::vector<std::complex<double>>& roots) {
    Poly p(std::vector<Scalar>{Scalar::fp(1.0)});
    for (auto r : roots) p = p * linear(Scalar::fp(r));
    return p;
}

Poly Poly::linear(const Scalar& root) {
    return Poly(std::vector<Scalar>{-root, Scalar::one(root.backend())});
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(backend_);
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    if (backend_ != o.backend_) throw backend_error("mixed backend in polynomial sum");
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(backend_));
    for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    if (backend_ != o.backend_) throw backend_error("mixed backend in polynomial difference");
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(backend_));
    for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (backend_ != o.backend_) throw backend_error("mixed backend in polynomial product");
    if (coeffs_.empty() || o.coeffs_.empty()) return Poly(backend_);
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(backend_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::to_float() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const Scalar& s : coeffs_) c.push_back(s.to_float());
    Poly p(Backend::floating);
    p.coeffs_ = std::move(c);  // keep length: float conversion must not re-trim
    return p;
}

std::pair<Poly, Scalar> Poly::divide_linear(const Scalar& root) const {
    if (coeffs_.empty()) return {Poly(backend_), Scalar::zero(backend_)};
    std::vector<Scalar> q(coeffs_.size() - 1, Scalar::zero(backend_));
    Scalar carry = coeffs_.back();
    for (size_t k = coeffs_.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = coeffs_[k] + root * carry;
    }
    return {Poly(std::move(q)), carry};
}

std::string Poly::text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        os << coeffs_[k].to_text() << "*x^" << k << (k ? " + " : "");
    }
    return os.str();
}

namespace {

using cplx = std::complex<double>;

std::vector<cplx> float_coeffs(const Poly& p) {
    std::vector<cplx> c;
    c.reserve(p.coeffs().size());
    for (const Scalar& s : p.coeffs()) c.push_back(s.cplx());
    return c;
}

cplx horner(const std::vector<cplx>& c, cplx x) {
    cplx acc = 0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

std::vector<cplx> roots_quadratic(cplx b, cplx c) {
    // monic x^2 + b x + c, cancellation-safe
    cplx s = std::sqrt(b * b - 4.0 * c);
    if (std::real(std::conj(b) * s) > 0) s = -s;
    cplx q = -0.5 * (b - s);  // the larger-magnitude root numerator
    if (q == cplx(0, 0)) return {cplx(0, 0), cplx(0, 0)};
    return {q, c / q};
}

std::vector<cplx> roots_cubic(cplx b, cplx c, cplx d) {
    // monic x^3 + b x^2 + c x + d; depressed t^3 + p t + q with x = t - b/3
    cplx p = c - b * b / 3.0;
    cplx q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    std::vector<cplx> out;
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) {
        out = {cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    } else {
        cplx s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        cplx u3 = -q / 2.0 + s;
        if (std::abs(-q / 2.0 - s) > std::abs(u3)) u3 = -q / 2.0 - s;
        cplx u = std::pow(u3, 1.0 / 3.0);
        const cplx w(-0.5, std::sqrt(3.0) / 2.0);
        for (int k = 0; k < 3; ++k) {
            cplx uk = u * std::pow(w, k);
            out.push_back(uk - p / (3.0 * uk));
        }
    }
    for (auto& t : out) t -= b / 3.0;
    return out;
}

std::vector<cplx> roots_durand_kerner(const std::vector<cplx>& monic) {
    size_t n = monic.size() - 1;
    double radius = 0.0;
    for (size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(monic[k]));
    radius = 1.0 + radius;
    std::vector<cplx> z(n);
    const cplx seed(0.4, 0.9);
    cplx cur = 1.0;
    for (size_t k = 0; k < n; ++k) {
        cur *= seed;
        z[k] = radius * cur;
    }
    for (int it = 0; it < 2000; ++it) {
        double shift = 0.0;
        for (size_t k = 0; k < n; ++k) {
            cplx denom = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == cplx(0, 0)) {
                z[k] += cplx(1e-8, 1e-8);
                shift = 1.0;
                continue;
            }
            cplx delta = horner(monic, z[k]) / denom;
            z[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14 * (1.0 + radius)) return z;
    }
    // accept if residuals are small despite slow (multiple-root) convergence
    for (auto v : z)
        if (std::abs(horner(monic, v)) > 1e-6 * std::pow(radius, double(n)))
            throw math_error("root iteration did not converge");
    return z;
}

// Newton polish against the monic polynomial; keeps simple roots crisp.
void polish(const std::vector<cplx>& monic, std::vector<cplx>& roots) {
    std::vector<cplx> deriv(monic.size() - 1);
    for (size_t k = 1; k < monic.size(); ++k) deriv[k - 1] = double(k) * monic[k];
    for (auto& r : roots)
        for (int it = 0; it < 3; ++it) {
            cplx d = horner(deriv, r);
            if (std::abs(d) < 1e-12) break;
            cplx step = horner(monic, r) / d;
            if (!(std::abs(step) < 1.0)) break;
            r -= step;
        }
}

}  // namespace

FactoredPoly poly_roots(const Poly& p, const TolerancePolicy& tol) {
    tol.validate();
    if (p.degree() < 1) throw std::invalid_argument("poly_roots needs degree >= 1");
    std::vector<cplx> c = float_coeffs(p);
    cplx lead = c.back();
    if (std::abs(lead) == 0.0) throw math_error("zero leading coefficient");
    for (auto& x : c) x /= lead;

    size_t n = c.size() - 1;
    std::vector<cplx> roots;
    if (n == 1) {
        roots = {-c[0]};
    } else if (n == 2) {
        roots = roots_quadratic(c[1], c[0]);
    } else if (n == 3) {
        roots = roots_cubic(c[2], c[1], c[0]);
        polish(c, roots);
    } else {
        roots = roots_durand_kerner(c);
        polish(c, roots);
    }

    // cluster within eps_root (transitively), centroid as representative
    std::vector<int> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) <= tol.eps_root) parent[find(int(i))] = find(int(j));

    std::vector<RootCluster> clusters;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (size_t(find(int(i))) != i) continue;
        cplx sum = 0;
        int count = 0;
        for (size_t j = 0; j < roots.size(); ++j)
            if (size_t(find(int(j))) == i) {
                sum += roots[j];
                ++count;
            }
        clusters.push_back({sum / double(count), count});
    }
    // snap to the clustering grid before comparing so noise-level differences in
    // one coordinate cannot preempt a genuine difference in the next
    auto snap = [&](double x) { return std::round(x / tol.eps_root); };
    std::sort(clusters.begin(), clusters.end(), [&](const RootCluster& a, const RootCluster& b) {
        double ar = snap(a.value.real()), br = snap(b.value.real());
        if (ar != br) return ar < br;
        return snap(a.value.imag()) < snap(b.value.imag());
    });
    return FactoredPoly{std::move(clusters)};
}

Matrix poly_of_matrix(const Poly& p, const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("poly_of_matrix needs a square matrix");
    if (p.degree() >= 0 && p.backend() != m.backend())
        throw backend_error("polynomial/matrix backend mismatch");
    Matrix acc(m.rows(), m.rows(), m.backend());
    const auto& c = p.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        acc = acc * m;
        for (size_t i = 0; i < m.rows(); ++i) acc.at(i, i) += c[k];
    }
    return acc;
}

}  // namespace leibniz
