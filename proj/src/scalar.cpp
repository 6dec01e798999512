#include "leibniz/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace leibniz {

void TolerancePolicy::validate() const {
    if (!(eps_rank > 0) || !(eps_root > 0) || !(eps_cmp > 0))
        throw std::invalid_argument("tolerances must be positive");
}

TolerancePolicy TolerancePolicy::scaled(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("tolerance must be positive");
    double f = eps / 1e-9;
    TolerancePolicy t;
    t.eps_rank *= f;
    t.eps_root *= f;
    t.eps_cmp *= f;
    return t;
}

namespace {

[[noreturn]] void mixed() { throw backend_error("mixed exact/float operands"); }

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (backend() != o.backend()) mixed();
    if (is_exact()) return exact(rat() + o.rat());
    return fp(cplx() + o.cplx());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (backend() != o.backend()) mixed();
    if (is_exact()) return exact(rat() - o.rat());
    return fp(cplx() - o.cplx());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (backend() != o.backend()) mixed();
    if (is_exact()) return exact(rat() * o.rat());
    return fp(cplx() * o.cplx());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (backend() != o.backend()) mixed();
    if (is_exact()) return exact(rat() / o.rat());
    if (o.cplx() == std::complex<double>{0.0, 0.0}) throw math_error("division by zero");
    return fp(cplx() / o.cplx());
}

Scalar Scalar::operator-() const {
    if (is_exact()) return exact(-rat());
    return fp(-cplx());
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() != o.backend()) return false;
    if (is_exact()) return rat() == o.rat();
    return cplx() == o.cplx();
}

bool Scalar::is_zero() const {
    if (is_exact()) return rat().is_zero();
    return cplx() == std::complex<double>{0.0, 0.0};
}

bool Scalar::near_zero(double eps) const {
    if (is_exact()) return is_zero();
    return std::abs(cplx()) <= eps;
}

bool Scalar::near(const Scalar& o, double eps) const {
    if (backend() != o.backend()) mixed();
    if (is_exact()) return rat() == o.rat();
    return std::abs(cplx() - o.cplx()) <= eps;
}

Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op, const TolerancePolicy& tol) {
    tol.validate();
    if (x.backend() != y.backend()) mixed();
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div:
            if (y.is_exact() ? y.is_zero() : y.abs() <= tol.eps_cmp)
                throw math_error("division by (near-)zero");
            return x / y;
    }
    throw std::logic_error("unreachable");
}

bool scalar_eq(const Scalar& x, const Scalar& y, const TolerancePolicy& tol) {
    return x.near(y, tol.eps_cmp);
}

Scalar sqrt_principal(const Scalar& x, const TolerancePolicy& tol) {
    tol.validate();
    if (x.is_exact()) throw backend_error("sqrt_principal is float-backend only");
    return Scalar::fp(std::sqrt(x.cplx()));
}

namespace {

std::string rat_text(const mpq_class& q) { return q.get_str(); }

// Parses sign? digits (/digits)? starting at pos; advances pos past it.
mpq_class parse_rat(std::string_view s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
    if (digits == 0) throw parse_error("expected digits in scalar text");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++den_digits;
        if (den_digits == 0) throw parse_error("expected denominator digits");
    }
    std::string body(s.substr(start, pos - start));
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    mpq_class q;
    try {
        q = mpq_class(body);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: " + body);
    }
    if (q.get_den() == 0) throw parse_error("zero denominator: " + body);
    q.canonicalize();
    return q;
}

}  // namespace

Scalar parse_exact_scalar(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty scalar text");

    if (s.back() != 'i') {
        size_t pos = 0;
        mpq_class re = parse_rat(s, pos);
        if (pos != s.size()) throw parse_error("trailing characters in scalar text: " + s);
        return Scalar::exact(std::move(re));
    }

    std::string body = s.substr(0, s.size() - 1);
    if (body.empty() || body == "+") return Scalar::exact(0, 1);
    if (body == "-") return Scalar::exact(0, -1);

    size_t pos = 0;
    mpq_class first = parse_rat(body, pos);
    if (pos == body.size()) return Scalar::exact(0, std::move(first));  // pure imaginary

    if (body[pos] != '+' && body[pos] != '-')
        throw parse_error("expected sign between real and imaginary part: " + s);
    if (pos + 1 == body.size()) {  // "a+i" / "a-i"
        mpq_class im = body[pos] == '+' ? 1 : -1;
        return Scalar::exact(std::move(first), std::move(im));
    }
    mpq_class im = parse_rat(body, pos);
    if (pos != body.size()) throw parse_error("trailing characters in scalar text: " + s);
    return Scalar::exact(std::move(first), std::move(im));
}

std::string exact_scalar_text(const GaussianRational& g) {
    if (g.im == 0) return rat_text(g.re);
    std::string im_part = rat_text(abs(g.im)) + "i";
    if (g.re == 0) return (g.im < 0 ? "-" : "") + im_part;
    return rat_text(g.re) + (g.im < 0 ? "-" : "+") + im_part;
}

std::string Scalar::to_text() const {
    if (is_exact()) return exact_scalar_text(rat());
    std::ostringstream os;
    auto z = cplx();
    os << '(' << z.real() << ',' << z.imag() << ')';
    return os.str();
}

mpq_class rationalize(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw math_error("cannot rationalize non-finite value");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // Continued fraction convergents p/q; stop when q would exceed max_den.
    unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    mpq_class best(0);
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        unsigned long a = static_cast<unsigned long>(fl);
        // overflow-safe advance
        if (q1 != 0 && a > ((unsigned long)-1 - q0) / q1) break;
        unsigned long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den && q1 != 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        best = mpq_class(static_cast<unsigned long>(p1), static_cast<unsigned long>(q1));
        best.canonicalize();
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) best = 0;
    return neg ? mpq_class(-best) : best;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_text(); }

}  // namespace leibniz
