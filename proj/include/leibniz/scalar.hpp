#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace leibniz {

// Thresholds used by every tolerance-gated decision on the floating backend.
// Exact-backend decisions never consult these.
struct TolerancePolicy {
    double eps_rank = 1e-9;  // pivot threshold in echelon reduction, relative to max|entry|
    double eps_root = 1e-7;  // clustering radius for coincident polynomial roots
    double eps_cmp = 1e-9;   // scalar equality threshold

    void validate() const;

    // Scale all three thresholds by the ratio eps/1e-9 (used by --tolerance).
    static TolerancePolicy scaled(double eps);
};

struct backend_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Backend { exact, floating };

inline const char* backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

// Element of Q(i), kept canonicalized (gmp reduced form, positive denominators).
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class n = b.re * b.re + b.im * b.im;
        if (n == 0) throw math_error("division by exact zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_zero() const { return re == 0 && im == 0; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

// One number, on exactly one backend. Mixed-backend arithmetic throws;
// the only crossing is the explicit, lossy to_float().
class Scalar {
public:
    Scalar() : v_(GaussianRational{}) {}

    static Scalar exact(mpq_class re, mpq_class im = 0) {
        return Scalar(GaussianRational{std::move(re), std::move(im)});
    }
    static Scalar exact(const GaussianRational& g) { return Scalar(g); }
    static Scalar fp(double re, double im = 0.0) { return Scalar(std::complex<double>{re, im}); }
    static Scalar fp(std::complex<double> z) { return Scalar(z); }
    static Scalar zero(Backend b) { return b == Backend::exact ? exact(0) : fp(0.0); }
    static Scalar one(Backend b) { return b == Backend::exact ? exact(1) : fp(1.0); }

    Backend backend() const {
        return std::holds_alternative<GaussianRational>(v_) ? Backend::exact : Backend::floating;
    }
    bool is_exact() const { return backend() == Backend::exact; }

    const GaussianRational& rat() const {
        if (!is_exact()) throw backend_error("exact value requested from float scalar");
        return std::get<GaussianRational>(v_);
    }
    // Numeric view; converts exact values (approximately) when asked.
    std::complex<double> cplx() const {
        if (is_exact()) return std::get<GaussianRational>(v_).to_complex();
        return std::get<std::complex<double>>(v_);
    }
    Scalar to_float() const { return fp(cplx()); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws math_error on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Structural equality on a common backend (exact: exact; float: bitwise).
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    bool is_zero() const;                // exact zero resp. +-0.0
    bool near_zero(double eps) const;    // exact: is_zero(); float: |z| <= eps
    bool near(const Scalar& o, double eps) const;  // same-backend comparison
    double abs() const { return std::abs(cplx()); }

    std::string to_text() const;  // exact: canonical "p/q+r/s i" form; float: "(re,im)"

private:
    explicit Scalar(GaussianRational g) : v_(std::move(g)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}
    std::variant<GaussianRational, std::complex<double>> v_;
};

enum class ArithOp { add, sub, mul, div };

// Tolerance-aware arithmetic entry point: rejects mixed backends, guards
// division by (near-)zero per policy.
Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op, const TolerancePolicy& tol);

// Equality predicate used everywhere: exact backend compares exactly,
// float backend compares within eps_cmp.
bool scalar_eq(const Scalar& x, const Scalar& y, const TolerancePolicy& tol);

// Principal square root (branch cut on the negative real axis), float backend only.
Scalar sqrt_principal(const Scalar& x, const TolerancePolicy& tol);

// Parse the canonical exact text form: "p/q", "p/q i", "p/q+r/s i" (spaces ignored,
// "/q" optional, bare "i"/"-i" allowed). Throws parse_error on anything else.
Scalar parse_exact_scalar(std::string_view text);

// Emit the canonical exact text form; parse(emit(x)) == x and emission is unique.
std::string exact_scalar_text(const GaussianRational& g);

// Best rational approximation with denominator <= max_den (continued fractions).
mpq_class rationalize(double x, unsigned long max_den);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace leibniz
