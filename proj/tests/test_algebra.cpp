#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/algebra.hpp"
#include "leibniz/cyclic.hpp"

using namespace leibniz;

namespace {

// basis a, a^2, a^3 with a*a = a^2, a*a^2 = a^3, a*a^3 = a^3
LeibnizAlgebra one_gen_idem() {
    LeibnizAlgebra a(3, Backend::exact);
    a.c(0, 0, 1) = Scalar::exact(1);
    a.c(0, 1, 2) = Scalar::exact(1);
    a.c(0, 2, 2) = Scalar::exact(1);
    return a;
}

LeibnizAlgebra sl2() {
    LeibnizAlgebra a(3, Backend::exact);  // basis e, f, h
    a.c(0, 1, 2) = Scalar::exact(1);      // ef = h
    a.c(1, 0, 2) = Scalar::exact(-1);     // fe = -h
    a.c(2, 0, 0) = Scalar::exact(2);      // he = 2e
    a.c(0, 2, 0) = Scalar::exact(-2);     // eh = -2e
    a.c(2, 1, 1) = Scalar::exact(-2);     // hf = -2f
    a.c(1, 2, 1) = Scalar::exact(2);      // fh = 2f
    return a;
}

Element vec(const LeibnizAlgebra& a, std::vector<long> v) {
    Element e = a.zero_element();
    for (size_t i = 0; i < v.size(); ++i) e[i] = Scalar::exact(v[i]);
    return e;
}

Subspace span(std::vector<std::vector<long>> rows, const TolerancePolicy& tol) {
    std::vector<std::vector<Scalar>> sr;
    for (auto& r : rows) {
        std::vector<Scalar> v;
        for (long x : r) v.push_back(Scalar::exact(x));
        sr.push_back(std::move(v));
    }
    return Subspace::span_of(Matrix::from_rows(sr, Backend::exact), tol);
}

Element rand_elem(const LeibnizAlgebra& a, std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    Element e = a.zero_element();
    for (auto& x : e) x = Scalar::exact(d(rng));
    return e;
}

}  // namespace

TEST_CASE("products and multiplication operators") {
    LeibnizAlgebra a = one_gen_idem();
    CHECK(a.product(a.basis_element(0), a.basis_element(0)) == vec(a, {0, 1, 0}));
    CHECK(a.product(a.basis_element(0), a.basis_element(2)) == vec(a, {0, 0, 1}));
    CHECK(a.product(a.basis_element(1), a.basis_element(0)) == vec(a, {0, 0, 0}));

    Matrix l = a.left_mult(a.basis_element(0));
    Matrix l_expect = Matrix::from_rows({{Scalar::exact(0), Scalar::exact(0), Scalar::exact(0)},
                                         {Scalar::exact(1), Scalar::exact(0), Scalar::exact(0)},
                                         {Scalar::exact(0), Scalar::exact(1), Scalar::exact(1)}},
                                        Backend::exact);
    CHECK((l - l_expect).is_zero());

    Matrix r = a.right_mult(a.basis_element(0));
    Matrix r_expect = Matrix::from_rows({{Scalar::exact(0), Scalar::exact(0), Scalar::exact(0)},
                                         {Scalar::exact(1), Scalar::exact(0), Scalar::exact(0)},
                                         {Scalar::exact(0), Scalar::exact(0), Scalar::exact(0)}},
                                        Backend::exact);
    CHECK((r - r_expect).is_zero());

    CHECK(a.max_constant() == doctest::Approx(1.0));

    // bilinearity on random elements
    std::mt19937 rng(3);
    for (int it = 0; it < 30; ++it) {
        Element x = rand_elem(a, rng), y = rand_elem(a, rng), z = rand_elem(a, rng);
        Element lhs = a.product(x, y);
        Element sum = x;
        for (size_t i = 0; i < 3; ++i) sum[i] = x[i] + z[i];
        Element rhs = a.product(sum, y);
        Element direct = a.product(z, y);
        for (size_t i = 0; i < 3; ++i) CHECK(rhs[i] == lhs[i] + direct[i]);
        // operator view matches the product
        CHECK(a.left_mult(x) * y == a.product(x, y));
        CHECK(a.right_mult(y) * x == a.product(x, y));
    }
}

TEST_CASE("left multiplications act as derivations when the identity holds") {
    std::mt19937 rng(5);
    CyclicPresentation p{4, {Scalar::exact(1), Scalar::exact(mpq_class(-2, 3)), Scalar::exact(0, 1)}};
    LeibnizAlgebra a = build_cyclic(p);
    for (int it = 0; it < 40; ++it) {
        Element x = rand_elem(a, rng), y = rand_elem(a, rng), z = rand_elem(a, rng);
        Element lhs = a.product(x, a.product(y, z));
        Element r1 = a.product(a.product(x, y), z);
        Element r2 = a.product(y, a.product(x, z));
        for (size_t i = 0; i < a.dim(); ++i) CHECK(lhs[i] == r1[i] + r2[i]);
    }
}

TEST_CASE("identity check accepts valid tensors") {
    TolerancePolicy tol;
    CHECK(verify_leibniz(one_gen_idem(), tol).ok);
    CHECK(verify_leibniz(sl2(), tol).ok);
    CHECK(verify_leibniz(one_gen_idem().to_float(), tol).ok);
    // scaling the top product a*a^3 = 2a^3 still satisfies the identity
    LeibnizAlgebra scaled = one_gen_idem();
    scaled.c(0, 2, 2) = Scalar::exact(2);
    CHECK(verify_leibniz(scaled, tol).ok);
}

TEST_CASE("identity check pinpoints violations") {
    TolerancePolicy tol;
    LeibnizAlgebra bad = one_gen_idem();
    bad.c(1, 0, 2) = Scalar::exact(1);  // a^2 * a = a^3 breaks the identity
    auto res = verify_leibniz(bad, tol);
    CHECK_FALSE(res.ok);
    REQUIRE(!res.violations.empty());
    // x=y=z=a: x(yz) = a^3 but (xy)z + y(xz) = 2a^3
    CHECK(res.violations.front().i == 0);
    CHECK(res.violations.front().j == 0);
    CHECK(res.violations.front().k == 0);
    CHECK(res.violations.front().residual == doctest::Approx(1.0));
    // same defect is caught on the float backend
    CHECK_FALSE(verify_leibniz(bad.to_float(), tol).ok);
}

TEST_CASE("squares span the expected ideal") {
    TolerancePolicy tol;
    CHECK(leib_ideal(one_gen_idem(), tol).equals(span({{0, 1, 0}, {0, 0, 1}}, tol), tol));
    CHECK(leib_ideal(sl2(), tol).dim() == 0);  // alternating product has no squares
    LeibnizAlgebra ab(2, Backend::exact);
    CHECK(leib_ideal(ab, tol).dim() == 0);
}

TEST_CASE("subspace products and powers") {
    TolerancePolicy tol;
    LeibnizAlgebra a = one_gen_idem();
    Subspace full = Subspace::full(3, Backend::exact);
    Subspace sq = algebra_square(a, tol);
    CHECK(sq.equals(span({{0, 1, 0}, {0, 0, 1}}, tol), tol));
    // (A*A)*A = 0: every element of the square kills from the left
    CHECK(subspace_product(a, sq, full, tol).dim() == 0);
    CHECK(subspace_product(a, full, sq, tol).equals(span({{0, 0, 1}}, tol), tol));
}

TEST_CASE("ideal calculus") {
    TolerancePolicy tol;
    LeibnizAlgebra a = one_gen_idem();
    auto sq = ideal_check(a, span({{0, 1, 0}, {0, 0, 1}}, tol), tol);
    CHECK(sq.left);
    CHECK(sq.right);
    CHECK(sq.two_sided);
    auto gen_line = ideal_check(a, span({{1, 0, 0}}, tol), tol);
    CHECK_FALSE(gen_line.left);
    CHECK_FALSE(gen_line.right);
    // the plane x1+x2+x3 = 0 absorbs left multiplication but not right
    auto plane = ideal_check(a, span({{1, 0, -1}, {0, 1, -1}}, tol), tol);
    CHECK(plane.left);
    CHECK_FALSE(plane.right);
    CHECK_FALSE(plane.two_sided);
}

TEST_CASE("normalizers of the degenerate-kernel plane") {
    TolerancePolicy tol;
    LeibnizAlgebra a = one_gen_idem();
    Subspace plane = span({{1, 0, -1}, {0, 1, -1}}, tol);
    auto n = normalizers(a, plane, tol);
    CHECK(n.left.equals(Subspace::full(3, Backend::exact), tol));
    CHECK(n.right.equals(plane, tol));
    CHECK(n.both.equals(plane, tol));
}

TEST_CASE("subalgebra recognition and induced structure") {
    TolerancePolicy tol;
    LeibnizAlgebra a = one_gen_idem();
    Subspace sq = span({{0, 1, 0}, {0, 0, 1}}, tol);
    CHECK(is_subalgebra(a, sq, tol));
    CHECK(is_subalgebra(a, span({{1, 0, -1}, {0, 1, -1}}, tol), tol));
    CHECK_FALSE(is_subalgebra(a, span({{1, 0, 0}}, tol), tol));

    LeibnizAlgebra inner = induced_subalgebra(a, sq, tol);
    CHECK(inner.dim() == 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(inner.product(inner.basis_element(i), inner.basis_element(j)) ==
                  inner.zero_element());
    CHECK_THROWS_AS(induced_subalgebra(a, span({{1, 0, 0}}, tol), tol), math_error);
}

TEST_CASE("quotients exist for two-sided ideals only") {
    TolerancePolicy tol;
    LeibnizAlgebra a = one_gen_idem();
    LeibnizAlgebra q = quotient_algebra(a, span({{0, 1, 0}, {0, 0, 1}}, tol), tol);
    CHECK(q.dim() == 1);
    CHECK(is_lie(q, tol));  // quotient by the span of squares kills the defect
    // smaller two-sided ideal: quotient still fails to be alternating
    LeibnizAlgebra q2 = quotient_algebra(a, span({{0, 0, 1}}, tol), tol);
    CHECK(q2.dim() == 2);
    CHECK_FALSE(is_lie(q2, tol));
    CHECK(verify_leibniz(q2, tol).ok);
    // the plane is not two-sided, so no quotient
    CHECK_THROWS_AS(quotient_algebra(a, span({{1, 0, -1}, {0, 1, -1}}, tol), tol), math_error);
}

TEST_CASE("alternating product detection") {
    TolerancePolicy tol;
    CHECK(is_lie(sl2(), tol));
    CHECK_FALSE(is_lie(one_gen_idem(), tol));
    CHECK(is_lie(LeibnizAlgebra(2, Backend::exact), tol));
}
