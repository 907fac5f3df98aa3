#include <doctest.h>

#include "almansi/generate.hpp"
#include "almansi/mvpoly.hpp"
#include "almansi/slice_poly.hpp"

using namespace almansi;

namespace {

MvPolynomial var(int n, int i) { return MvPolynomial::variable(n, i); }

} // namespace

TEST_CASE("polynomial ring operations") {
    int n = 3;
    MvPolynomial x0e1 = var(n, 0) * Multivector::basis_vector(n, 1);
    MvPolynomial x0e2 = var(n, 0) * Multivector::basis_vector(n, 2);
    MvPolynomial expected =
        var(n, 0) * var(n, 0) * Multivector::basis_blade(n, 0b11);
    CHECK(x0e1 * x0e2 == expected);

    MvPolynomial x1e1 = var(n, 1) * Multivector::basis_vector(n, 1);
    CHECK(x1e1 * x1e1 == -(var(n, 1) * var(n, 1)));

    Generator g(3);
    MvPolynomial p = g.mv_polynomial(n, 4);
    CHECK(p * MvPolynomial::constant(n, Rational(1)) == p);
    CHECK_THROWS_AS(p * MvPolynomial::constant(2, Rational(1)), DimensionError);
}

TEST_CASE("partial derivatives") {
    int n = 3;
    CHECK(var(n, 0) * var(n, 0) == var(n, 0) * var(n, 0));
    CHECK((var(n, 0) * var(n, 0)).partial_derivative(0) == var(n, 0) * Rational(2));
    MvPolynomial p = var(n, 0) * var(n, 1) * Multivector::basis_vector(n, 2);
    CHECK(p.partial_derivative(1) == var(n, 0) * Multivector::basis_vector(n, 2));
    CHECK((var(n, 1) * var(n, 1)).partial_derivative(2).is_zero());
    CHECK_THROWS_AS(p.partial_derivative(4), DimensionError);

    Generator g(5);
    for (int rep = 0; rep < 20; ++rep) {
        MvPolynomial q = g.mv_polynomial(n, 6);
        CHECK(q.partial_derivative(0).partial_derivative(2) ==
              q.partial_derivative(2).partial_derivative(0));
    }
}

TEST_CASE("evaluation") {
    int n = 3;
    SlicePolynomial x2(n, {Multivector(n), Multivector(n), Multivector(n, 1)});
    EvaluationPoint one{{rat(1), rat(0), rat(0), rat(0)}};
    CHECK(expand(x2).evaluate(one) == Multivector(n, 1));

    EvaluationPoint zonal_pole{{rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)}};
    CHECK(zonal(5, 4).evaluate(zonal_pole) == Multivector(5, 5));

    MvPolynomial p = var(n, 0) + var(n, 1) * Multivector::basis_vector(n, 1);
    EvaluationPoint pt{{rat(1, 2), rat(1, 3), rat(0), rat(0)}};
    Multivector want(n, rat(1, 2));
    want.add_term(0b1, rat(1, 3));
    CHECK(p.evaluate(pt) == want);
}

TEST_CASE("evaluation is a ring morphism") {
    Generator g(19);
    for (int n : {2, 3}) {
        for (int rep = 0; rep < 15; ++rep) {
            MvPolynomial p = g.mv_polynomial(n, 4), q = g.mv_polynomial(n, 4);
            EvaluationPoint pt = g.paravector(n);
            CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
            CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        }
    }
}

TEST_CASE("homogeneous components") {
    int n = 2;
    MvPolynomial p = var(n, 0) * var(n, 0) + var(n, 1);
    auto comps = p.homogeneous_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 1);
    CHECK(comps[0].second == var(n, 1));
    CHECK(comps[1].first == 2);
    CHECK(comps[1].second == var(n, 0) * var(n, 0));

    CHECK(MvPolynomial(n).homogeneous_components().empty());

    auto z = zonal(5, 4).homogeneous_components();
    REQUIRE(z.size() == 1);
    CHECK(z[0].first == 4);
}

TEST_CASE("conj_compose") {
    int n = 3;
    MvPolynomial p = var(n, 0) + var(n, 1) * Multivector::basis_vector(n, 1);
    CHECK(p.conj_compose() == var(n, 0) - var(n, 1) * Multivector::basis_vector(n, 1));
    CHECK((var(n, 1) * var(n, 1)).conj_compose() == var(n, 1) * var(n, 1));

    // expand(x)^2 composed with conjugation equals expand(x^c)^2.
    MvPolynomial x = MvPolynomial::clifford_variable(n);
    MvPolynomial xc = MvPolynomial::clifford_variable_conj(n);
    CHECK((x * x).conj_compose() == xc * xc);

    Generator g(23);
    for (int rep = 0; rep < 15; ++rep) {
        MvPolynomial q = g.mv_polynomial(n, 5);
        CHECK(q.conj_compose().conj_compose() == q);
        EvaluationPoint pt = g.paravector(n);
        EvaluationPoint ptc = pt;
        for (int i = 1; i <= n; ++i)
            ptc.coords[i] = -ptc.coords[i];
        CHECK(q.conj_compose().evaluate(pt) == q.evaluate(ptc));
    }
}

TEST_CASE("axial conversion") {
    int n = 5;
    CHECK(to_axial(MvPolynomial::radius_sq(n)) == AxialPolynomial::t(n));
    CHECK(from_axial(AxialPolynomial::t(n)) == MvPolynomial::radius_sq(n));
    CHECK(from_axial(AxialPolynomial::alpha(n)) == var(n, 0));

    CHECK_THROWS_AS(to_axial(var(n, 0) * var(n, 1)), NotAxialError);
    // x_1^2 alone restricts cleanly but fails the re-expansion check.
    CHECK_THROWS_AS(to_axial(var(n, 1) * var(n, 1)), NotAxialError);

    // 5a^4 - 10a^2 t + t^2 expands to the degree-4 zonal biharmonic.
    AxialPolynomial z4(n);
    z4.add_term(4, 0, Multivector(n, 5));
    z4.add_term(2, 1, Multivector(n, -10));
    z4.add_term(0, 2, Multivector(n, 1));
    CHECK(from_axial(z4) == zonal(5, 4));
    CHECK(to_axial(zonal(5, 4)) == z4);
}

TEST_CASE("axial round trip on random inputs") {
    Generator g(29);
    for (int n : {2, 3, 5}) {
        for (int rep = 0; rep < 20; ++rep) {
            AxialPolynomial a = g.axial_polynomial(n, 8);
            CHECK(to_axial(from_axial(a)) == a);
        }
    }
}

TEST_CASE("exact division") {
    int n = 3;
    MvPolynomial t = MvPolynomial::radius_sq(n);
    Generator g(31);
    for (int rep = 0; rep < 10; ++rep) {
        MvPolynomial q = g.mv_polynomial(n, 4);
        CHECK((t * q).divide_exact(t) == q);
    }
    CHECK_THROWS_AS(var(n, 1).divide_exact(t), std::domain_error);
}
