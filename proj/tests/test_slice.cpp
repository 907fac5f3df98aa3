#include <doctest.h>

#include "almansi/diffops.hpp"
#include "almansi/generate.hpp"
#include "almansi/slice_poly.hpp"

using namespace almansi;

namespace {

RealAxial ra(std::initializer_list<std::tuple<int, int, long, long>> items) {
    RealAxial out;
    for (const auto& [i, j, num, den] : items)
        out.emplace(std::make_pair(i, j), rat(num, den));
    return out;
}

SlicePolynomial monomial_slice(int n, int k) {
    std::vector<Multivector> c(k + 1, Multivector(n));
    c[k] = Multivector(n, 1);
    return SlicePolynomial(n, c);
}

} // namespace

TEST_CASE("power recurrence") {
    CHECK(power_vs(0).value == ra({{0, 0, 1, 1}}));
    CHECK(power_vs(0).derivative.empty());

    // V_2 = a^2 - t, S_2 = 2a; cross-checked by squaring the paravector.
    CHECK(power_vs(2).value == ra({{2, 0, 1, 1}, {0, 1, -1, 1}}));
    CHECK(power_vs(2).derivative == ra({{1, 0, 2, 1}}));

    // S_4 = 4a(a^2 - t)
    CHECK(power_vs(4).derivative == ra({{3, 0, 4, 1}, {1, 1, -4, 1}}));

    for (int n : {2, 3}) {
        MvPolynomial x = MvPolynomial::clifford_variable(n);
        MvPolynomial v = MvPolynomial::imaginary_vector(n);
        MvPolynomial pw = MvPolynomial::constant(n, Rational(1));
        for (int k = 0; k <= 8; ++k) {
            const PowerVS& vs = power_vs(k);
            CHECK(pw == from_axial(real_axial_at(vs.value, n)) +
                            v * from_axial(real_axial_at(vs.derivative, n)));
            pw = pw * x;
        }
    }
}

TEST_CASE("zonal polynomials") {
    int n = 5;
    MvPolynomial x0 = MvPolynomial::variable(n, 0);
    CHECK(zonal(n, 3) ==
          x0 * (x0 * x0 - MvPolynomial::radius_sq(n)) * Rational(4));
    for (int nn : {2, 3, 5}) {
        CHECK(zonal(nn, 0) == MvPolynomial::constant(nn, Rational(1)));
        CHECK(zonal(nn, 1) == MvPolynomial::variable(nn, 0) * Rational(2));
    }
}

TEST_CASE("zonal normalization at the pole") {
    for (int n : {2, 3, 5, 7})
        for (int k = 0; k <= 12; ++k)
            CHECK(zonal_axial(n, k).evaluate(1, 0) == Multivector(n, k + 1));
}

TEST_CASE("zonal m-harmonicity") {
    for (int n : {3, 5, 7}) {
        int m = (n - 1) / 2;
        for (int k = 0; k <= 10; ++k)
            CHECK(iterated_laplacian(zonal(n, k), m).is_zero());
    }
}

TEST_CASE("power identity, even n included") {
    for (int n = 2; n <= 6; ++n) {
        MvPolynomial xc = MvPolynomial::clifford_variable_conj(n);
        for (int k = 1; k <= 10; ++k)
            CHECK(expand(monomial_slice(n, k)) == zonal(n, k) - xc * zonal(n, k - 1));
    }
}

TEST_CASE("expand") {
    int n = 3;
    CHECK(expand(SlicePolynomial::variable(n)) == MvPolynomial::clifford_variable(n));
    MvPolynomial x = MvPolynomial::clifford_variable(n);
    CHECK(expand(monomial_slice(n, 2)) == x * x);
    Multivector a0 = Generator(47).multivector(n);
    CHECK(expand(SlicePolynomial::constant(a0)) == MvPolynomial::constant(a0));

    // Expansion evaluates like the direct Clifford power sum.
    Generator g(53);
    for (int rep = 0; rep < 10; ++rep) {
        SlicePolynomial f = g.slice_polynomial(n, 6);
        Paravector pt = g.paravector(n);
        Multivector xv = pt.embed();
        Multivector want(n);
        Multivector pw(n, 1);
        for (int k = 0; k <= f.degree(); ++k) {
            want = want + pw * f.coefficient(k);
            pw = pw * xv;
        }
        CHECK(expand(f).evaluate(pt) == want);
    }
}

TEST_CASE("spherical value and derivative") {
    int n = 3;
    auto [v1, s1] = spherical_value_derivative(SlicePolynomial::variable(n));
    CHECK(v1 == AxialPolynomial::alpha(n));
    CHECK(s1 == AxialPolynomial::constant(n, Rational(1)));

    Multivector e1 = Multivector::basis_vector(n, 1);
    auto [v2, s2] = spherical_value_derivative(monomial_slice(n, 2) * e1);
    CHECK(v2 == (AxialPolynomial::alpha(n) * AxialPolynomial::alpha(n) -
                 AxialPolynomial::t(n)) *
                    e1);
    CHECK(s2 == AxialPolynomial::alpha(n) * Rational(2) * e1);

    auto [v3, s3] = spherical_value_derivative(monomial_slice(n, 3));
    CHECK(s3 == AxialPolynomial::monomial(n, 2, 0, Multivector(n, 3)) -
                    AxialPolynomial::t(n));
    CHECK(s3.evaluate(1, 0) == Multivector(n, 3));
}

TEST_CASE("full spherical split of an expanded polynomial") {
    int n = 3;
    auto [v, s] = spherical_derivative_full(expand(monomial_slice(n, 2)));
    CHECK(v == AxialPolynomial::alpha(n) * AxialPolynomial::alpha(n) - AxialPolynomial::t(n));
    CHECK(s == AxialPolynomial::alpha(n) * Rational(2));

    auto [v0, s0] = spherical_derivative_full(MvPolynomial::variable(n, 0));
    CHECK(v0 == AxialPolynomial::alpha(n));
    CHECK(s0.is_zero());

    CHECK_THROWS_AS(spherical_derivative_full(MvPolynomial::variable(n, 1)), NotSliceError);
}

TEST_CASE("representation formula on random slice polynomials") {
    Generator g(59);
    for (int n : {2, 3, 5}) {
        MvPolynomial v = MvPolynomial::imaginary_vector(n);
        for (int rep = 0; rep < 10; ++rep) {
            SlicePolynomial f = g.slice_polynomial(n, 6);
            auto [V, S] = spherical_value_derivative(f);
            CHECK(expand(f) == from_axial(V) + v * from_axial(S));
            auto [Vf, Sf] = spherical_derivative_full(expand(f));
            CHECK(Vf == V);
            CHECK(Sf == S);
        }
    }
}

TEST_CASE("cauchy-riemann characterization of slice regularity") {
    Generator g(61);
    for (int n : {2, 3, 4, 5}) {
        for (int rep = 0; rep < 8; ++rep) {
            SlicePolynomial f = g.slice_polynomial(n, 6);
            auto [V, S] = spherical_value_derivative(f);
            CHECK(cauchy_riemann(expand(f)) == from_axial(S) * Rational(1 - n));
        }
    }
}

TEST_CASE("slice product") {
    int n = 3;
    Multivector e1 = Multivector::basis_vector(n, 1);
    Multivector e2 = Multivector::basis_vector(n, 2);
    SlicePolynomial xe1 = SlicePolynomial::variable(n) * e1;
    SlicePolynomial xe2 = SlicePolynomial::variable(n) * e2;
    CHECK(slice_mul(xe1, xe2) == monomial_slice(n, 2) * (e1 * e2));

    Generator g(67);
    SlicePolynomial f = g.slice_polynomial(n, 5);
    CHECK(slice_mul(SlicePolynomial::constant(Multivector(n, 1)), f) == f);

    // Pointwise product for slice-preserving left factor.
    for (int rep = 0; rep < 8; ++rep) {
        SlicePolynomial fr = g.real_slice_polynomial(n, 4);
        SlicePolynomial h = g.slice_polynomial(n, 4);
        CHECK(expand(slice_mul(fr, h)) == expand(fr) * expand(h));
    }
}

TEST_CASE("leibniz rule for spherical derivatives") {
    Generator g(71);
    for (int n : {2, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            SlicePolynomial f = g.real_slice_polynomial(n, 4);
            SlicePolynomial h = g.slice_polynomial(n, 4);
            auto [Vf, Sf] = spherical_value_derivative(f);
            auto [Vh, Sh] = spherical_value_derivative(h);
            auto [Vp, Sp] = spherical_value_derivative(slice_mul(f, h));
            CHECK(Sp == Sf * Vh + Vf * Sh);
        }
    }
}
