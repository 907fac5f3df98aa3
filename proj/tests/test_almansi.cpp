#include <doctest.h>

#include "almansi/almansi.hpp"
#include "almansi/diffops.hpp"
#include "almansi/generate.hpp"

using namespace almansi;

namespace {

SlicePolynomial monomial_slice(int n, int k) {
    std::vector<Multivector> c(k + 1, Multivector(n));
    c[k] = Multivector(n, 1);
    return SlicePolynomial(n, c);
}

} // namespace

TEST_CASE("decompose worked examples") {
    int n = 3;
    MvPolynomial x0 = MvPolynomial::variable(n, 0);

    DecompositionAB d2 = decompose(monomial_slice(n, 2));
    CHECK(d2.A == x0 * x0 * Rational(3) - MvPolynomial::radius_sq(n));
    CHECK(d2.B == x0 * Rational(2));
    CHECK(reconstruct(d2) == expand(monomial_slice(n, 2)));

    Multivector a0 = Generator(73).multivector(n);
    DecompositionAB dc = decompose(SlicePolynomial::constant(a0));
    CHECK(dc.A == MvPolynomial::constant(a0));
    CHECK(dc.B.is_zero());

    DecompositionAB d1 = decompose(SlicePolynomial::variable(n));
    CHECK(d1.A == x0 * Rational(2));
    CHECK(d1.B == MvPolynomial::constant(n, Rational(1)));
}

TEST_CASE("differentiation route") {
    int n = 3;
    DecompositionAB d1 = decompose_cr(SlicePolynomial::variable(n));
    CHECK(d1.B == MvPolynomial::constant(n, Rational(1)));
    DecompositionAB d2 = decompose_cr(monomial_slice(n, 2));
    CHECK(d2.B == MvPolynomial::variable(n, 0) * Rational(2));

    Generator g(79);
    for (int rep = 0; rep < 10; ++rep) {
        SlicePolynomial f = g.slice_polynomial(5, 6);
        DecompositionAB a = decompose(f), b = decompose_cr(f);
        CHECK(a.A == b.A);
        CHECK(a.B == b.B);
        CHECK(a.A_axial == b.A_axial);
        CHECK(a.B_axial == b.B_axial);
    }
}

TEST_CASE("reconstruct") {
    int n = 3;
    MvPolynomial x0 = MvPolynomial::variable(n, 0);
    DecompositionAB d{n, x0 * Rational(2), MvPolynomial::constant(n, Rational(1)),
                      AxialPolynomial::alpha(n) * Rational(2),
                      AxialPolynomial::constant(n, Rational(1))};
    CHECK(reconstruct(d) == MvPolynomial::clifford_variable(n));

    DecompositionAB dm{n, MvPolynomial(n), MvPolynomial::constant(n, Rational(-1)),
                       AxialPolynomial(n), AxialPolynomial::constant(n, Rational(-1))};
    CHECK(reconstruct(dm) == MvPolynomial::clifford_variable_conj(n));
}

TEST_CASE("pde system check") {
    int n = 3;
    CHECK(check_pde_system(decompose(monomial_slice(n, 2))));
    DecompositionAB constant{n, MvPolynomial::constant(n, Rational(1)), MvPolynomial(n),
                             AxialPolynomial::constant(n, Rational(1)), AxialPolynomial(n)};
    CHECK(check_pde_system(constant));
    DecompositionAB bad{n, MvPolynomial::variable(n, 0), MvPolynomial(n),
                        AxialPolynomial::alpha(n), AxialPolynomial(n)};
    CHECK_FALSE(check_pde_system(bad));

    Generator g(83);
    for (int rep = 0; rep < 10; ++rep) {
        DecompositionAB d = decompose(g.slice_polynomial(n, 6));
        CHECK(check_pde_system(d));
        d.A_axial = d.A_axial + AxialPolynomial::alpha(n);
        CHECK_FALSE(check_pde_system(d));
    }
}

TEST_CASE("fischer split") {
    int n = 3;
    MvPolynomial norm2 = MvPolynomial::norm_sq(n);
    auto [h1, r1] = fischer_split(norm2);
    CHECK(h1.is_zero());
    CHECK(r1 == MvPolynomial::constant(n, Rational(1)));

    auto [h2, r2] = fischer_split(zonal(3, 3));
    CHECK(h2 == zonal(3, 3));
    CHECK(r2.is_zero());

    MvPolynomial x0sq = MvPolynomial::variable(n, 0) * MvPolynomial::variable(n, 0);
    auto [h3, r3] = fischer_split(x0sq);
    CHECK(r3 == MvPolynomial::constant(n, rat(1, 4)));
    CHECK(h3 == x0sq - norm2 * rat(1, 4));
    CHECK(laplacian(h3).is_zero());

    CHECK_THROWS_AS(fischer_split(x0sq + MvPolynomial::variable(n, 1)), NonHomogeneousError);
}

TEST_CASE("classical almansi") {
    int n = 3;
    MvPolynomial norm2 = MvPolynomial::norm_sq(n);
    AlmansiLayers l1 = classical_almansi(norm2, 2);
    CHECK(l1.layers[0].is_zero());
    CHECK(l1.layers[1] == MvPolynomial::constant(n, Rational(1)));

    AlmansiLayers l2 = classical_almansi(zonal(3, 4), 1);
    CHECK(l2.layers[0] == zonal(3, 4));

    AlmansiLayers l3 = classical_almansi(zonal(5, 4), 2);
    CHECK(laplacian(l3.layers[0]).is_zero());
    CHECK(laplacian(l3.layers[1]).is_zero());
    CHECK(l3.layers[0] + MvPolynomial::norm_sq(5) * l3.layers[1] == zonal(5, 4));

    try {
        classical_almansi(norm2 * norm2, 2);
        FAIL("expected NotPolyharmonicError");
    } catch (const NotPolyharmonicError& e) {
        CHECK(e.failing_iterate == 2);
    }
}

TEST_CASE("classical almansi uniqueness") {
    Generator g(89);
    int n = 3;
    MvPolynomial norm2 = MvPolynomial::norm_sq(n);
    for (int rep = 0; rep < 10; ++rep) {
        int order = g.uniform(2, 3);
        std::vector<MvPolynomial> want;
        MvPolynomial p(n);
        MvPolynomial pw = MvPolynomial::constant(n, Rational(1));
        for (int k = 0; k < order; ++k) {
            MvPolynomial h(n);
            for (const auto& [deg, comp] : g.mv_polynomial(n, 5).homogeneous_components())
                h = h + fischer_split(comp).first;
            want.push_back(h);
            p = p + pw * h;
            pw = pw * norm2;
        }
        AlmansiLayers got = classical_almansi(p, order);
        for (int k = 0; k < order; ++k)
            CHECK(got.layers[k] == want[k]);
    }
}

TEST_CASE("biharmonic decomposition") {
    int n = 5;
    auto layers = biharmonic_decomposition(monomial_slice(n, 4));
    REQUIRE(layers.size() == 2);
    MvPolynomial norm2 = MvPolynomial::norm_sq(n);
    CHECK(layers[0] + norm2 * layers[1] == expand(monomial_slice(n, 4)));
    for (const auto& gk : layers) {
        CHECK(cauchy_riemann(laplacian(gk)).is_zero());
        CHECK(iterated_laplacian(gk, 2).is_zero());
    }

    Multivector a0 = Generator(97).multivector(n);
    auto lc = biharmonic_decomposition(SlicePolynomial::constant(a0));
    CHECK(lc[0] == MvPolynomial::constant(a0));
    CHECK(lc[1].is_zero());

    CHECK_THROWS_AS(biharmonic_decomposition(SlicePolynomial::variable(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(biharmonic_decomposition(SlicePolynomial::variable(3)),
                    std::invalid_argument);
}

TEST_CASE("corollary proof identity") {
    Generator g(101);
    int n = 5;
    MvPolynomial xc = MvPolynomial::clifford_variable_conj(n);
    for (int rep = 0; rep < 10; ++rep) {
        MvPolynomial u = g.mv_polynomial(n, 4);
        CHECK(laplacian(xc * u) ==
              conj_cauchy_riemann(u) * Rational(2) + xc * laplacian(u));
    }
}

TEST_CASE("right linearity and slice-preserving pairs") {
    Generator g(103);
    int n = 3;
    for (int rep = 0; rep < 8; ++rep) {
        SlicePolynomial f = g.slice_polynomial(n, 5), h = g.slice_polynomial(n, 5);
        Multivector c1 = g.multivector(n), c2 = g.multivector(n);
        DecompositionAB dl = decompose(f * c1 + h * c2);
        DecompositionAB df = decompose(f), dh = decompose(h);
        CHECK(dl.A == df.A * c1 + dh.A * c2);
        CHECK(dl.B == df.B * c1 + dh.B * c2);

        DecompositionAB dr = decompose(g.real_slice_polynomial(n, 5));
        for (const auto& [e, c] : dr.A.terms())
            CHECK(c.is_scalar());
        for (const auto& [e, c] : dr.B.terms())
            CHECK(c.is_scalar());
    }
}

TEST_CASE("uniqueness of the pair through the spherical derivative") {
    Generator g(107);
    for (int n : {3, 5}) {
        for (int rep = 0; rep < 5; ++rep) {
            DecompositionAB d = decompose(g.slice_polynomial(n, 6));
            auto [v, s] = spherical_derivative_full(reconstruct(d));
            CHECK(s == d.B_axial);
        }
    }
}
