#include <doctest.h>

#include <map>

#include "almansi/diffops.hpp"
#include "almansi/generate.hpp"
#include "almansi/slice_poly.hpp"

using namespace almansi;

namespace {

// Test-only dense differentiation oracle over scalar polynomials, independent
// of MvPolynomial's derivative path.
using ScalarPoly = std::map<ExponentVec, Rational>;

ScalarPoly oracle_second_derivative(const ScalarPoly& p, int var) {
    ScalarPoly out;
    for (const auto& [e, c] : p) {
        if (e[var] < 2)
            continue;
        ExponentVec d = e;
        d[var] -= 2;
        out[d] += c * e[var] * (e[var] - 1);
    }
    return out;
}

ScalarPoly oracle_laplacian(const ScalarPoly& p, int nvars) {
    ScalarPoly out;
    for (int i = 0; i < nvars; ++i)
        for (const auto& [e, c] : oracle_second_derivative(p, i))
            if ((out[e] += c) == 0)
                out.erase(e);
    return out;
}

} // namespace

TEST_CASE("laplacian basics") {
    for (int n : {2, 3, 5}) {
        CHECK(laplacian(MvPolynomial::norm_sq(n)) ==
              MvPolynomial::constant(n, Rational(2 * (n + 1))));
    }
    for (int k = 0; k <= 10; ++k)
        CHECK(laplacian(zonal(3, k)).is_zero());
}

TEST_CASE("laplacian of the degree-4 zonal biharmonic") {
    int n = 5;
    MvPolynomial want = MvPolynomial::variable(n, 0) * MvPolynomial::variable(n, 0) *
                            Rational(-40) +
                        MvPolynomial::radius_sq(n) * Rational(8);
    CHECK(laplacian(zonal(5, 4)) == want);
    CHECK(iterated_laplacian(zonal(5, 4), 2).is_zero());
}

TEST_CASE("iterated laplacian against the dense oracle") {
    // |x|^4 over R^4: the oracle computes Delta^2 = 192 from scratch.
    int n = 3;
    ScalarPoly r4;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            ExponentVec e(n + 1, 0);
            e[i] += 2;
            e[j] += 2;
            r4[e] += 1;
        }
    ScalarPoly twice = oracle_laplacian(oracle_laplacian(r4, n + 1), n + 1);
    REQUIRE(twice.size() == 1);
    Rational constant = twice.begin()->second;
    CHECK(constant == 192);

    MvPolynomial norm2 = MvPolynomial::norm_sq(n);
    CHECK(iterated_laplacian(norm2 * norm2, 2) == MvPolynomial::constant(n, constant));
}

TEST_CASE("slice powers are polyharmonic of order m+1") {
    for (int n : {3, 5}) {
        int m = (n - 1) / 2;
        for (int d = 0; d <= 8; ++d) {
            std::vector<Multivector> c(d + 1, Multivector(n));
            c[d] = Multivector(n, 1);
            CHECK(iterated_laplacian(expand(SlicePolynomial(n, c)), m + 1).is_zero());
        }
    }
}

TEST_CASE("first-order operators") {
    int n = 3;
    MvPolynomial x = MvPolynomial::clifford_variable(n);
    CHECK(cauchy_riemann(x) == MvPolynomial::constant(n, Rational(1 - n)));
    CHECK(conj_cauchy_riemann(x) == MvPolynomial::constant(n, Rational(1 + n)));
    CHECK(dirac(MvPolynomial::variable(n, 0)).is_zero());
    CHECK(cauchy_riemann(MvPolynomial::constant(n, rat(7, 2))).is_zero());
    CHECK(cauchy_riemann(x * x) ==
          MvPolynomial::variable(n, 0) * Rational(2 * (1 - n)));
}

TEST_CASE("operator factorization of the laplacian") {
    Generator g(37);
    for (int n : {2, 3, 5}) {
        for (int rep = 0; rep < 15; ++rep) {
            MvPolynomial p = g.mv_polynomial(n, 6);
            MvPolynomial lap = laplacian(p);
            CHECK(conj_cauchy_riemann(cauchy_riemann(p)) == lap);
            CHECK(cauchy_riemann(conj_cauchy_riemann(p)) == lap);
            CHECK(cauchy_riemann(p) == p.partial_derivative(0) + dirac(p));
            CHECK(conj_cauchy_riemann(p) == p.partial_derivative(0) - dirac(p));
            CHECK(laplacian(p.conj_compose()) == lap.conj_compose());
        }
    }
}

TEST_CASE("fueter-sce at polynomial level") {
    Generator g(41);
    for (int n : {3, 5}) {
        int m = (n - 1) / 2;
        for (int rep = 0; rep < 8; ++rep) {
            MvPolynomial p = expand(g.slice_polynomial(n, 6));
            CHECK(cauchy_riemann(iterated_laplacian(p, m)).is_zero());
        }
    }
}

TEST_CASE("axial laplacian") {
    CHECK(axial_laplacian(AxialPolynomial::t(5)) ==
          AxialPolynomial::constant(5, Rational(10)));
    AxialPolynomial a2 = AxialPolynomial::alpha(3) * AxialPolynomial::alpha(3);
    CHECK(axial_laplacian(a2) == AxialPolynomial::constant(3, Rational(2)));
    CHECK(axial_laplacian(zonal_axial(5, 4)) ==
          AxialPolynomial::monomial(5, 2, 0, Multivector(5, -40)) +
              AxialPolynomial::monomial(5, 0, 1, Multivector(5, 8)));

    Generator g(43);
    for (int n : {2, 3, 5}) {
        for (int rep = 0; rep < 15; ++rep) {
            AxialPolynomial a = g.axial_polynomial(n, 6);
            CHECK(from_axial(axial_laplacian(a)) == laplacian(from_axial(a)));
        }
    }
}
