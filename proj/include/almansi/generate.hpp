#pragma once

#include <random>

#include "almansi/slice_poly.hpp"

namespace almansi {

// Seeded generators for the property suites. Small numerators and
// denominators keep exact arithmetic fast without losing coverage.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational rational(int max_abs_num = 9, int max_den = 4) {
        return rat(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    }

    Rational nonzero_rational(int max_abs_num = 9, int max_den = 4) {
        Rational q = rational(max_abs_num, max_den);
        return q == 0 ? Rational(1) : q;
    }

    Multivector multivector(int n, int max_terms = 3) {
        Multivector x(n);
        int terms = uniform(1, max_terms);
        for (int i = 0; i < terms; ++i)
            x.add_term(static_cast<BladeMask>(uniform(0, (1 << n) - 1)), rational());
        return x;
    }

    Multivector nonzero_multivector(int n, int max_terms = 3) {
        Multivector x = multivector(n, max_terms);
        return x.is_zero() ? Multivector(n, 1) : x;
    }

    Paravector paravector(int n) {
        Paravector pt;
        for (int i = 0; i <= n; ++i)
            pt.coords.push_back(rational());
        return pt;
    }

    MvPolynomial mv_polynomial(int n, int max_degree, int max_terms = 5) {
        MvPolynomial p(n);
        int terms = uniform(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            ExponentVec e(n + 1, 0);
            int budget = uniform(0, max_degree);
            for (int i = 0; i <= n && budget > 0; ++i) {
                int d = uniform(0, budget);
                e[i] = d;
                budget -= d;
            }
            p.add_term(e, multivector(n));
        }
        return p;
    }

    AxialPolynomial axial_polynomial(int n, int max_degree, int max_terms = 5) {
        AxialPolynomial a(n);
        int terms = uniform(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            int i = uniform(0, max_degree);
            int j = uniform(0, (max_degree - i) / 2);
            a.add_term(i, j, multivector(n));
        }
        return a;
    }

    SlicePolynomial slice_polynomial(int n, int max_degree) {
        int deg = uniform(0, max_degree);
        std::vector<Multivector> coeffs;
        for (int k = 0; k <= deg; ++k)
            coeffs.push_back(multivector(n));
        return SlicePolynomial(n, std::move(coeffs));
    }

    SlicePolynomial real_slice_polynomial(int n, int max_degree) {
        int deg = uniform(0, max_degree);
        std::vector<Multivector> coeffs;
        for (int k = 0; k <= deg; ++k)
            coeffs.push_back(Multivector(n, rational()));
        return SlicePolynomial(n, std::move(coeffs));
    }

    double uniform_real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace almansi
