#include "almansi/diffops.hpp"

#include <stdexcept>

namespace almansi {

MvPolynomial laplacian(const MvPolynomial& p) {
    int n = p.dimension();
    MvPolynomial out(n);
    for (int i = 0; i <= n; ++i)
        out = out + p.partial_derivative(i).partial_derivative(i);
    return out;
}

MvPolynomial iterated_laplacian(const MvPolynomial& p, int power) {
    if (power < 1)
        throw std::invalid_argument("laplacian power must be >= 1");
    MvPolynomial out = p;
    for (int k = 0; k < power; ++k)
        out = laplacian(out);
    return out;
}

MvPolynomial dirac(const MvPolynomial& p) {
    int n = p.dimension();
    MvPolynomial out(n);
    for (int i = 1; i <= n; ++i)
        out = out + p.partial_derivative(i).left_mul(Multivector::basis_vector(n, i));
    return out;
}

MvPolynomial cauchy_riemann(const MvPolynomial& p) {
    return p.partial_derivative(0) + dirac(p);
}

MvPolynomial conj_cauchy_riemann(const MvPolynomial& p) {
    return p.partial_derivative(0) - dirac(p);
}

AxialPolynomial axial_laplacian(const AxialPolynomial& a) {
    int n = a.dimension();
    AxialPolynomial da = a.d_alpha().d_alpha();
    AxialPolynomial dt = a.d_t();
    AxialPolynomial dtt = dt.d_t() * AxialPolynomial::t(n);
    return da + dt * Rational(2 * n) + dtt * Rational(4);
}

} // namespace almansi
