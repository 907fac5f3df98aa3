#pragma once

#include "almansi/mvpoly.hpp"

namespace almansi {

// Laplacian of R^{n+1}: sum of second partials over x_0..x_n.
MvPolynomial laplacian(const MvPolynomial& p);

MvPolynomial iterated_laplacian(const MvPolynomial& p, int power);

// Cauchy-Riemann operator: d/dx_0 + sum_i e_i (d/dx_i), e_i from the left.
MvPolynomial cauchy_riemann(const MvPolynomial& p);

// Conjugated Cauchy-Riemann operator: d/dx_0 - sum_i e_i (d/dx_i).
MvPolynomial conj_cauchy_riemann(const MvPolynomial& p);

// Dirac operator: sum_i e_i (d/dx_i).
MvPolynomial dirac(const MvPolynomial& p);

// Laplacian in (alpha, t) coordinates: d^2/da^2 + 2n d/dt + 4t d^2/dt^2.
AxialPolynomial axial_laplacian(const AxialPolynomial& a);

} // namespace almansi
