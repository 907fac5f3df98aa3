#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "almansi/slice_poly.hpp"

namespace almansi {

struct NotPolyharmonicError : std::runtime_error {
    NotPolyharmonicError(int failing_iterate, std::string msg)
        : std::runtime_error(std::move(msg)), failing_iterate(failing_iterate) {}
    // Smallest p with Delta^p of the input nonzero yet p <= requested order.
    int failing_iterate;
};

struct NonHomogeneousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// f = A - x^c B with zonal m-harmonic A, B (n odd).
struct DecompositionAB {
    int n;
    MvPolynomial A;
    MvPolynomial B;
    AxialPolynomial A_axial;
    AxialPolynomial B_axial;
};

struct AlmansiLayers {
    int order;
    std::vector<MvPolynomial> layers; // u_0 .. u_{order-1}, all harmonic
};

// Zonal route: A = sum_k Z_k a_k, B = sum_k Z_{k-1} a_k.
DecompositionAB decompose(const SlicePolynomial& f);

// Differentiation route: A = CR(expand(x f))/(1-n), B = CR(expand(f))/(1-n).
DecompositionAB decompose_cr(const SlicePolynomial& f);

// A - (x_0 - v) B with x^c as a left factor.
MvPolynomial reconstruct(const DecompositionAB& d);

// The converse PDE system in axial coordinates (with d_beta = 2 beta d_t):
//   (i)  d_a A - a d_a B - 2t d_t B - 2B = 0
//   (ii) 2 d_t A - 2a d_t B + d_a B = 0
bool check_pde_system(const DecompositionAB& d);

// h = harmonic + |x|^2 remainder for homogeneous h; the split is unique.
std::pair<MvPolynomial, MvPolynomial> fischer_split(const MvPolynomial& h);

// p = sum_k |x|^{2k} u_k with harmonic u_k; requires Delta^order p = 0.
AlmansiLayers classical_almansi(const MvPolynomial& p, int order);

// Layers g_k = u_k - x^c v_k from the Almansi splits of A and B; each g_k is
// biharmonic and killed by CR(Laplacian(.)). Requires n = 2m+1 odd, n > 3.
std::vector<MvPolynomial> biharmonic_decomposition(const SlicePolynomial& f);

} // namespace almansi
