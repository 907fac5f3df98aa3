#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "almansi/mvpoly.hpp"

namespace almansi {

struct NotSliceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Real-coefficient polynomial in (alpha, t), dimension-free. V_k and S_k live
// here; a dimension enters only when expanding t into a sum of squares.
using RealAxial = std::map<std::pair<int, int>, Rational>;

// Spherical value V_k and spherical derivative S_k of the power x^k, from the
// recurrence V_{k+1} = alpha V_k - t S_k, S_{k+1} = V_k + alpha S_k.
struct PowerVS {
    int k;
    RealAxial value;
    RealAxial derivative;
};

// Memoized; thread-safe.
const PowerVS& power_vs(int k);

AxialPolynomial real_axial_at(const RealAxial& r, int n);

// Zonal polyharmonic polynomial Z_k with pole 1: the spherical derivative of
// x^{k+1}, expanded over R^{n+1}. Homogeneous of degree k, value k+1 at 1.
MvPolynomial zonal(int n, int k);
AxialPolynomial zonal_axial(int n, int k);

// f(x) = sum_k x^k a_k with right coefficients a_k.
class SlicePolynomial {
public:
    explicit SlicePolynomial(int n) : n_(n) {
        if (n < 1)
            throw DimensionError("slice polynomial dimension must be positive");
    }
    SlicePolynomial(int n, std::vector<Multivector> coeffs);

    static SlicePolynomial constant(const Multivector& a0);
    // The identity slice polynomial x.
    static SlicePolynomial variable(int n);

    int dimension() const { return n_; }
    const std::vector<Multivector>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Multivector coefficient(int k) const;

    SlicePolynomial operator+(const SlicePolynomial& rhs) const;
    SlicePolynomial operator-(const SlicePolynomial& rhs) const;
    // Right multiplication of every coefficient.
    SlicePolynomial operator*(const Multivector& c) const;
    // Degree shift: x * f (x is slice-preserving, so this is the slice product).
    SlicePolynomial shift() const;

    bool operator==(const SlicePolynomial& rhs) const;
    bool operator!=(const SlicePolynomial& rhs) const { return !(*this == rhs); }

private:
    void trim();

    int n_;
    std::vector<Multivector> coeffs_;
};

// Slice product: coefficient convolution with Clifford products a_i b_j.
SlicePolynomial slice_mul(const SlicePolynomial& f, const SlicePolynomial& g);

// Pointwise expansion sum_k (V_k + v S_k) a_k over R^{n+1}.
MvPolynomial expand(const SlicePolynomial& f);

// (V_f, S_f) with coefficients multiplying a_k on the right.
std::pair<AxialPolynomial, AxialPolynomial> spherical_value_derivative(const SlicePolynomial& f);

// Split an expanded slice function p = from_axial(V) + v from_axial(S).
// Throws NotSliceError when p is not a polynomial slice function.
std::pair<AxialPolynomial, AxialPolynomial> spherical_derivative_full(const MvPolynomial& p);

} // namespace almansi
