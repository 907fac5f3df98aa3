#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "almansi/slice_poly.hpp"

namespace almansi {

struct OriginSingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FloatParavector {
    std::vector<double> coords; // x_0 .. x_n

    int dimension() const { return static_cast<int>(coords.size()) - 1; }
};

// Double-precision multivector; only used by the numeric example checks.
struct FloatMultivector {
    int n = 0;
    std::map<BladeMask, double> terms;

    explicit FloatMultivector(int n) : n(n) {}
    FloatMultivector(int n, double scalar);

    void add_term(BladeMask m, double c);
    double coefficient(BladeMask m) const;

    FloatMultivector operator+(const FloatMultivector& rhs) const;
    FloatMultivector operator-(const FloatMultivector& rhs) const;
    FloatMultivector operator*(const FloatMultivector& rhs) const;
    FloatMultivector operator*(double s) const;
    FloatMultivector conjugate() const;

    double max_abs() const;
};

FloatMultivector embed_float(const FloatParavector& x);
FloatMultivector to_float(const Multivector& x);
FloatMultivector evaluate_float(const MvPolynomial& p, const FloatParavector& pt);

struct NumericVerdict {
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ExpComponents {
    FloatMultivector f;
    FloatMultivector a;
    FloatMultivector b;
};

// The slice-regular exponential on R_{0,3}: f = e^{x0}(cos b + (Im x/b) sin b)
// with b = |Im x|, and its harmonic components A, B.
ExpComponents eval_exp_components(const FloatParavector& x);

struct InverseComponents {
    FloatMultivector g;
    FloatMultivector a; // identically zero
    FloatMultivector b;
};

// x^{-1} = x^c |x|^{-2} on R_{0,2}; A = 0, B = -|x|^{-2}.
InverseComponents eval_inverse_components(const FloatParavector& x);

using PointFunction = std::function<FloatMultivector(const FloatParavector&)>;

// Central second differences summed over all coordinates; O(h^2) accurate.
FloatMultivector finite_difference_laplacian(const PointFunction& fn, const FloatParavector& x,
                                             double h);

} // namespace almansi
