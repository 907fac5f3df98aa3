#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "almansi/multivector.hpp"

namespace almansi {

// Dense exponent vector (d_0, ..., d_n) over the variables x_0..x_n.
using ExponentVec = std::vector<int>;

using EvaluationPoint = Paravector;

struct NotAxialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class AxialPolynomial;

// Multivariate polynomial in x_0..x_n with Multivector coefficients.
// Monomials commute with everything; coefficients multiply by the
// noncommutative Clifford product in left/right order.
class MvPolynomial {
public:
    explicit MvPolynomial(int n) : n_(n) {
        if (n < 1)
            throw DimensionError("polynomial dimension must be positive");
    }

    static MvPolynomial constant(const Multivector& c);
    static MvPolynomial constant(int n, const Rational& c);
    // x_i as a polynomial, 0 <= i <= n.
    static MvPolynomial variable(int n, int i);
    static MvPolynomial monomial(int n, const ExponentVec& e, const Multivector& coef);
    // v = x_1 e_1 + ... + x_n e_n.
    static MvPolynomial imaginary_vector(int n);
    // t = x_1^2 + ... + x_n^2.
    static MvPolynomial radius_sq(int n);
    // |x|^2 = x_0^2 + ... + x_n^2.
    static MvPolynomial norm_sq(int n);
    // Expansion of the paravector variable x = x_0 + v.
    static MvPolynomial clifford_variable(int n);
    // Expansion of x^c = x_0 - v.
    static MvPolynomial clifford_variable_conj(int n);

    int dimension() const { return n_; }
    const std::map<ExponentVec, Multivector>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial

    void add_term(const ExponentVec& e, const Multivector& coef);

    MvPolynomial operator+(const MvPolynomial& rhs) const;
    MvPolynomial operator-(const MvPolynomial& rhs) const;
    MvPolynomial operator-() const;
    MvPolynomial operator*(const MvPolynomial& rhs) const;
    MvPolynomial operator*(const Multivector& c) const; // right multiply coefficients
    MvPolynomial operator*(const Rational& s) const;
    // Left multiplication of every coefficient by c.
    MvPolynomial left_mul(const Multivector& c) const;

    bool operator==(const MvPolynomial& rhs) const;
    bool operator!=(const MvPolynomial& rhs) const { return !(*this == rhs); }

    MvPolynomial partial_derivative(int var) const;
    Multivector evaluate(const EvaluationPoint& pt) const;

    // Components keyed by total degree, ascending; omits zero components.
    std::vector<std::pair<int, MvPolynomial>> homogeneous_components() const;
    bool is_homogeneous() const;

    // p(x^c): substitution x_i -> -x_i for i >= 1.
    MvPolynomial conj_compose() const;

    // Exact division by a divisor with real scalar coefficients; throws
    // std::domain_error if not exactly divisible.
    MvPolynomial divide_exact(const MvPolynomial& divisor) const;

private:
    void check_same_dim(const MvPolynomial& rhs) const;

    int n_;
    std::map<ExponentVec, Multivector> terms_;
};

// Polynomial in alpha = x_0 and t = x_1^2 + ... + x_n^2; houses the
// rotation-invariant (about the real axis) polynomials.
class AxialPolynomial {
public:
    explicit AxialPolynomial(int n) : n_(n) {
        if (n < 1)
            throw DimensionError("axial dimension must be positive");
    }

    static AxialPolynomial constant(int n, const Multivector& c);
    static AxialPolynomial constant(int n, const Rational& c);
    static AxialPolynomial alpha(int n);
    static AxialPolynomial t(int n);
    static AxialPolynomial monomial(int n, int i, int j, const Multivector& coef);

    int dimension() const { return n_; }
    const std::map<std::pair<int, int>, Multivector>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int i, int j, const Multivector& coef);

    AxialPolynomial operator+(const AxialPolynomial& rhs) const;
    AxialPolynomial operator-(const AxialPolynomial& rhs) const;
    AxialPolynomial operator*(const AxialPolynomial& rhs) const;
    AxialPolynomial operator*(const Multivector& c) const; // right coefficient multiply
    AxialPolynomial operator*(const Rational& s) const;

    bool operator==(const AxialPolynomial& rhs) const;
    bool operator!=(const AxialPolynomial& rhs) const { return !(*this == rhs); }

    AxialPolynomial d_alpha() const;
    AxialPolynomial d_t() const;

    Multivector evaluate(const Rational& alpha_val, const Rational& t_val) const;

private:
    void check_same_dim(const AxialPolynomial& rhs) const;

    int n_;
    std::map<std::pair<int, int>, Multivector> terms_;
};

// Substitute alpha -> x_0, t -> sum of squares.
MvPolynomial from_axial(const AxialPolynomial& a);

// Restriction-and-recheck axiality test; throws NotAxialError when p is not
// rotation-invariant in x_1..x_n.
AxialPolynomial to_axial(const MvPolynomial& p);

} // namespace almansi
