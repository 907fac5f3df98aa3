#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "almansi/rational.hpp"

namespace almansi {

// Basis blade of R_{0,n}: bit i-1 set <=> e_i present. Mask 0 is the scalar unit.
using BladeMask = std::uint32_t;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sign and result mask of the product of two basis blades in signature (0,n).
// Sign counts anticommutation swaps plus one -1 per repeated index (e_i^2 = -1).
std::pair<int, BladeMask> blade_product(BladeMask a, BladeMask b, int n);

// Sign picked up by a grade-k blade under Clifford conjugation: (-1)^(k(k+1)/2).
int conjugation_sign(BladeMask m);

// Element of R_{0,n}. Sparse: zero coefficients are never stored.
class Multivector {
public:
    explicit Multivector(int n) : n_(check_dim(n)) {}
    Multivector(int n, const Rational& scalar);

    static Multivector basis_blade(int n, BladeMask m, const Rational& coef = 1);
    static Multivector basis_vector(int n, int i); // e_i, 1 <= i <= n

    int dimension() const { return n_; }
    const std::map<BladeMask, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    // Scalar part (coefficient of the empty blade).
    Rational scalar_part() const;
    Rational coefficient(BladeMask m) const;

    void add_term(BladeMask m, const Rational& c);

    Multivector operator+(const Multivector& rhs) const;
    Multivector operator-(const Multivector& rhs) const;
    Multivector operator-() const;
    Multivector operator*(const Multivector& rhs) const;
    Multivector operator*(const Rational& s) const;

    Multivector conjugate() const;

    bool operator==(const Multivector& rhs) const;
    bool operator!=(const Multivector& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    static int check_dim(int n);
    void check_same_dim(const Multivector& rhs) const;

    int n_;
    std::map<BladeMask, Rational> terms_;
};

inline Multivector operator*(const Rational& s, const Multivector& x) { return x * s; }

// Paravector x_0 + x_1 e_1 + ... + x_n e_n.
struct Paravector {
    std::vector<Rational> coords; // length n+1

    int dimension() const { return static_cast<int>(coords.size()) - 1; }
    Multivector embed() const;
};

struct ConeMembership {
    bool is_member;
    Multivector trace;
    Multivector norm;
};

// t(x) = x + x^c, n(x) = x x^c; member of the quadratic cone iff both are real.
ConeMembership quadratic_cone_membership(const Multivector& x);

} // namespace almansi
