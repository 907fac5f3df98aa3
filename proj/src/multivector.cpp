#include "almansi/multivector.hpp"

#include <bit>
#include <sstream>

namespace almansi {

namespace {

void check_mask(BladeMask m, int n) {
    if (m >= (BladeMask{1} << n))
        throw DimensionError("blade mask out of range for dimension " + std::to_string(n));
}

} // namespace

std::pair<int, BladeMask> blade_product(BladeMask a, BladeMask b, int n) {
    check_mask(a, n);
    check_mask(b, n);
    // Swaps needed to interleave the concatenated index sequences: each index
    // of a above bit i of b contributes one transposition.
    int swaps = 0;
    BladeMask rest = a >> 1;
    while (rest != 0) {
        swaps += std::popcount(rest & b);
        rest >>= 1;
    }
    // Each repeated index squares to -1.
    int repeats = std::popcount(a & b);
    int sign = ((swaps + repeats) % 2 == 0) ? 1 : -1;
    return {sign, a ^ b};
}

int conjugation_sign(BladeMask m) {
    int k = std::popcount(m);
    return (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
}

Multivector::Multivector(int n, const Rational& scalar) : n_(check_dim(n)) {
    add_term(0, scalar);
}

Multivector Multivector::basis_blade(int n, BladeMask m, const Rational& coef) {
    Multivector x(n);
    check_mask(m, n);
    x.add_term(m, coef);
    return x;
}

Multivector Multivector::basis_vector(int n, int i) {
    if (i < 1 || i > n)
        throw DimensionError("basis vector index out of range");
    return basis_blade(n, BladeMask{1} << (i - 1));
}

int Multivector::check_dim(int n) {
    if (n < 1 || n > 30)
        throw DimensionError("dimension must be in [1, 30]");
    return n;
}

void Multivector::check_same_dim(const Multivector& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionError("multivector dimension mismatch");
}

bool Multivector::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Multivector::scalar_part() const {
    return coefficient(0);
}

Rational Multivector::coefficient(BladeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(BladeMask m, const Rational& c) {
    check_mask(m, n_);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Multivector Multivector::operator+(const Multivector& rhs) const {
    check_same_dim(rhs);
    Multivector out = *this;
    for (const auto& [m, c] : rhs.terms_)
        out.add_term(m, c);
    return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
    check_same_dim(rhs);
    Multivector out = *this;
    for (const auto& [m, c] : rhs.terms_)
        out.add_term(m, -c);
    return out;
}

Multivector Multivector::operator-() const {
    Multivector out(n_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Multivector Multivector::operator*(const Multivector& rhs) const {
    check_same_dim(rhs);
    Multivector out(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            auto [sign, m] = blade_product(ma, mb, n_);
            Rational prod = ca * cb;
            out.add_term(m, sign > 0 ? prod : Rational(-prod));
        }
    }
    return out;
}

Multivector Multivector::operator*(const Rational& s) const {
    Multivector out(n_);
    if (s == 0)
        return out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, c * s);
    return out;
}

Multivector Multivector::conjugate() const {
    Multivector out(n_);
    for (const auto& [m, c] : terms_) {
        if (conjugation_sign(m) > 0)
            out.terms_.emplace(m, c);
        else
            out.terms_.emplace(m, -c);
    }
    return out;
}

bool Multivector::operator==(const Multivector& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
}

std::string Multivector::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        if (m == 0) {
            os << a.get_str();
        } else {
            if (a != 1)
                os << a.get_str() << " ";
            os << "e";
            for (int i = 0; i < 30; ++i)
                if (m & (BladeMask{1} << i))
                    os << (i + 1);
        }
    }
    return os.str();
}

Multivector Paravector::embed() const {
    int n = dimension();
    Multivector x(n);
    x.add_term(0, coords[0]);
    for (int i = 1; i <= n; ++i)
        x.add_term(BladeMask{1} << (i - 1), coords[i]);
    return x;
}

ConeMembership quadratic_cone_membership(const Multivector& x) {
    Multivector xc = x.conjugate();
    Multivector trace = x + xc;
    Multivector norm = x * xc;
    return {trace.is_scalar() && norm.is_scalar(), trace, norm};
}

} // namespace almansi
