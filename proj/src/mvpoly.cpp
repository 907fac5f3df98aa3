#include "almansi/mvpoly.hpp"

#include <algorithm>
#include <numeric>

namespace almansi {

namespace {

int vec_degree(const ExponentVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

MvPolynomial MvPolynomial::constant(const Multivector& c) {
    MvPolynomial p(c.dimension());
    p.add_term(ExponentVec(c.dimension() + 1, 0), c);
    return p;
}

MvPolynomial MvPolynomial::constant(int n, const Rational& c) {
    return constant(Multivector(n, c));
}

MvPolynomial MvPolynomial::variable(int n, int i) {
    if (i < 0 || i > n)
        throw DimensionError("variable index out of range");
    ExponentVec e(n + 1, 0);
    e[i] = 1;
    return monomial(n, e, Multivector(n, 1));
}

MvPolynomial MvPolynomial::monomial(int n, const ExponentVec& e, const Multivector& coef) {
    MvPolynomial p(n);
    p.add_term(e, coef);
    return p;
}

MvPolynomial MvPolynomial::imaginary_vector(int n) {
    MvPolynomial p(n);
    for (int i = 1; i <= n; ++i) {
        ExponentVec e(n + 1, 0);
        e[i] = 1;
        p.add_term(e, Multivector::basis_vector(n, i));
    }
    return p;
}

MvPolynomial MvPolynomial::radius_sq(int n) {
    MvPolynomial p(n);
    for (int i = 1; i <= n; ++i) {
        ExponentVec e(n + 1, 0);
        e[i] = 2;
        p.add_term(e, Multivector(n, 1));
    }
    return p;
}

MvPolynomial MvPolynomial::norm_sq(int n) {
    MvPolynomial p = radius_sq(n);
    ExponentVec e(n + 1, 0);
    e[0] = 2;
    p.add_term(e, Multivector(n, 1));
    return p;
}

MvPolynomial MvPolynomial::clifford_variable(int n) {
    return variable(n, 0) + imaginary_vector(n);
}

MvPolynomial MvPolynomial::clifford_variable_conj(int n) {
    return variable(n, 0) - imaginary_vector(n);
}

int MvPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, vec_degree(e));
    return d;
}

void MvPolynomial::add_term(const ExponentVec& e, const Multivector& coef) {
    if (static_cast<int>(e.size()) != n_ + 1)
        throw DimensionError("exponent vector length mismatch");
    if (coef.dimension() != n_)
        throw DimensionError("coefficient dimension mismatch");
    if (coef.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, coef);
    if (!inserted) {
        it->second = it->second + coef;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MvPolynomial::check_same_dim(const MvPolynomial& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionError("polynomial dimension mismatch");
}

MvPolynomial MvPolynomial::operator+(const MvPolynomial& rhs) const {
    check_same_dim(rhs);
    MvPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.add_term(e, c);
    return out;
}

MvPolynomial MvPolynomial::operator-(const MvPolynomial& rhs) const {
    check_same_dim(rhs);
    MvPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.add_term(e, -c);
    return out;
}

MvPolynomial MvPolynomial::operator-() const {
    MvPolynomial out(n_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

MvPolynomial MvPolynomial::operator*(const MvPolynomial& rhs) const {
    check_same_dim(rhs);
    MvPolynomial out(n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            ExponentVec e(n_ + 1);
            for (int i = 0; i <= n_; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MvPolynomial MvPolynomial::operator*(const Multivector& c) const {
    MvPolynomial out(n_);
    for (const auto& [e, a] : terms_)
        out.add_term(e, a * c);
    return out;
}

MvPolynomial MvPolynomial::operator*(const Rational& s) const {
    MvPolynomial out(n_);
    for (const auto& [e, a] : terms_)
        out.add_term(e, a * s);
    return out;
}

MvPolynomial MvPolynomial::left_mul(const Multivector& c) const {
    MvPolynomial out(n_);
    for (const auto& [e, a] : terms_)
        out.add_term(e, c * a);
    return out;
}

bool MvPolynomial::operator==(const MvPolynomial& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
}

MvPolynomial MvPolynomial::partial_derivative(int var) const {
    if (var < 0 || var > n_)
        throw DimensionError("derivative variable out of range");
    MvPolynomial out(n_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        ExponentVec d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

Multivector MvPolynomial::evaluate(const EvaluationPoint& pt) const {
    if (pt.dimension() != n_)
        throw DimensionError("evaluation point dimension mismatch");
    Multivector acc(n_);
    for (const auto& [e, c] : terms_) {
        Rational m(1);
        for (int i = 0; i <= n_; ++i)
            for (int k = 0; k < e[i]; ++k)
                m *= pt.coords[i];
        acc = acc + c * m;
    }
    return acc;
}

std::vector<std::pair<int, MvPolynomial>> MvPolynomial::homogeneous_components() const {
    std::map<int, MvPolynomial> by_deg;
    for (const auto& [e, c] : terms_) {
        int d = vec_degree(e);
        auto it = by_deg.find(d);
        if (it == by_deg.end())
            it = by_deg.emplace(d, MvPolynomial(n_)).first;
        it->second.add_term(e, c);
    }
    return {by_deg.begin(), by_deg.end()};
}

bool MvPolynomial::is_homogeneous() const {
    return homogeneous_components().size() <= 1;
}

MvPolynomial MvPolynomial::conj_compose() const {
    MvPolynomial out(n_);
    for (const auto& [e, c] : terms_) {
        int odd = 0;
        for (int i = 1; i <= n_; ++i)
            odd += e[i];
        out.add_term(e, odd % 2 == 0 ? c : -c);
    }
    return out;
}

MvPolynomial MvPolynomial::divide_exact(const MvPolynomial& divisor) const {
    check_same_dim(divisor);
    if (divisor.is_zero())
        throw std::domain_error("division by zero polynomial");
    for (const auto& [e, c] : divisor.terms_)
        if (!c.is_scalar())
            throw std::domain_error("divisor must have real scalar coefficients");
    // Leading term w.r.t. the map's lex order on exponent vectors.
    const auto& lead = *divisor.terms_.rbegin();
    const ExponentVec& le = lead.first;
    Rational lc = lead.second.scalar_part();

    MvPolynomial rem = *this;
    MvPolynomial quot(n_);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        ExponentVec qe(n_ + 1);
        bool divisible = true;
        for (int i = 0; i <= n_; ++i) {
            qe[i] = re[i] - le[i];
            if (qe[i] < 0)
                divisible = false;
        }
        if (!divisible)
            throw std::domain_error("polynomial division is not exact");
        Multivector qc = rc * (Rational(1) / lc);
        MvPolynomial qterm = MvPolynomial::monomial(n_, qe, qc);
        quot = quot + qterm;
        rem = rem - qterm * divisor;
    }
    return quot;
}

// --- AxialPolynomial -------------------------------------------------------

AxialPolynomial AxialPolynomial::constant(int n, const Multivector& c) {
    AxialPolynomial a(n);
    a.add_term(0, 0, c);
    return a;
}

AxialPolynomial AxialPolynomial::constant(int n, const Rational& c) {
    return constant(n, Multivector(n, c));
}

AxialPolynomial AxialPolynomial::alpha(int n) {
    return monomial(n, 1, 0, Multivector(n, 1));
}

AxialPolynomial AxialPolynomial::t(int n) {
    return monomial(n, 0, 1, Multivector(n, 1));
}

AxialPolynomial AxialPolynomial::monomial(int n, int i, int j, const Multivector& coef) {
    AxialPolynomial a(n);
    a.add_term(i, j, coef);
    return a;
}

void AxialPolynomial::add_term(int i, int j, const Multivector& coef) {
    if (i < 0 || j < 0)
        throw std::invalid_argument("negative axial exponent");
    if (coef.dimension() != n_)
        throw DimensionError("coefficient dimension mismatch");
    if (coef.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(std::make_pair(i, j), coef);
    if (!inserted) {
        it->second = it->second + coef;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void AxialPolynomial::check_same_dim(const AxialPolynomial& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionError("axial polynomial dimension mismatch");
}

AxialPolynomial AxialPolynomial::operator+(const AxialPolynomial& rhs) const {
    check_same_dim(rhs);
    AxialPolynomial out = *this;
    for (const auto& [ij, c] : rhs.terms_)
        out.add_term(ij.first, ij.second, c);
    return out;
}

AxialPolynomial AxialPolynomial::operator-(const AxialPolynomial& rhs) const {
    check_same_dim(rhs);
    AxialPolynomial out = *this;
    for (const auto& [ij, c] : rhs.terms_)
        out.add_term(ij.first, ij.second, -c);
    return out;
}

AxialPolynomial AxialPolynomial::operator*(const AxialPolynomial& rhs) const {
    check_same_dim(rhs);
    AxialPolynomial out(n_);
    for (const auto& [ija, ca] : terms_)
        for (const auto& [ijb, cb] : rhs.terms_)
            out.add_term(ija.first + ijb.first, ija.second + ijb.second, ca * cb);
    return out;
}

AxialPolynomial AxialPolynomial::operator*(const Multivector& c) const {
    AxialPolynomial out(n_);
    for (const auto& [ij, a] : terms_)
        out.add_term(ij.first, ij.second, a * c);
    return out;
}

AxialPolynomial AxialPolynomial::operator*(const Rational& s) const {
    AxialPolynomial out(n_);
    for (const auto& [ij, a] : terms_)
        out.add_term(ij.first, ij.second, a * s);
    return out;
}

bool AxialPolynomial::operator==(const AxialPolynomial& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
}

AxialPolynomial AxialPolynomial::d_alpha() const {
    AxialPolynomial out(n_);
    for (const auto& [ij, c] : terms_)
        if (ij.first > 0)
            out.add_term(ij.first - 1, ij.second, c * Rational(ij.first));
    return out;
}

AxialPolynomial AxialPolynomial::d_t() const {
    AxialPolynomial out(n_);
    for (const auto& [ij, c] : terms_)
        if (ij.second > 0)
            out.add_term(ij.first, ij.second - 1, c * Rational(ij.second));
    return out;
}

Multivector AxialPolynomial::evaluate(const Rational& alpha_val, const Rational& t_val) const {
    Multivector acc(n_);
    for (const auto& [ij, c] : terms_) {
        Rational m(1);
        for (int k = 0; k < ij.first; ++k)
            m *= alpha_val;
        for (int k = 0; k < ij.second; ++k)
            m *= t_val;
        acc = acc + c * m;
    }
    return acc;
}

// --- conversions -----------------------------------------------------------

MvPolynomial from_axial(const AxialPolynomial& a) {
    int n = a.dimension();
    MvPolynomial t = MvPolynomial::radius_sq(n);
    MvPolynomial out(n);
    for (const auto& [ij, c] : a.terms()) {
        MvPolynomial term = MvPolynomial::constant(n, Rational(1));
        ExponentVec e(n + 1, 0);
        e[0] = ij.first;
        term = MvPolynomial::monomial(n, e, Multivector(n, 1));
        for (int k = 0; k < ij.second; ++k)
            term = term * t;
        out = out + term * c;
    }
    return out;
}

AxialPolynomial to_axial(const MvPolynomial& p) {
    int n = p.dimension();
    // Restrict to the (x_0, x_1) plane: x_2 = ... = x_n = 0.
    AxialPolynomial candidate(n);
    for (const auto& [e, c] : p.terms()) {
        bool onplane = true;
        for (int i = 2; i <= n; ++i)
            if (e[i] != 0)
                onplane = false;
        if (!onplane)
            continue;
        if (e[1] % 2 != 0)
            throw NotAxialError("odd power of x_1 on the restriction plane");
        candidate.add_term(e[0], e[1] / 2, c);
    }
    if (from_axial(candidate) != p)
        throw NotAxialError("polynomial is not rotation-invariant in x_1..x_n");
    return candidate;
}

} // namespace almansi
