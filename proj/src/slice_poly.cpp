#include "almansi/slice_poly.hpp"

#include <mutex>

namespace almansi {

namespace {

RealAxial ra_add(const RealAxial& a, const RealAxial& b) {
    RealAxial out = a;
    for (const auto& [ij, c] : b) {
        auto [it, inserted] = out.emplace(ij, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        }
    }
    return out;
}

RealAxial ra_shift(const RealAxial& a, int di, int dj, const Rational& s) {
    RealAxial out;
    if (s == 0)
        return out;
    for (const auto& [ij, c] : a)
        out.emplace(std::make_pair(ij.first + di, ij.second + dj), c * s);
    return out;
}

std::mutex power_vs_mutex;
std::vector<PowerVS> power_vs_table;

} // namespace

const PowerVS& power_vs(int k) {
    if (k < 0)
        throw std::invalid_argument("power degree must be nonnegative");
    std::lock_guard<std::mutex> lock(power_vs_mutex);
    if (power_vs_table.empty()) {
        PowerVS base;
        base.k = 0;
        base.value.emplace(std::make_pair(0, 0), Rational(1));
        power_vs_table.push_back(std::move(base));
    }
    while (static_cast<int>(power_vs_table.size()) <= k) {
        const PowerVS& prev = power_vs_table.back();
        PowerVS next;
        next.k = prev.k + 1;
        next.value = ra_add(ra_shift(prev.value, 1, 0, 1), ra_shift(prev.derivative, 0, 1, -1));
        next.derivative = ra_add(prev.value, ra_shift(prev.derivative, 1, 0, 1));
        power_vs_table.push_back(std::move(next));
    }
    return power_vs_table[k];
}

AxialPolynomial real_axial_at(const RealAxial& r, int n) {
    AxialPolynomial a(n);
    for (const auto& [ij, c] : r)
        a.add_term(ij.first, ij.second, Multivector(n, c));
    return a;
}

AxialPolynomial zonal_axial(int n, int k) {
    if (n < 2)
        throw DimensionError("zonal polynomials require n >= 2");
    return real_axial_at(power_vs(k + 1).derivative, n);
}

MvPolynomial zonal(int n, int k) {
    return from_axial(zonal_axial(n, k));
}

SlicePolynomial::SlicePolynomial(int n, std::vector<Multivector> coeffs)
    : SlicePolynomial(n) {
    for (const auto& c : coeffs)
        if (c.dimension() != n)
            throw DimensionError("coefficient dimension mismatch");
    coeffs_ = std::move(coeffs);
    trim();
}

SlicePolynomial SlicePolynomial::constant(const Multivector& a0) {
    return SlicePolynomial(a0.dimension(), {a0});
}

SlicePolynomial SlicePolynomial::variable(int n) {
    return SlicePolynomial(n, {Multivector(n), Multivector(n, 1)});
}

Multivector SlicePolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Multivector(n_);
    return coeffs_[k];
}

void SlicePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

SlicePolynomial SlicePolynomial::operator+(const SlicePolynomial& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionError("slice polynomial dimension mismatch");
    std::vector<Multivector> out;
    size_t len = std::max(coeffs_.size(), rhs.coeffs_.size());
    out.reserve(len);
    for (size_t k = 0; k < len; ++k)
        out.push_back(coefficient(static_cast<int>(k)) + rhs.coefficient(static_cast<int>(k)));
    return SlicePolynomial(n_, std::move(out));
}

SlicePolynomial SlicePolynomial::operator-(const SlicePolynomial& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionError("slice polynomial dimension mismatch");
    std::vector<Multivector> out;
    size_t len = std::max(coeffs_.size(), rhs.coeffs_.size());
    out.reserve(len);
    for (size_t k = 0; k < len; ++k)
        out.push_back(coefficient(static_cast<int>(k)) - rhs.coefficient(static_cast<int>(k)));
    return SlicePolynomial(n_, std::move(out));
}

SlicePolynomial SlicePolynomial::operator*(const Multivector& c) const {
    std::vector<Multivector> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        out.push_back(a * c);
    return SlicePolynomial(n_, std::move(out));
}

SlicePolynomial SlicePolynomial::shift() const {
    std::vector<Multivector> out;
    out.reserve(coeffs_.size() + 1);
    out.push_back(Multivector(n_));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return SlicePolynomial(n_, std::move(out));
}

bool SlicePolynomial::operator==(const SlicePolynomial& rhs) const {
    return n_ == rhs.n_ && coeffs_ == rhs.coeffs_;
}

SlicePolynomial slice_mul(const SlicePolynomial& f, const SlicePolynomial& g) {
    if (f.dimension() != g.dimension())
        throw DimensionError("slice polynomial dimension mismatch");
    int n = f.dimension();
    if (f.degree() < 0 || g.degree() < 0)
        return SlicePolynomial(n);
    std::vector<Multivector> out(f.degree() + g.degree() + 1, Multivector(n));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j)
            out[i + j] = out[i + j] + f.coefficient(i) * g.coefficient(j);
    return SlicePolynomial(n, std::move(out));
}

MvPolynomial expand(const SlicePolynomial& f) {
    int n = f.dimension();
    MvPolynomial out(n);
    MvPolynomial v = MvPolynomial::imaginary_vector(n);
    for (int k = 0; k <= f.degree(); ++k) {
        const Multivector& a = f.coefficient(k);
        if (a.is_zero())
            continue;
        const PowerVS& vs = power_vs(k);
        MvPolynomial part = from_axial(real_axial_at(vs.value, n)) +
                            v * from_axial(real_axial_at(vs.derivative, n));
        out = out + part * a;
    }
    return out;
}

std::pair<AxialPolynomial, AxialPolynomial> spherical_value_derivative(const SlicePolynomial& f) {
    int n = f.dimension();
    AxialPolynomial V(n), S(n);
    for (int k = 0; k <= f.degree(); ++k) {
        const Multivector& a = f.coefficient(k);
        if (a.is_zero())
            continue;
        const PowerVS& vs = power_vs(k);
        V = V + real_axial_at(vs.value, n) * a;
        S = S + real_axial_at(vs.derivative, n) * a;
    }
    return {V, S};
}

std::pair<AxialPolynomial, AxialPolynomial> spherical_derivative_full(const MvPolynomial& p) {
    int n = p.dimension();
    MvPolynomial conj = p.conj_compose();
    Rational half(1, 2);
    MvPolynomial even = (p + conj) * half;
    MvPolynomial odd = (p - conj) * half;

    MvPolynomial v = MvPolynomial::imaginary_vector(n);
    MvPolynomial t = MvPolynomial::radius_sq(n);

    // odd = v q  =>  v odd = v v q = -t q  =>  q = -(v odd)/t
    MvPolynomial q(n);
    if (!odd.is_zero()) {
        try {
            q = -(v * odd).divide_exact(t);
        } catch (const std::domain_error&) {
            throw NotSliceError("odd part is not divisible by the imaginary vector");
        }
        // The algebra has zero divisors, so recheck the recovered quotient.
        if (v * q != odd)
            throw NotSliceError("odd part is not of the form v * (axial polynomial)");
    }

    try {
        return {to_axial(even), to_axial(q)};
    } catch (const NotAxialError& e) {
        throw NotSliceError(std::string("slice components are not axial: ") + e.what());
    }
}

} // namespace almansi
