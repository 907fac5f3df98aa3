#include "almansi/closed_form.hpp"

#include <cmath>

namespace almansi {

namespace {

// sin(b)/b with the removable singularity handled by a short series.
double sinc(double b) {
    if (std::fabs(b) < 1e-6) {
        double b2 = b * b;
        return 1.0 - b2 / 6.0 + b2 * b2 / 120.0;
    }
    return std::sin(b) / b;
}

} // namespace

FloatMultivector::FloatMultivector(int n, double scalar) : n(n) {
    add_term(0, scalar);
}

void FloatMultivector::add_term(BladeMask m, double c) {
    if (c == 0.0)
        return;
    terms[m] += c;
    if (terms[m] == 0.0)
        terms.erase(m);
}

double FloatMultivector::coefficient(BladeMask m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0.0 : it->second;
}

FloatMultivector FloatMultivector::operator+(const FloatMultivector& rhs) const {
    FloatMultivector out = *this;
    for (const auto& [m, c] : rhs.terms)
        out.add_term(m, c);
    return out;
}

FloatMultivector FloatMultivector::operator-(const FloatMultivector& rhs) const {
    FloatMultivector out = *this;
    for (const auto& [m, c] : rhs.terms)
        out.add_term(m, -c);
    return out;
}

FloatMultivector FloatMultivector::operator*(const FloatMultivector& rhs) const {
    FloatMultivector out(n);
    for (const auto& [ma, ca] : terms) {
        for (const auto& [mb, cb] : rhs.terms) {
            auto [sign, m] = blade_product(ma, mb, n);
            out.add_term(m, sign * ca * cb);
        }
    }
    return out;
}

FloatMultivector FloatMultivector::operator*(double s) const {
    FloatMultivector out(n);
    for (const auto& [m, c] : terms)
        out.add_term(m, c * s);
    return out;
}

FloatMultivector FloatMultivector::conjugate() const {
    FloatMultivector out(n);
    for (const auto& [m, c] : terms)
        out.add_term(m, conjugation_sign(m) * c);
    return out;
}

double FloatMultivector::max_abs() const {
    double m = 0.0;
    for (const auto& [mask, c] : terms)
        m = std::max(m, std::fabs(c));
    return m;
}

FloatMultivector embed_float(const FloatParavector& x) {
    int n = x.dimension();
    FloatMultivector out(n);
    out.add_term(0, x.coords[0]);
    for (int i = 1; i <= n; ++i)
        out.add_term(BladeMask{1} << (i - 1), x.coords[i]);
    return out;
}

FloatMultivector to_float(const Multivector& x) {
    FloatMultivector out(x.dimension());
    for (const auto& [m, c] : x.terms())
        out.add_term(m, c.get_d());
    return out;
}

FloatMultivector evaluate_float(const MvPolynomial& p, const FloatParavector& pt) {
    int n = p.dimension();
    FloatMultivector acc(n);
    for (const auto& [e, c] : p.terms()) {
        double m = 1.0;
        for (int i = 0; i <= n; ++i)
            m *= std::pow(pt.coords[i], e[i]);
        acc = acc + to_float(c) * m;
    }
    return acc;
}

ExpComponents eval_exp_components(const FloatParavector& x) {
    const int n = 3;
    double x0 = x.coords[0];
    double b2 = 0.0;
    for (int i = 1; i <= n; ++i)
        b2 += x.coords[i] * x.coords[i];
    double beta = std::sqrt(b2);
    double ex = std::exp(x0);
    double sc = sinc(beta);

    FloatMultivector f(n, ex * std::cos(beta));
    for (int i = 1; i <= n; ++i)
        f.add_term(BladeMask{1} << (i - 1), ex * sc * x.coords[i]);

    FloatMultivector a(n, ex * (std::cos(beta) + x0 * sc));
    FloatMultivector b(n, ex * sc);
    return {f, a, b};
}

InverseComponents eval_inverse_components(const FloatParavector& x) {
    const int n = 2;
    double r2 = 0.0;
    for (int i = 0; i <= n; ++i)
        r2 += x.coords[i] * x.coords[i];
    if (std::sqrt(r2) < 1e-12)
        throw OriginSingularityError("inverse example evaluated at the origin");
    FloatMultivector g = embed_float(x).conjugate() * (1.0 / r2);
    FloatMultivector a(n);
    FloatMultivector b(n, -1.0 / r2);
    return {g, a, b};
}

FloatMultivector finite_difference_laplacian(const PointFunction& fn, const FloatParavector& x,
                                             double h) {
    int n = x.dimension();
    FloatMultivector center = fn(x) * (-2.0 * (n + 1));
    FloatMultivector acc = center;
    for (int i = 0; i <= n; ++i) {
        FloatParavector xp = x, xm = x;
        xp.coords[i] += h;
        xm.coords[i] -= h;
        acc = acc + fn(xp) + fn(xm);
    }
    return acc * (1.0 / (h * h));
}

} // namespace almansi
