#include "almansi/almansi.hpp"

#include <cassert>
#include <set>

#include "almansi/diffops.hpp"
#include "almansi/linalg.hpp"

namespace almansi {

namespace {

void enumerate_monomials(int nvars, int degree, ExponentVec& cur, int pos,
                         std::vector<ExponentVec>& out) {
    if (pos == nvars - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int d = degree; d >= 0; --d) {
        cur[pos] = d;
        enumerate_monomials(nvars, degree - d, cur, pos + 1, out);
    }
}

std::vector<ExponentVec> monomial_basis(int n, int degree) {
    std::vector<ExponentVec> out;
    ExponentVec cur(n + 1, 0);
    enumerate_monomials(n + 1, degree, cur, 0, out);
    return out;
}

} // namespace

DecompositionAB decompose(const SlicePolynomial& f) {
    int n = f.dimension();
    AxialPolynomial a_axial(n), b_axial(n);
    for (int k = 0; k <= f.degree(); ++k) {
        const Multivector& c = f.coefficient(k);
        if (c.is_zero())
            continue;
        a_axial = a_axial + zonal_axial(n, k) * c;
        if (k >= 1)
            b_axial = b_axial + zonal_axial(n, k - 1) * c;
    }
    return {n, from_axial(a_axial), from_axial(b_axial), a_axial, b_axial};
}

DecompositionAB decompose_cr(const SlicePolynomial& f) {
    int n = f.dimension();
    if (n < 2)
        throw DimensionError("decompose_cr requires n >= 2");
    Rational scale = rat(1, 1 - n);
    MvPolynomial a = cauchy_riemann(expand(f.shift())) * scale;
    MvPolynomial b = cauchy_riemann(expand(f)) * scale;
    return {n, a, b, to_axial(a), to_axial(b)};
}

MvPolynomial reconstruct(const DecompositionAB& d) {
    MvPolynomial xc = MvPolynomial::clifford_variable_conj(d.n);
    return d.A - xc * d.B;
}

bool check_pde_system(const DecompositionAB& d) {
    int n = d.n;
    AxialPolynomial alpha = AxialPolynomial::alpha(n);
    AxialPolynomial t = AxialPolynomial::t(n);
    const AxialPolynomial& a = d.A_axial;
    const AxialPolynomial& b = d.B_axial;
    AxialPolynomial eq1 =
        a.d_alpha() - alpha * b.d_alpha() - t * b.d_t() * Rational(2) - b * Rational(2);
    AxialPolynomial eq2 = a.d_t() * Rational(2) - alpha * b.d_t() * Rational(2) + b.d_alpha();
    return eq1.is_zero() && eq2.is_zero();
}

std::pair<MvPolynomial, MvPolynomial> fischer_split(const MvPolynomial& h) {
    int n = h.dimension();
    if (!h.is_homogeneous())
        throw NonHomogeneousError("fischer_split requires a homogeneous input");
    int d = h.total_degree();
    if (d < 2)
        return {h, MvPolynomial(n)};

    // The map r -> Laplacian(|x|^2 r) is invertible on homogeneous degree d-2;
    // solve it per blade component.
    std::vector<ExponentVec> basis = monomial_basis(n, d - 2);
    size_t size = basis.size();
    std::map<ExponentVec, size_t> index;
    for (size_t j = 0; j < size; ++j)
        index.emplace(basis[j], j);

    MvPolynomial norm2 = MvPolynomial::norm_sq(n);
    RatMatrix m(size, std::vector<Rational>(size, Rational(0)));
    for (size_t j = 0; j < size; ++j) {
        MvPolynomial img =
            laplacian(norm2 * MvPolynomial::monomial(n, basis[j], Multivector(n, 1)));
        for (const auto& [e, c] : img.terms())
            m[index.at(e)][j] = c.scalar_part();
    }

    MvPolynomial rhs = laplacian(h);
    std::set<BladeMask> blades;
    for (const auto& [e, c] : rhs.terms())
        for (const auto& [mask, q] : c.terms())
            blades.insert(mask);
    if (blades.empty())
        return {h, MvPolynomial(n)}; // h already harmonic

    std::vector<BladeMask> blade_list(blades.begin(), blades.end());
    RatMatrix b(size, std::vector<Rational>(blade_list.size(), Rational(0)));
    for (const auto& [e, c] : rhs.terms())
        for (size_t col = 0; col < blade_list.size(); ++col)
            b[index.at(e)][col] = c.coefficient(blade_list[col]);

    RatMatrix x = solve_linear(std::move(m), std::move(b));
    MvPolynomial remainder(n);
    for (size_t j = 0; j < size; ++j) {
        Multivector coef(n);
        for (size_t col = 0; col < blade_list.size(); ++col)
            coef.add_term(blade_list[col], x[j][col]);
        if (!coef.is_zero())
            remainder.add_term(basis[j], coef);
    }
    MvPolynomial harmonic = h - norm2 * remainder;
    assert(laplacian(harmonic).is_zero());
    return {harmonic, remainder};
}

AlmansiLayers classical_almansi(const MvPolynomial& p, int order) {
    int n = p.dimension();
    if (order < 1)
        throw std::invalid_argument("order must be >= 1");
    if (!iterated_laplacian(p, order).is_zero())
        throw NotPolyharmonicError(order, "input is not polyharmonic of order " +
                                              std::to_string(order));

    std::vector<MvPolynomial> layers(order, MvPolynomial(n));
    for (const auto& [deg, comp] : p.homogeneous_components()) {
        MvPolynomial rest = comp;
        int depth = 0;
        while (!rest.is_zero()) {
            auto [harm, rem] = fischer_split(rest);
            if (!harm.is_zero()) {
                if (depth >= order)
                    throw std::logic_error("Fischer layers exceed polyharmonic order");
                layers[depth] = layers[depth] + harm;
            }
            rest = rem;
            ++depth;
        }
    }
    return {order, std::move(layers)};
}

std::vector<MvPolynomial> biharmonic_decomposition(const SlicePolynomial& f) {
    int n = f.dimension();
    if (n % 2 == 0)
        throw std::invalid_argument("biharmonic decomposition requires odd n");
    if (n <= 3)
        throw std::invalid_argument("biharmonic decomposition requires n > 3");
    int m = (n - 1) / 2;
    DecompositionAB d = decompose(f);
    AlmansiLayers ua = classical_almansi(d.A, m);
    AlmansiLayers ub = classical_almansi(d.B, m);
    MvPolynomial xc = MvPolynomial::clifford_variable_conj(n);
    std::vector<MvPolynomial> g;
    g.reserve(m);
    for (int k = 0; k < m; ++k)
        g.push_back(ua.layers[k] - xc * ub.layers[k]);
    return g;
}

} // namespace almansi
