#include "almansi/linalg.hpp"

#include <stdexcept>

namespace almansi {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<int> echelon(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

RatMatrix solve_linear(RatMatrix a, RatMatrix b) {
    size_t nr = a.size();
    if (nr == 0)
        return b;
    if (b.size() != nr)
        throw std::invalid_argument("rhs row count mismatch");
    size_t nc = b[0].size();
    // Augment and reduce.
    for (size_t i = 0; i < nr; ++i)
        a[i].insert(a[i].end(), b[i].begin(), b[i].end());
    std::vector<int> pivots = echelon(a);
    if (pivots.size() != nr)
        throw std::domain_error("singular linear system");
    for (size_t i = 0; i < nr; ++i)
        if (pivots[i] >= static_cast<int>(nr))
            throw std::domain_error("singular linear system");
    RatMatrix x(nr, std::vector<Rational>(nc));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j)
            x[i][j] = a[i][nr + j];
    return x;
}

int matrix_rank(RatMatrix a) {
    return static_cast<int>(echelon(a).size());
}

std::vector<std::vector<Rational>> nullspace(RatMatrix a) {
    if (a.empty())
        return {};
    size_t cols = a[0].size();
    std::vector<int> pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace almansi
