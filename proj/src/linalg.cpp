#include "lgtoric/linalg.hpp"

#include <algorithm>
#include <utility>

namespace lgtoric {

Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v)
{
    IntVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty())
        return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix r(a.size(), IntVector(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j)
                    r[i][j] += a[i][k] * b[k][j];
    return r;
}

IntMatrix transpose(const IntMatrix& m)
{
    if (m.empty())
        return {};
    IntMatrix t(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

namespace {

// Rows i and j are replaced by [[p, q], [r, s]] * [row_i; row_j]; the 2x2
// matrix must have determinant +-1.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                  const Integer& r, const Integer& s)
{
    for (std::size_t c = 0; c < m[i].size(); ++c) {
        Integer a = m[i][c];
        Integer b = m[j][c];
        m[i][c] = p * a + q * b;
        m[j][c] = r * a + s * b;
    }
}

// Extended gcd with g = x*a + y*b, g >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y)
{
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

} // namespace

RowEchelon row_echelon(IntMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    RowEchelon out;
    out.transform = identity_matrix(rows);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Fold every lower entry of this column into the pivot row.
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            if (a[pivot_row][col] == 0) {
                std::swap(a[pivot_row], a[r]);
                std::swap(out.transform[pivot_row], out.transform[r]);
                continue;
            }
            Integer g, x, y;
            const Integer u = a[pivot_row][col];
            const Integer v = a[r][col];
            extended_gcd(u, v, g, x, y);
            const Integer p = u / g;
            const Integer q = v / g;
            // [[x, y], [-q, p]] has determinant x*p + y*q = 1.
            combine_rows(a, pivot_row, r, x, y, -q, p);
            combine_rows(out.transform, pivot_row, r, x, y, -q, p);
        }
        if (a[pivot_row][col] == 0)
            continue;
        if (a[pivot_row][col] < 0) {
            for (auto& v : a[pivot_row])
                v = -v;
            for (auto& v : out.transform[pivot_row])
                v = -v;
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q = a[r][col] / a[pivot_row][col];
            if (a[r][col] - q * a[pivot_row][col] < 0)
                q -= 1;
            if (q == 0)
                continue;
            for (std::size_t c = 0; c < cols; ++c)
                a[r][c] -= q * a[pivot_row][c];
            for (std::size_t c = 0; c < rows; ++c)
                out.transform[r][c] -= q * out.transform[pivot_row][c];
        }
        ++pivot_row;
    }
    out.rank = pivot_row;
    out.echelon = std::move(a);
    return out;
}

Integer determinant(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    const RowEchelon re = row_echelon(m);
    const std::size_t n = m.size();
    // transform * m == echelon; for unimodular m the echelon form is I.
    if (re.rank != n)
        throw DomainError("matrix is singular");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (re.echelon[i][j] != (i == j ? 1 : 0))
                throw DomainError("matrix is not unimodular");
    return re.transform;
}

IntMatrix lattice_basis(const IntMatrix& generators, std::size_t dim)
{
    if (generators.empty())
        return {};
    RowEchelon re = row_echelon(generators);
    IntMatrix basis(re.echelon.begin(), re.echelon.begin() + static_cast<std::ptrdiff_t>(re.rank));
    for (auto& row : basis)
        row.resize(dim, 0);
    return basis;
}

Integer lattice_index(const IntMatrix& generators, std::size_t dim)
{
    const IntMatrix basis = lattice_basis(generators, dim);
    if (basis.size() < dim)
        return 0;
    return abs_value(determinant(basis));
}

std::vector<RatVector> rational_nullspace(RatMatrix m, std::size_t cols)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row])
            v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace lgtoric
