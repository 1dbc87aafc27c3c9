#include "lgtoric/periods.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lgtoric {

PeriodSequence period_sequence(const LaurentPolynomial& f, unsigned n, unsigned threads)
{
    PeriodSequence out;
    LaurentPolynomial g = LaurentPolynomial::constant(f.nvars(), 1);
    out.coeffs.push_back(1);
    for (unsigned j = 1; j <= n; ++j) {
        g = multiply(g, f, threads);
        out.coeffs.push_back(constant_term(g));
    }
    return out;
}

PeriodSequence period_sequence_pruned(const LaurentPolynomial& f, unsigned n, unsigned threads)
{
    if (f.is_zero() || f.nvars() == 0)
        return period_sequence(f, n, threads);
    const LatticePolytope newton = newton_polytope(f);
    auto reachable = [&](const Exponent& e, unsigned steps) {
        // -e must lie in steps * N(f).
        const LatticePoint y = -to_point(e, f.nvars());
        for (const auto& h : newton.equations())
            if (dot(h.normal, y) != h.offset * steps)
                return false;
        for (const auto& fct : newton.facets())
            if (dot(fct.inequality.normal, y) < fct.inequality.offset * steps)
                return false;
        return true;
    };
    PeriodSequence out;
    LaurentPolynomial g = LaurentPolynomial::constant(f.nvars(), 1);
    out.coeffs.push_back(1);
    for (unsigned j = 1; j <= n; ++j) {
        g = multiply(g, f, threads);
        out.coeffs.push_back(constant_term(g));
        std::vector<LaurentPolynomial::Term> kept;
        for (const auto& t : g.terms())
            if (reachable(t.first, n - j))
                kept.push_back(t);
        g = LaurentPolynomial::from_terms(f.nvars(), std::move(kept));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Givental series

void ToricData::validate() const
{
    if (rays.empty())
        throw DomainError("toric data without rays");
    const std::size_t dim = rays[0].dim();
    for (const auto& r : rays) {
        if (r.dim() != dim)
            throw DomainError("rays of mixed dimension");
        Integer g = 0;
        for (const auto& c : r.coords)
            g = gcd(g, abs_value(c));
        if (g != 1)
            throw DomainError("ray " + to_string(r) + " is not primitive");
    }
    if (parameters.size() != relations.size())
        throw DomainError("one parameter monomial per relation is required");
    for (const auto& row : relations) {
        if (row.size() != rays.size())
            throw DomainError("relation length differs from the number of rays");
        for (std::size_t k = 0; k < dim; ++k) {
            Integer s = 0;
            for (std::size_t i = 0; i < rays.size(); ++i)
                s += row[i] * rays[i][k];
            if (s != 0)
                throw DomainError("relation row is not a linear relation among the rays");
        }
    }
    IntMatrix ray_matrix;
    for (const auto& r : rays)
        ray_matrix.push_back(r.coords);
    const std::size_t expected = rays.size() - row_echelon(ray_matrix).rank;
    if (row_echelon(relations).rank != relations.size() || relations.size() != expected)
        throw DomainError("relation matrix is degenerate: expected " + std::to_string(expected) +
                          " independent relations");
}

namespace {

// Solves m^T c = d for square invertible m over Q.
std::optional<RatVector> solve_transposed(const IntMatrix& m, const IntVector& d)
{
    const std::size_t n = m.size();
    RatMatrix a(n, RatVector(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = Rational(m[c][r]);
        a[r][n] = Rational(d[r]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= n; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    RatVector x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[r] = a[r][n] / a[r][r];
    return x;
}

} // namespace

ISeries givental_series(const ToricData& data, unsigned n)
{
    data.validate();
    const std::size_t b = data.relations.size();
    const std::size_t nr = data.rays.size();
    ISeries out;
    out.coeffs.assign(n + 1, ParamPolynomial());
    out.coeffs[0] = 1;
    if (b == 0)
        return out;

    // A curve class is determined by its intersection numbers with the
    // divisors of b independent columns; enumerate those and solve.
    const RowEchelon re = row_echelon(data.relations);
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0, c = 0; r < re.rank; ++r) {
        while (re.echelon[r][c] == 0)
            ++c;
        pivots.push_back(c);
    }
    IntMatrix square(b, IntVector(b));
    for (std::size_t r = 0; r < b; ++r)
        for (std::size_t k = 0; k < b; ++k)
            square[r][k] = data.relations[r][pivots[k]];

    IntVector pivot_values(b, 0);
    std::function<void(std::size_t, unsigned)> enumerate = [&](std::size_t k, unsigned budget) {
        if (k < b) {
            for (unsigned v = 0; v <= budget; ++v) {
                pivot_values[k] = v;
                enumerate(k + 1, budget - v);
            }
            return;
        }
        const auto c = solve_transposed(square, pivot_values);
        if (!c)
            throw InternalError("pivot submatrix of the relations is singular");
        IntVector coeffs;
        for (const auto& x : *c) {
            if (!is_integral(x))
                return;
            coeffs.push_back(numerator(x));
        }
        Integer degree = 0;
        std::vector<unsigned> pairing(nr);
        for (std::size_t i = 0; i < nr; ++i) {
            Integer s = 0;
            for (std::size_t r = 0; r < b; ++r)
                s += coeffs[r] * data.relations[r][i];
            if (s < 0)
                return;
            degree += s;
            if (degree > n)
                return;
            pairing[i] = static_cast<unsigned>(to_int64(s));
        }
        const unsigned j = static_cast<unsigned>(to_int64(degree));
        if (j == 0)
            return;
        Integer weight = factorial(j);
        for (auto p : pairing)
            weight /= factorial(p);
        std::vector<Integer> param_exp;
        for (std::size_t r = 0; r < b; ++r) {
            const auto& mono = data.parameters[r];
            if (param_exp.size() < mono.exps.size())
                param_exp.resize(mono.exps.size(), 0);
            for (std::size_t p = 0; p < mono.exps.size(); ++p)
                param_exp[p] += coeffs[r] * mono.exps[p];
        }
        ParamMonomial q;
        for (const auto& e : param_exp) {
            if (e < 0)
                throw DomainError("curve class with a negative parameter exponent");
            q.exps.push_back(static_cast<std::uint32_t>(to_int64(e)));
        }
        q.trim();
        out.coeffs[j].add_term(q, Rational(weight));
    };
    enumerate(0, n);
    return out;
}

PeriodCheck compare_series(const Series& a, const Series& b, unsigned n)
{
    PeriodCheck out;
    for (unsigned j = 0; j <= n; ++j) {
        if (j >= a.size() || j >= b.size() || a[j] != b[j]) {
            out.first_mismatch = j;
            return out;
        }
    }
    out.equal = true;
    return out;
}

PeriodCheck check_period_condition(const LaurentPolynomial& f, const ISeries& series, unsigned n, unsigned threads)
{
    return compare_series(period_sequence_pruned(f, n, threads), series, n);
}

// ---------------------------------------------------------------------------
// Recurrences

Rational Recurrence::residual(const std::vector<Rational>& seq, std::size_t k) const
{
    Rational total = 0;
    for (unsigned i = 0; i <= order; ++i) {
        Rational p = 0, kp = 1;
        for (unsigned d = 0; d <= degree; ++d) {
            p += Rational(coefficients[i][d]) * kp;
            kp *= Rational(static_cast<long long>(k));
        }
        total += p * seq.at(k + i);
    }
    return total;
}

bool Recurrence::annihilates(const std::vector<Rational>& seq) const
{
    for (std::size_t k = 0; k + order < seq.size(); ++k)
        if (residual(seq, k) != 0)
            return false;
    return true;
}

std::vector<Rational> numeric_values(const Series& s)
{
    std::vector<Rational> out;
    for (const auto& c : s.coeffs) {
        if (!c.is_constant())
            throw DomainError("series has symbolic coefficients; substitute the parameters first");
        out.push_back(c.constant_value());
    }
    return out;
}

std::optional<Recurrence> find_recurrence(const std::vector<Rational>& seq, unsigned max_order, unsigned max_degree)
{
    for (unsigned r = 1; r <= max_order; ++r) {
        for (unsigned deg = 0; deg <= max_degree; ++deg) {
            const std::size_t unknowns = static_cast<std::size_t>(r + 1) * (deg + 1);
            if (seq.size() < unknowns + r + kRecurrenceMargin)
                return std::nullopt;
            RatMatrix rows;
            for (std::size_t k = 0; k + r < seq.size(); ++k) {
                RatVector row;
                for (unsigned i = 0; i <= r; ++i) {
                    Rational kp = 1;
                    for (unsigned d = 0; d <= deg; ++d) {
                        row.push_back(kp * seq[k + i]);
                        kp *= Rational(static_cast<long long>(k));
                    }
                }
                rows.push_back(std::move(row));
            }
            for (const auto& v : rational_nullspace(rows, unknowns)) {
                bool leading = false;
                for (unsigned d = 0; d <= deg; ++d)
                    if (v[r * (deg + 1) + d] != 0)
                        leading = true;
                if (!leading)
                    continue;
                Integer den = 1;
                for (const auto& x : v)
                    den = lcm(den, denominator(x));
                IntVector ints;
                Integer g = 0;
                for (const auto& x : v) {
                    ints.push_back(numerator(x * den));
                    g = gcd(g, abs_value(ints.back()));
                }
                Recurrence rec;
                rec.order = r;
                rec.degree = deg;
                rec.coefficients.assign(r + 1, std::vector<Integer>(deg + 1));
                for (unsigned i = 0; i <= r; ++i)
                    for (unsigned d = 0; d <= deg; ++d)
                        rec.coefficients[i][d] = ints[i * (deg + 1) + d] / g;
                Integer top = 0;
                for (unsigned d = deg + 1; d-- > 0 && top == 0;)
                    top = rec.coefficients[r][d];
                if (top < 0)
                    for (auto& p : rec.coefficients)
                        for (auto& c : p)
                            c = -c;
                if (!rec.annihilates(seq))
                    throw InternalError("recurrence solve produced a non-annihilating operator");
                return rec;
            }
        }
    }
    return std::nullopt;
}

std::string to_string(const Recurrence& r)
{
    auto poly = [](const std::vector<Integer>& p) {
        std::string s;
        for (std::size_t d = p.size(); d-- > 0;) {
            if (p[d] == 0)
                continue;
            const bool neg = p[d] < 0;
            const Integer mag = abs_value(p[d]);
            std::string term;
            if (d == 0)
                term = mag.str();
            else
                term = (mag == 1 ? std::string() : mag.str() + "*") + (d == 1 ? "k" : "k^" + std::to_string(d));
            if (neg)
                s += "-";
            else if (!s.empty())
                s += "+";
            s += term;
        }
        return s.empty() ? std::string("0") : s;
    };
    std::ostringstream os;
    bool first = true;
    for (unsigned i = r.order + 1; i-- > 0;) {
        if (std::all_of(r.coefficients[i].begin(), r.coefficients[i].end(), [](const Integer& c) { return c == 0; }))
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << poly(r.coefficients[i]) << ")*c(k" << (i ? "+" + std::to_string(i) : "") << ")";
    }
    os << " = 0";
    return os.str();
}

} // namespace lgtoric
