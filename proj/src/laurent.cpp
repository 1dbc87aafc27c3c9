#include "lgtoric/laurent.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_map>

namespace lgtoric {

namespace {

struct ExponentHash
{
    std::size_t operator()(const Exponent& e) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto v : e) {
            h ^= static_cast<std::uint32_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

using TermMap = std::unordered_map<Exponent, ParamPolynomial, ExponentHash>;

Exponent add(const Exponent& a, const Exponent& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

bool term_less(const LaurentPolynomial::Term& a, const LaurentPolynomial::Term& b)
{
    return a.first < b.first;
}

std::int64_t max_abs_exponent(const LaurentPolynomial& f)
{
    std::int64_t m = 0;
    for (const auto& [e, c] : f.terms())
        for (auto v : e)
            m = std::max<std::int64_t>(m, v < 0 ? -static_cast<std::int64_t>(v) : v);
    return m;
}

} // namespace

LatticePoint to_point(const Exponent& e, std::size_t nvars)
{
    LatticePoint p;
    for (std::size_t i = 0; i < nvars; ++i)
        p.coords.emplace_back(e[i]);
    return p;
}

Exponent to_exponent(const LatticePoint& p)
{
    if (p.dim() > 3)
        throw DomainError("at most three variables are supported");
    Exponent e{0, 0, 0};
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] > std::numeric_limits<std::int32_t>::max() || p[i] < std::numeric_limits<std::int32_t>::min())
            throw DomainError("exponent out of range");
        e[i] = p[i].convert_to<std::int32_t>();
    }
    return e;
}

LaurentPolynomial::LaurentPolynomial(std::size_t nvars) : nvars_(nvars)
{
    if (nvars > 3)
        throw DomainError("at most three variables are supported");
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const ParamPolynomial& c)
{
    return monomial(nvars, {0, 0, 0}, c);
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t nvars, const Exponent& e, const ParamPolynomial& c)
{
    LaurentPolynomial f(nvars);
    f.add_term(e, c);
    return f;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars)
        throw DomainError("variable index out of range");
    Exponent e{0, 0, 0};
    e[index] = 1;
    return monomial(nvars, e);
}

ParamPolynomial LaurentPolynomial::coefficient(const Exponent& e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, {}}, term_less);
    if (it != terms_.end() && it->first == e)
        return it->second;
    return {};
}

void LaurentPolynomial::add_term(const Exponent& e, const ParamPolynomial& c)
{
    for (std::size_t i = nvars_; i < 3; ++i)
        if (e[i] != 0)
            throw DomainError("exponent uses more variables than the polynomial has");
    if (c.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, {}}, term_less);
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, Term{e, c});
    }
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms)
{
    LaurentPolynomial f(nvars);
    std::sort(terms.begin(), terms.end(), term_less);
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        ParamPolynomial c = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first)
            c += terms[j++].second;
        for (std::size_t k = nvars; k < 3; ++k)
            if (terms[i].first[k] != 0)
                throw DomainError("exponent uses more variables than the polynomial has");
        if (!c.is_zero())
            f.terms_.emplace_back(terms[i].first, std::move(c));
        i = j;
    }
    return f;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    if (o.nvars_ != nvars_)
        throw DomainError("Laurent polynomials have different numbers of variables");
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    *this = from_terms(nvars_, std::move(all));
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o)
{
    return *this += -o;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const ParamPolynomial& c)
{
    std::vector<Term> out;
    for (auto& [e, coeff] : terms_) {
        ParamPolynomial p = coeff * c;
        if (!p.is_zero())
            out.emplace_back(e, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (a.nvars_ != b.nvars_)
        return a.nvars_ < b.nvars_;
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms_[i].first != b.terms_[i].first)
            return a.terms_[i].first < b.terms_[i].first;
        if (a.terms_[i].second != b.terms_[i].second)
            return a.terms_[i].second < b.terms_[i].second;
    }
    return a.terms_.size() < b.terms_.size();
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b)
{
    a += b;
    return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b)
{
    a -= b;
    return a;
}

LaurentPolynomial operator-(const LaurentPolynomial& a)
{
    LaurentPolynomial r = a;
    r *= ParamPolynomial(-1);
    return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    return multiply(a, b);
}

LaurentPolynomial operator*(const ParamPolynomial& c, LaurentPolynomial a)
{
    a *= c;
    return a;
}

LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b, unsigned threads)
{
    if (a.nvars() != b.nvars())
        throw DomainError("Laurent polynomials have different numbers of variables");
    if (a.is_zero() || b.is_zero())
        return LaurentPolynomial(a.nvars());
    if (max_abs_exponent(a) + max_abs_exponent(b) > std::numeric_limits<std::int32_t>::max())
        throw DomainError("exponent overflow in product");

    const auto& ta = a.terms();
    const auto& tb = b.terms();
    auto accumulate = [&](std::size_t lo, std::size_t hi, TermMap& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            for (const auto& [eb, cb] : tb)
                acc[add(ta[i].first, eb)].add_mul(ta[i].second, cb);
    };

    const std::size_t work = ta.size() * tb.size();
    std::size_t chunks = threads <= 1 || work < 4096 ? 1 : std::min<std::size_t>(threads, ta.size());
    std::vector<TermMap> partial(chunks);
    if (chunks == 1) {
        partial[0].reserve(work);
        accumulate(0, ta.size(), partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t c = 0; c < chunks; ++c)
            pool.emplace_back([&, c] {
                accumulate(ta.size() * c / chunks, ta.size() * (c + 1) / chunks, partial[c]);
            });
        for (auto& t : pool)
            t.join();
        for (std::size_t c = 1; c < chunks; ++c)
            for (auto& [e, coeff] : partial[c])
                partial[0][e] += coeff;
    }
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(partial[0].size());
    for (auto& [e, coeff] : partial[0])
        if (!coeff.is_zero())
            terms.emplace_back(e, std::move(coeff));
    return LaurentPolynomial::from_terms(a.nvars(), std::move(terms));
}

LaurentPolynomial power(const LaurentPolynomial& f, unsigned j, unsigned threads)
{
    LaurentPolynomial result = LaurentPolynomial::constant(f.nvars(), 1);
    for (unsigned i = 0; i < j; ++i)
        result = multiply(result, f, threads);
    return result;
}

ParamPolynomial constant_term(const LaurentPolynomial& f)
{
    return f.coefficient({0, 0, 0});
}

LatticePolytope newton_polytope(const LaurentPolynomial& f)
{
    if (f.is_zero())
        throw DomainError("Newton polytope of the zero polynomial");
    if (f.nvars() == 0)
        throw DomainError("Newton polytope of a polynomial in no variables");
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : f.terms())
        pts.push_back(to_point(e, f.nvars()));
    return convex_hull(pts, HullMode::AllowDegenerate);
}

LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const LatticePolytope& face, const AffineChart& chart)
{
    if (face.ambient_dim() != f.nvars() || chart.ambient_dim() != f.nvars())
        throw DomainError("face and polynomial live in different lattices");
    if (chart.rank() != face.dim())
        throw DomainError("chart rank does not match the face dimension");
    for (const auto& v : face.vertices())
        if (!chart.contains(v))
            throw DomainError("chart does not cover the face");
    LaurentPolynomial out(chart.rank());
    std::vector<LatticePoint> support;
    for (const auto& [e, c] : f.terms()) {
        LatticePoint p = to_point(e, f.nvars());
        if (!face.contains(p))
            continue;
        support.push_back(p);
        const IntVector y = chart.to_chart(p);
        out.add_term(to_exponent(LatticePoint(y)), c);
    }
    for (const auto& v : face.vertices())
        if (!std::binary_search(support.begin(), support.end(), v))
            throw DomainError("face vertex " + to_string(v) + " is not in the support of the polynomial");
    return out;
}

LaurentPolynomial restrict_to_facet(const LaurentPolynomial& f, const FacetChart& facet)
{
    std::vector<LatticePoint> pts = facet.lattice_points;
    return restrict_to_face(f, convex_hull(pts, HullMode::AllowDegenerate), facet.chart);
}

LaurentPolynomial monomial_substitution(const LaurentPolynomial& f, const IntMatrix& u,
                                        const std::vector<VariableScale>& scale)
{
    const std::size_t n = f.nvars();
    if (u.size() != n || (n && u[0].size() != n))
        throw DomainError("substitution matrix has the wrong size");
    if (n && abs_value(determinant(u)) != 1)
        throw DomainError("substitution matrix is not unimodular");
    if (!scale.empty() && scale.size() != n)
        throw DomainError("one scale per variable is required");
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& [e, c] : f.terms()) {
        const IntVector image = mat_vec(u, to_point(e, n).coords);
        ParamPolynomial coeff = c;
        for (std::size_t i = 0; i < scale.size(); ++i) {
            const auto k = e[i];
            if (k == 0)
                continue;
            if (k < 0 && !scale[i].parameters.is_one())
                throw DomainError("negative power of a parameter scale");
            if (scale[i].rational == 0)
                throw DomainError("zero scale");
            const unsigned mag = static_cast<unsigned>(k < 0 ? -k : k);
            Rational r = rational_pow(scale[i].rational, mag);
            if (k < 0)
                r = 1 / r;
            ParamMonomial m;
            if (k > 0)
                for (std::size_t p = 0; p < scale[i].parameters.exps.size(); ++p)
                    m = m * ParamMonomial::variable(p, scale[i].parameters.exps[p] * mag);
            coeff *= ParamPolynomial(m, r);
        }
        terms.emplace_back(to_exponent(LatticePoint(image)), std::move(coeff));
    }
    return LaurentPolynomial::from_terms(n, std::move(terms));
}

LaurentPolynomial evaluate_parameters(const LaurentPolynomial& f, const std::map<std::size_t, Rational>& values)
{
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& [e, c] : f.terms())
        terms.emplace_back(e, c.evaluate(values));
    return LaurentPolynomial::from_terms(f.nvars(), std::move(terms));
}

LaurentPolynomial substitute_parameters(const LaurentPolynomial& f,
                                        const std::map<std::size_t, ParamPolynomial>& values)
{
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& [e, c] : f.terms())
        terms.emplace_back(e, c.substitute(values));
    return LaurentPolynomial::from_terms(f.nvars(), std::move(terms));
}

std::string to_string(const LaurentPolynomial& f, const Symbols& symbols)
{
    if (f.is_zero())
        return "0";
    if (symbols.variables.size() < f.nvars())
        throw DomainError("not enough variable names");
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += symbols.variables[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty()) {
            term = to_string(c, symbols);
        } else if (c.terms().size() == 1) {
            const std::string coeff = to_string(c, symbols);
            if (coeff == "1")
                term = mono;
            else if (coeff == "-1")
                term = "-" + mono;
            else
                term = coeff + "*" + mono;
        } else {
            term = "(" + to_string(c, symbols) + ")*" + mono;
        }
        if (!out.empty() && term[0] != '-')
            out += "+";
        out += term;
    }
    return out;
}

} // namespace lgtoric
