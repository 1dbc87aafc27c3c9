#include "lgtoric/param.hpp"

#include <algorithm>

namespace lgtoric {

std::string Symbols::parameter_name(std::size_t index) const
{
    for (const auto& [name, i] : parameter_aliases)
        if (i == index)
            return name;
    return "q" + std::to_string(index);
}

Symbols Symbols::with_lambda(std::vector<std::string> variables, std::size_t index)
{
    Symbols s;
    s.variables = std::move(variables);
    s.parameter_aliases["lambda"] = index;
    return s;
}

// ---------------------------------------------------------------------------

ParamMonomial ParamMonomial::variable(std::size_t index, std::uint32_t power)
{
    ParamMonomial m;
    if (power == 0)
        return m;
    m.exps.assign(index + 1, 0);
    m.exps[index] = power;
    return m;
}

std::uint64_t ParamMonomial::degree() const
{
    std::uint64_t d = 0;
    for (auto e : exps)
        d += e;
    return d;
}

void ParamMonomial::trim()
{
    while (!exps.empty() && exps.back() == 0)
        exps.pop_back();
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b)
{
    ParamMonomial r = a.exps.size() >= b.exps.size() ? a : b;
    const ParamMonomial& o = a.exps.size() >= b.exps.size() ? b : a;
    for (std::size_t i = 0; i < o.exps.size(); ++i)
        r.exps[i] += o.exps[i];
    return r;
}

bool divides(const ParamMonomial& a, const ParamMonomial& b)
{
    if (a.exps.size() > b.exps.size())
        return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i])
            return false;
    return true;
}

ParamMonomial quotient(const ParamMonomial& b, const ParamMonomial& a)
{
    if (!divides(a, b))
        throw DomainError("parameter monomial does not divide");
    ParamMonomial r = b;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        r.exps[i] -= a.exps[i];
    r.trim();
    return r;
}

bool term_order_less(const ParamMonomial& a, const ParamMonomial& b)
{
    const auto da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    const std::size_t n = std::max(a.exps.size(), b.exps.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb)
            return ea > eb;
    }
    return false;
}

// ---------------------------------------------------------------------------

namespace {

bool term_less(const ParamPolynomial::Term& a, const ParamPolynomial::Term& b)
{
    return term_order_less(a.first, b.first);
}

} // namespace

ParamPolynomial::ParamPolynomial(const Rational& c)
{
    if (c != 0)
        terms_.emplace_back(ParamMonomial{}, c);
}

ParamPolynomial::ParamPolynomial(const ParamMonomial& m, const Rational& c)
{
    if (c != 0)
        terms_.emplace_back(m, c);
}

ParamPolynomial ParamPolynomial::parameter(std::size_t index, std::uint32_t power)
{
    return ParamPolynomial(ParamMonomial::variable(index, power));
}

bool ParamPolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational ParamPolynomial::constant_value() const
{
    if (!is_constant())
        throw DomainError("parameter polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational ParamPolynomial::constant_coefficient() const
{
    if (!terms_.empty() && terms_[0].first.is_one())
        return terms_[0].second;
    return 0;
}

std::size_t ParamPolynomial::parameter_count() const
{
    std::size_t n = 0;
    for (const auto& t : terms_)
        n = std::max(n, t.first.exps.size());
    return n;
}

void ParamPolynomial::add_term(const ParamMonomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const ParamMonomial& key) { return term_order_less(t.first, key); });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, c});
    }
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o)
{
    if (o.terms_.size() == 1) {
        add_term(o.terms_[0].first, o.terms_[0].second);
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || term_less(*b, *a)) {
            out.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0)
                out.emplace_back(std::move(a->first), std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o)
{
    return *this += -o;
}

ParamPolynomial& ParamPolynomial::operator*=(const ParamPolynomial& o)
{
    *this = *this * o;
    return *this;
}

ParamPolynomial& ParamPolynomial::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

void ParamPolynomial::add_mul(const ParamPolynomial& a, const ParamPolynomial& b)
{
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        add_term(a.terms_[0].first * b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
        return;
    }
    *this += a * b;
}

ParamPolynomial ParamPolynomial::evaluate(const std::map<std::size_t, Rational>& values) const
{
    ParamPolynomial out;
    for (const auto& [m, c] : terms_) {
        ParamMonomial rest = m;
        Rational coeff = c;
        for (const auto& [index, value] : values) {
            const auto e = m.exponent(index);
            if (e == 0)
                continue;
            coeff *= rational_pow(value, e);
            rest.exps[index] = 0;
        }
        rest.trim();
        out.add_term(rest, coeff);
    }
    return out;
}

ParamPolynomial ParamPolynomial::substitute(const std::map<std::size_t, ParamPolynomial>& values) const
{
    ParamPolynomial out;
    for (const auto& [m, c] : terms_) {
        ParamMonomial rest = m;
        ParamPolynomial factor(c);
        for (const auto& [index, value] : values) {
            const auto e = m.exponent(index);
            if (e == 0)
                continue;
            factor *= pow(value, e);
            rest.exps[index] = 0;
        }
        rest.trim();
        out.add_mul(factor, ParamPolynomial(rest));
    }
    return out;
}

bool operator<(const ParamPolynomial& a, const ParamPolynomial& b)
{
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[i];
        if (ta.first != tb.first)
            return term_order_less(ta.first, tb.first);
        if (ta.second != tb.second)
            return ta.second < tb.second;
    }
    return a.terms_.size() < b.terms_.size();
}

ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b)
{
    a += b;
    return a;
}

ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b)
{
    a += -b;
    return a;
}

ParamPolynomial operator-(const ParamPolynomial& a)
{
    ParamPolynomial r = a;
    r *= Rational(-1);
    return r;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<ParamPolynomial::Term> prod;
    prod.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            prod.emplace_back(ma * mb, ca * cb);
    std::stable_sort(prod.begin(), prod.end(), term_less);
    ParamPolynomial out;
    for (std::size_t i = 0; i < prod.size();) {
        std::size_t j = i + 1;
        Rational c = prod[i].second;
        while (j < prod.size() && prod[j].first == prod[i].first)
            c += prod[j++].second;
        out.add_term(prod[i].first, c); // appends: keys arrive in order
        i = j;
    }
    return out;
}

ParamPolynomial pow(const ParamPolynomial& a, unsigned e)
{
    ParamPolynomial result(1), base = a;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::string to_string(const ParamPolynomial& p, const Symbols& symbols)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += symbols.parameter_name(i);
            if (m.exps[i] > 1)
                mono += "^" + std::to_string(m.exps[i]);
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (mono.empty())
            term = to_string(mag);
        else if (mag == 1)
            term = mono;
        else
            term = to_string(mag) + "*" + mono;
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += term;
    }
    return out;
}

} // namespace lgtoric
