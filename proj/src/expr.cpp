#include "lgtoric/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace lgtoric {

namespace {

LaurentPolynomial shift(const LaurentPolynomial& f, const Exponent& by)
{
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        Exponent s{};
        for (std::size_t i = 0; i < 3; ++i) {
            const std::int64_t v = static_cast<std::int64_t>(e[i]) + by[i];
            if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
                throw DomainError("exponent overflow");
            s[i] = static_cast<std::int32_t>(v);
        }
        terms.emplace_back(s, c);
    }
    return LaurentPolynomial::from_terms(f.nvars(), std::move(terms));
}

Exponent min_exponent(const LaurentPolynomial& f)
{
    Exponent m = f.terms().front().first;
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < 3; ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

Exponent negate(const Exponent& e)
{
    return {-e[0], -e[1], -e[2]};
}

LaurentPolynomial with_nvars(const LaurentPolynomial& f, std::size_t n)
{
    std::vector<LaurentPolynomial::Term> terms(f.terms().begin(), f.terms().end());
    return LaurentPolynomial::from_terms(n, std::move(terms));
}

} // namespace

// ---------------------------------------------------------------------------
// RationalFunctionExpr

RationalFunctionExpr::RationalFunctionExpr(std::size_t nvars)
    : num_(nvars), den_(LaurentPolynomial::constant(nvars, 1))
{}

RationalFunctionExpr::RationalFunctionExpr(LaurentPolynomial f)
    : num_(std::move(f)), den_(LaurentPolynomial::constant(num_.nvars(), 1))
{}

RationalFunctionExpr::RationalFunctionExpr(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.nvars() != den_.nvars())
        throw DomainError("numerator and denominator have different numbers of variables");
    normalize();
}

void RationalFunctionExpr::normalize()
{
    if (den_.is_zero())
        throw DomainError("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::constant(den_.nvars(), 1);
        return;
    }
    const Exponent m = negate(min_exponent(den_));
    if (m != Exponent{0, 0, 0}) {
        den_ = shift(den_, m);
        num_ = shift(num_, m);
    }
    const Rational lead = den_.terms().back().second.terms().front().second;
    if (lead != 1) {
        const ParamPolynomial inv(Rational(1) / lead);
        den_ *= inv;
        num_ *= inv;
    }
}

std::optional<LaurentPolynomial> RationalFunctionExpr::to_laurent() const
{
    if (den_ == LaurentPolynomial::constant(den_.nvars(), 1))
        return num_;
    return exact_divide(num_, den_);
}

RationalFunctionExpr& RationalFunctionExpr::operator+=(const RationalFunctionExpr& o)
{
    if (den_ == o.den_)
        *this = RationalFunctionExpr(num_ + o.num_, den_);
    else
        *this = RationalFunctionExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunctionExpr& RationalFunctionExpr::operator-=(const RationalFunctionExpr& o)
{
    return *this += RationalFunctionExpr(-o.num_, o.den_);
}

RationalFunctionExpr& RationalFunctionExpr::operator*=(const RationalFunctionExpr& o)
{
    *this = RationalFunctionExpr(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunctionExpr& RationalFunctionExpr::operator/=(const RationalFunctionExpr& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    *this = RationalFunctionExpr(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFunctionExpr operator+(RationalFunctionExpr a, const RationalFunctionExpr& b)
{
    return a += b;
}

RationalFunctionExpr operator-(RationalFunctionExpr a, const RationalFunctionExpr& b)
{
    return a -= b;
}

RationalFunctionExpr operator*(RationalFunctionExpr a, const RationalFunctionExpr& b)
{
    return a *= b;
}

RationalFunctionExpr operator/(RationalFunctionExpr a, const RationalFunctionExpr& b)
{
    return a /= b;
}

RationalFunctionExpr pow(const RationalFunctionExpr& a, int e)
{
    const unsigned mag = static_cast<unsigned>(e < 0 ? -static_cast<long long>(e) : e);
    RationalFunctionExpr r(LaurentPolynomial::constant(a.nvars(), 1));
    if (e < 0) {
        if (a.is_zero())
            throw DomainError("negative power of zero");
        r = RationalFunctionExpr(power(a.denominator(), mag), power(a.numerator(), mag));
    } else {
        r = RationalFunctionExpr(power(a.numerator(), mag), power(a.denominator(), mag));
    }
    return r;
}

bool equivalent(const RationalFunctionExpr& a, const RationalFunctionExpr& b)
{
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

std::string to_string(const RationalFunctionExpr& r, const Symbols& symbols)
{
    if (r.denominator() == LaurentPolynomial::constant(r.nvars(), 1))
        return to_string(r.numerator(), symbols);
    return "(" + to_string(r.numerator(), symbols) + ")/(" + to_string(r.denominator(), symbols) + ")";
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& n, const LaurentPolynomial& d)
{
    if (n.nvars() != d.nvars())
        throw DomainError("Laurent polynomials have different numbers of variables");
    if (d.is_zero())
        throw DomainError("division by zero");
    if (n.is_zero())
        return LaurentPolynomial(n.nvars());

    // Parameters become extra variables; after shifting both operands to
    // polynomials, lexicographic long division decides divisibility.
    const std::size_t v = n.nvars();
    std::size_t p = 0;
    for (const auto* f : {&n, &d})
        for (const auto& [e, c] : f->terms())
            p = std::max(p, c.parameter_count());
    using Key = std::vector<std::int64_t>;
    auto flatten = [&](const LaurentPolynomial& f, const Exponent& lo) {
        std::map<Key, Rational> out;
        for (const auto& [e, c] : f.terms())
            for (const auto& [m, r] : c.terms()) {
                Key k(v + p, 0);
                for (std::size_t i = 0; i < v; ++i)
                    k[i] = static_cast<std::int64_t>(e[i]) - lo[i];
                for (std::size_t i = 0; i < m.exps.size(); ++i)
                    k[v + i] = m.exps[i];
                out.emplace(std::move(k), r);
            }
        return out;
    };
    const Exponent lo_n = min_exponent(n), lo_d = min_exponent(d);
    std::map<Key, Rational> rem = flatten(n, lo_n);
    const std::map<Key, Rational> div = flatten(d, lo_d);
    const auto& [lead_key, lead_coeff] = *div.rbegin();
    std::map<Key, Rational> quot;
    while (!rem.empty()) {
        const auto& [rk, rc] = *rem.rbegin();
        Key q(v + p);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rk[i] - lead_key[i];
            if (q[i] < 0)
                return std::nullopt;
        }
        const Rational qc = rc / lead_coeff;
        for (const auto& [dk, dc] : div) {
            Key k(v + p);
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i] = dk[i] + q[i];
            auto [it, inserted] = rem.emplace(k, Rational(0));
            it->second -= qc * dc;
            if (it->second == 0)
                rem.erase(it);
        }
        quot.emplace(std::move(q), qc);
    }
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& [k, c] : quot) {
        Exponent e{0, 0, 0};
        for (std::size_t i = 0; i < v; ++i)
            e[i] = static_cast<std::int32_t>(k[i] + lo_n[i] - lo_d[i]);
        ParamMonomial m;
        for (std::size_t i = 0; i < p; ++i)
            m.exps.push_back(static_cast<std::uint32_t>(k[v + i]));
        m.trim();
        terms.emplace_back(e, ParamPolynomial(m, c));
    }
    return LaurentPolynomial::from_terms(v, std::move(terms));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token
{
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < s.size();) {
        const char c = s[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        std::size_t j = i;
        Token::Kind kind;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            kind = Token::Number;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            kind = Token::Ident;
        } else if (std::string_view("+-*/^()=").find(c) != std::string_view::npos) {
            j = i + 1;
            kind = Token::Op;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({kind, std::string(s.substr(i, j - i)), line, col});
        col += j - i;
        i = j;
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

class Parser
{
  public:
    Parser(std::string_view text, const Symbols& symbols) : tokens_(tokenize(text)), symbols_(symbols)
    {
        if (symbols.variables.size() > 3)
            throw DomainError("at most three variables are supported");
        width_ = symbols.variables.size();
    }

    RationalFunctionExpr expression()
    {
        RationalFunctionExpr acc = term();
        while (peek_op('+') || peek_op('-')) {
            const char op = next().text[0];
            RationalFunctionExpr rhs = term();
            if (op == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    const Token& current() const { return tokens_[pos_]; }
    void expect_end() const
    {
        if (current().kind != Token::End)
            fail("unexpected '" + current().text + "'");
    }
    void expect(char op)
    {
        if (!peek_op(op))
            fail(std::string("expected '") + op + "'");
        ++pos_;
    }
    std::size_t used_variables() const { return used_; }
    std::size_t width() const { return width_; }

  private:
    [[noreturn]] void fail(const std::string& what) const
    {
        const Token& t = current();
        throw ParseError(t.kind == Token::End ? what + " at end of input" : what, t.line, t.column);
    }

    bool peek_op(char op) const
    {
        const Token& t = tokens_[pos_];
        return t.kind == Token::Op && t.text[0] == op;
    }

    const Token& next() { return tokens_[pos_++]; }

    bool starts_factor() const
    {
        const Token& t = current();
        return t.kind == Token::Number || t.kind == Token::Ident || peek_op('(') || peek_op('-');
    }

    RationalFunctionExpr term()
    {
        RationalFunctionExpr acc = factor();
        while (true) {
            if (peek_op('*')) {
                ++pos_;
                acc *= factor();
            } else if (peek_op('/')) {
                const Token& tok = current();
                ++pos_;
                RationalFunctionExpr d = factor();
                if (d.is_zero())
                    throw ParseError("division by zero", tok.line, tok.column);
                acc /= d;
            } else if (starts_factor() && !peek_op('-')) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    RationalFunctionExpr factor()
    {
        if (peek_op('-')) {
            ++pos_;
            RationalFunctionExpr f = factor();
            return RationalFunctionExpr(-f.numerator(), f.denominator());
        }
        if (peek_op('+')) {
            ++pos_;
            return factor();
        }
        RationalFunctionExpr base = primary();
        if (peek_op('^')) {
            ++pos_;
            const Token& tok = current();
            const int e = exponent();
            if (e < 0 && base.is_zero())
                throw ParseError("negative power of zero", tok.line, tok.column);
            base = pow(base, e);
        }
        return base;
    }

    int exponent()
    {
        const bool paren = peek_op('(');
        if (paren)
            ++pos_;
        int sign = 1;
        if (peek_op('-') || peek_op('+')) {
            sign = next().text[0] == '-' ? -1 : 1;
        }
        const Token& t = current();
        if (t.kind != Token::Number)
            fail("expected an integer exponent");
        if (t.text.size() > 6)
            fail("exponent too large");
        ++pos_;
        if (paren)
            expect(')');
        return sign * std::stoi(t.text);
    }

    RationalFunctionExpr primary()
    {
        const Token& t = current();
        switch (t.kind) {
        case Token::Number:
            ++pos_;
            return constant(ParamPolynomial(Rational(Integer(t.text))));
        case Token::Ident: {
            ++pos_;
            for (std::size_t i = 0; i < symbols_.variables.size(); ++i)
                if (symbols_.variables[i] == t.text) {
                    used_ = std::max(used_, i + 1);
                    return RationalFunctionExpr(LaurentPolynomial::variable(width_, i));
                }
            if (auto it = symbols_.parameter_aliases.find(t.text); it != symbols_.parameter_aliases.end())
                return constant(ParamPolynomial::parameter(it->second));
            if (t.text.size() > 1 && t.text[0] == 'q' &&
                std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                t.text.size() < 8)
                return constant(ParamPolynomial::parameter(std::stoul(t.text.substr(1))));
            throw ParseError("unknown symbol '" + t.text + "'", t.line, t.column);
        }
        case Token::Op:
            if (t.text[0] == '(') {
                ++pos_;
                RationalFunctionExpr inner = expression();
                expect(')');
                return inner;
            }
            fail("unexpected '" + t.text + "'");
        case Token::End:
            fail("unexpected end of input");
        }
        fail("unexpected token");
    }

    RationalFunctionExpr constant(const ParamPolynomial& c) const
    {
        return RationalFunctionExpr(LaurentPolynomial::constant(width_, c));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Symbols& symbols_;
    std::size_t width_ = 3;
    std::size_t used_ = 0;
};

RationalFunctionExpr resize(const RationalFunctionExpr& r, std::size_t n)
{
    return RationalFunctionExpr(with_nvars(r.numerator(), n), with_nvars(r.denominator(), n));
}

std::size_t result_width(const Parser& p, std::optional<std::size_t> nvars)
{
    const std::size_t n = nvars.value_or(std::max<std::size_t>(1, p.used_variables()));
    if (n > p.width())
        throw DomainError("more variables requested than names are available");
    if (p.used_variables() > n)
        throw DomainError("expression uses more than " + std::to_string(n) + " variables");
    return n;
}

} // namespace

RationalFunctionExpr parse_expression(std::string_view text, const Symbols& symbols, std::optional<std::size_t> nvars)
{
    Parser p(text, symbols);
    RationalFunctionExpr r = p.expression();
    p.expect_end();
    return resize(r, result_width(p, nvars));
}

LaurentPolynomial parse_laurent(std::string_view text, const Symbols& symbols, std::optional<std::size_t> nvars)
{
    RationalFunctionExpr r = parse_expression(text, symbols, nvars);
    auto f = r.to_laurent();
    if (!f)
        throw DomainError("expression is not a Laurent polynomial: " + to_string(r, symbols));
    return *f;
}

std::pair<RationalFunctionExpr, RationalFunctionExpr> parse_equation(std::string_view text, const Symbols& symbols,
                                                                     std::optional<std::size_t> nvars)
{
    Parser p(text, symbols);
    RationalFunctionExpr lhs = p.expression();
    p.expect('=');
    RationalFunctionExpr rhs = p.expression();
    p.expect_end();
    const std::size_t n = result_width(p, nvars);
    return {resize(lhs, n), resize(rhs, n)};
}

// ---------------------------------------------------------------------------
// Substitution

RationalFunctionExpr rational_substitution(const LaurentPolynomial& f, const std::vector<RationalFunctionExpr>& subs)
{
    if (subs.size() != f.nvars() || subs.empty())
        throw DomainError("one substitute per variable is required");
    const std::size_t m = subs[0].nvars();
    for (const auto& s : subs)
        if (s.nvars() != m)
            throw DomainError("substitutes have different numbers of variables");
    if (f.is_zero())
        return RationalFunctionExpr(m);

    // x_i = N_i / D_i. With P_i, M_i the largest positive and negative powers
    // of x_i in f, multiply through by prod D_i^P_i N_i^M_i.
    const std::size_t n = f.nvars();
    std::vector<int> pos(n, 0), neg(n, 0);
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < n; ++i) {
            pos[i] = std::max(pos[i], static_cast<int>(e[i]));
            neg[i] = std::max(neg[i], -static_cast<int>(e[i]));
        }
    std::vector<std::vector<LaurentPolynomial>> npow(n), dpow(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int top = pos[i] + neg[i];
        npow[i].push_back(LaurentPolynomial::constant(m, 1));
        dpow[i].push_back(LaurentPolynomial::constant(m, 1));
        for (int k = 1; k <= top; ++k) {
            npow[i].push_back(npow[i].back() * subs[i].numerator());
            dpow[i].push_back(dpow[i].back() * subs[i].denominator());
        }
    }
    LaurentPolynomial num(m);
    for (const auto& [e, c] : f.terms()) {
        LaurentPolynomial term = LaurentPolynomial::constant(m, c);
        for (std::size_t i = 0; i < n; ++i) {
            term = term * npow[i][static_cast<std::size_t>(e[i] + neg[i])];
            term = term * dpow[i][static_cast<std::size_t>(pos[i] - e[i])];
        }
        num += term;
    }
    LaurentPolynomial den = LaurentPolynomial::constant(m, 1);
    for (std::size_t i = 0; i < n; ++i)
        den = den * dpow[i][static_cast<std::size_t>(pos[i])] * npow[i][static_cast<std::size_t>(neg[i])];
    if (den.is_zero())
        throw DomainError("substitution makes the denominator vanish identically");
    return RationalFunctionExpr(std::move(num), std::move(den));
}

IdentityCheck family_identity_check(const LaurentPolynomial& f, const std::vector<RationalFunctionExpr>& subs,
                                    const RationalFunctionExpr& lhs, const RationalFunctionExpr& rhs,
                                    const LaurentPolynomial& denominator, std::size_t lambda_index)
{
    const RationalFunctionExpr r = rational_substitution(f, subs);
    const std::size_t m = r.nvars();
    if (lhs.nvars() != m || rhs.nvars() != m || denominator.nvars() != m)
        throw DomainError("target equation and substitution use different variables");
    const RationalFunctionExpr target = lhs - rhs;
    const LaurentPolynomial lambda = LaurentPolynomial::constant(m, ParamPolynomial::parameter(lambda_index));
    const LaurentPolynomial left = (r.numerator() - lambda * r.denominator()) * denominator * target.denominator();
    const LaurentPolynomial right = target.numerator() * r.denominator();
    IdentityCheck out;
    out.difference = left - right;
    out.holds = out.difference.is_zero();
    return out;
}

} // namespace lgtoric
