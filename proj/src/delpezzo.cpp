#include "lgtoric/delpezzo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lgtoric/periods.hpp"

namespace lgtoric {

BaseKind parse_base_kind(std::string_view name)
{
    if (name == "P2")
        return BaseKind::P2;
    if (name == "quadric-deg-1")
        return BaseKind::QuadricDeg1;
    if (name == "quadric-deg-2")
        return BaseKind::QuadricDeg2;
    if (name == "F2")
        return BaseKind::F2;
    throw DomainError("unknown base kind '" + std::string(name) + "' (expected P2, quadric-deg-1, quadric-deg-2 or F2)");
}

std::string to_string(BaseKind kind)
{
    switch (kind) {
    case BaseKind::P2: return "P2";
    case BaseKind::QuadricDeg1: return "quadric-deg-1";
    case BaseKind::QuadricDeg2: return "quadric-deg-2";
    case BaseKind::F2: return "F2";
    }
    throw InternalError("bad BaseKind");
}

std::size_t parameter_count(BaseKind kind) { return kind == BaseKind::P2 ? 1 : 2; }

const ParamPolynomial* MarkedPolygon::marking(const LatticePoint& k) const
{
    for (const auto& [p, m] : markings)
        if (p == k)
            return &m;
    return nullptr;
}

std::vector<LatticePoint> clockwise_boundary(const LatticePolytope& polygon)
{
    if (polygon.ambient_dim() != 2 || !polygon.full_dimensional())
        throw DomainError("expected a lattice polygon in Z^2");
    std::vector<LatticePoint> cycle = polygon.boundary_cycle();
    std::reverse(cycle.begin(), cycle.end());
    const auto start = std::find(cycle.begin(), cycle.end(), polygon.vertices().front());
    std::rotate(cycle.begin(), start, cycle.end());
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        const Integer len = lattice_length(a, b);
        const LatticePoint step{{(b[0] - a[0]) / len, (b[1] - a[1]) / len}};
        LatticePoint p = a;
        for (Integer t = 0; t < len; ++t) {
            out.push_back(p);
            p = p + step;
        }
    }
    return out;
}

namespace {

void require_reflexive_polygon(const LatticePolytope& delta)
{
    if (delta.ambient_dim() != 2 || !delta.full_dimensional())
        throw DomainError("expected a lattice polygon in Z^2");
    if (!delta.contains(LatticePoint{0, 0}) || !delta.relative_interior_contains(LatticePoint{0, 0}) ||
        !is_reflexive(delta))
        throw DomainError("polygon is not reflexive");
}

MarkedPolygon mark(const LaurentPolynomial& f, const LatticePolytope& delta)
{
    MarkedPolygon m;
    m.polygon = delta;
    for (const auto& k : clockwise_boundary(delta))
        m.markings.emplace_back(k, f.coefficient(to_exponent(k)));
    return m;
}

// A Laurent monomial in the parameters: c * q^e with e of either sign.
struct SignedMonomial
{
    Rational c;
    std::vector<long long> e;
};

SignedMonomial as_signed(const ParamPolynomial& p, const LatticePoint& at)
{
    if (!p.is_monomial())
        throw DomainError("marking at " + to_string(at) + " is not a single parameter monomial: " + to_string(p));
    const auto& [mono, c] = p.terms().front();
    SignedMonomial s{c, {}};
    for (auto x : mono.exps)
        s.e.push_back(x);
    return s;
}

using SignedPolynomial = std::map<std::vector<long long>, Rational>;

std::vector<long long> trimmed(std::vector<long long> e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
    return e;
}

std::vector<long long> add_exp(const std::vector<long long>& a, const std::vector<long long>& b, long long sign)
{
    std::vector<long long> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += sign * b[i];
    return trimmed(std::move(r));
}

ParamPolynomial to_param(const SignedPolynomial& p, const LatticePoint& at)
{
    ParamPolynomial out;
    for (const auto& [e, c] : p) {
        if (c == 0)
            continue;
        ParamMonomial m;
        for (auto x : e) {
            if (x < 0)
                throw DomainError("edge expansion at " + to_string(at) + " has a negative parameter exponent");
            m.exps.push_back(static_cast<std::uint32_t>(x));
        }
        m.trim();
        out.add_term(m, c);
    }
    return out;
}

// ---- univariate polynomials over Q, coefficients from s^0 up

using UPoly = std::vector<Rational>;

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

UPoly derivative(const UPoly& p)
{
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Rational(static_cast<long long>(i)));
    trim(d);
    return d;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b)
{
    if (b.empty())
        throw InternalError("polynomial division by zero");
    trim(a);
    UPoly q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly monic(UPoly p)
{
    trim(p);
    if (!p.empty()) {
        const Rational lead = p.back();
        for (auto& c : p)
            c /= lead;
    }
    return p;
}

UPoly upoly_gcd(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

UPoly exact_quotient(const UPoly& a, const UPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.empty())
        throw InternalError("inexact univariate division");
    return q;
}

UPoly subtract(UPoly a, const UPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

MarkedPolygon marked_polygon(const LaurentPolynomial& f)
{
    if (f.nvars() != 2)
        throw DomainError("expected a Laurent polynomial in two variables");
    const LatticePolytope delta = newton_polytope(f);
    require_reflexive_polygon(delta);
    return mark(f, delta);
}

LaurentPolynomial markings_to_surface(const MarkedPolygon& marked)
{
    const auto& pts = marked.markings;
    if (pts.empty())
        throw DomainError("empty marked polygon");
    std::vector<std::size_t> vertex_pos;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (std::find(marked.polygon.vertices().begin(), marked.polygon.vertices().end(), pts[i].first) !=
            marked.polygon.vertices().end())
            vertex_pos.push_back(i);
    if (vertex_pos.size() != marked.polygon.vertices().size())
        throw DomainError("markings do not cover the polygon's vertices");

    std::map<Exponent, ParamPolynomial> coeffs;
    for (std::size_t v = 0; v < vertex_pos.size(); ++v) {
        const std::size_t begin = vertex_pos[v];
        const std::size_t end = v + 1 < vertex_pos.size() ? vertex_pos[v + 1] : pts.size() + vertex_pos[0];
        std::vector<SignedMonomial> m;
        std::vector<LatticePoint> where;
        for (std::size_t i = begin; i <= end; ++i) {
            const auto& [k, c] = pts[i % pts.size()];
            m.push_back(as_signed(c, k));
            where.push_back(k);
        }
        // Coefficients in s of prod_i (1 + m_i / m_{i-1} s).
        std::vector<SignedPolynomial> poly{{{std::vector<long long>{}, Rational(1)}}};
        for (std::size_t i = 1; i < m.size(); ++i) {
            const Rational rc = m[i].c / m[i - 1].c;
            const auto re = add_exp(m[i].e, m[i - 1].e, -1);
            std::vector<SignedPolynomial> next(poly.size() + 1);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                for (const auto& [e, c] : poly[d]) {
                    next[d][e] += c;
                    next[d + 1][add_exp(e, re, 1)] += c * rc;
                }
            }
            poly = std::move(next);
        }
        for (std::size_t i = 0; i < where.size(); ++i) {
            SignedPolynomial scaled;
            for (const auto& [e, c] : poly[i])
                scaled[add_exp(e, m[0].e, 1)] += c * m[0].c;
            // Vertices are shared by two edges and get the same value from both.
            coeffs[to_exponent(where[i])] = to_param(scaled, where[i]);
        }
    }
    std::vector<LaurentPolynomial::Term> terms(coeffs.begin(), coeffs.end());
    return LaurentPolynomial::from_terms(2, std::move(terms));
}

LGModelPair base_lg(BaseKind kind, const std::vector<std::size_t>& params)
{
    if (params.size() != parameter_count(kind))
        throw DomainError(to_string(kind) + " takes " + std::to_string(parameter_count(kind)) + " parameters");
    auto q = [&](std::size_t i) { return ParamPolynomial::parameter(params[i]); };
    LaurentPolynomial f(2);
    switch (kind) {
    case BaseKind::P2:
        f.add_term({1, 0, 0}, 1);
        f.add_term({0, 1, 0}, 1);
        f.add_term({-1, -1, 0}, q(0));
        break;
    case BaseKind::QuadricDeg1:
        f.add_term({1, 0, 0}, 1);
        f.add_term({-1, 0, 0}, q(0));
        f.add_term({0, 1, 0}, 1);
        f.add_term({0, -1, 0}, q(1));
        break;
    case BaseKind::QuadricDeg2:
        f.add_term({0, 1, 0}, 1);
        f.add_term({-1, -1, 0}, q(0));
        f.add_term({0, -1, 0}, q(0));
        f.add_term({1, -1, 0}, q(1));
        break;
    case BaseKind::F2:
        f.add_term({0, 1, 0}, 1);
        f.add_term({-1, -1, 0}, q(1));
        f.add_term({0, -1, 0}, q(0));
        f.add_term({1, -1, 0}, 1);
        break;
    }
    LGModelPair pair;
    pair.f_toric = f;
    pair.marked = marked_polygon(f);
    pair.f_surface = kind == BaseKind::F2 ? f : markings_to_surface(pair.marked);
    return pair;
}

LGModelPair blowup_step(const LGModelPair& pair, const LatticePoint& k, std::size_t param)
{
    const LatticePolytope& old = pair.marked.polygon;
    if (k.dim() != 2)
        throw DomainError("blow-up point must lie in Z^2");
    if (old.contains(k))
        throw DomainError("point " + to_string(k) + " already lies in the polygon");
    std::vector<LatticePoint> pts = old.vertices();
    pts.push_back(k);
    const LatticePolytope delta = convex_hull(pts);
    if (!is_reflexive(delta))
        throw DomainError("adding " + to_string(k) + " gives a non-reflexive polygon");
    const auto bnd = clockwise_boundary(delta);
    const auto it = std::find(bnd.begin(), bnd.end(), k);
    if (it == bnd.end())
        throw InternalError("new point missing from the boundary");
    for (const auto& p : bnd)
        if (p != k && !pair.marked.marking(p))
            throw DomainError("new boundary point " + to_string(p) + " carries no marking");
    const std::size_t i = static_cast<std::size_t>(it - bnd.begin());
    const LatticePoint& left = bnd[(i + bnd.size() - 1) % bnd.size()];
    const LatticePoint& right = bnd[(i + 1) % bnd.size()];
    const ParamPolynomial c = *pair.marked.marking(left) * *pair.marked.marking(right) *
                              ParamPolynomial::parameter(param);

    LGModelPair out;
    out.f_toric = pair.f_toric;
    out.f_toric.add_term(to_exponent(k), c);
    out.marked = mark(out.f_toric, delta);
    out.f_surface = markings_to_surface(out.marked);
    return out;
}

std::vector<unsigned> root_multiplicities(const std::vector<Rational>& coeffs)
{
    UPoly f = coeffs;
    trim(f);
    if (f.empty())
        throw DomainError("zero polynomial has no finite root structure");
    std::vector<unsigned> out;
    if (f.size() == 1)
        return out;
    // Yun's square-free decomposition.
    const UPoly fp = derivative(f);
    const UPoly a0 = upoly_gcd(f, fp);
    UPoly b = exact_quotient(f, a0);
    UPoly c = exact_quotient(fp, a0);
    UPoly d = subtract(c, derivative(b));
    for (unsigned i = 1; b.size() > 1; ++i) {
        const UPoly a = upoly_gcd(b, d);
        for (std::size_t r = 1; r < a.size(); ++r)
            out.push_back(i);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = subtract(c, derivative(b));
    }
    return out;
}

BasePointReport base_points_on_boundary(const LaurentPolynomial& f, const LatticePolytope& delta)
{
    require_reflexive_polygon(delta);
    if (f.nvars() != 2)
        throw DomainError("expected a Laurent polynomial in two variables");
    if (!(newton_polytope(f) == delta))
        throw DomainError("Newton polygon of f differs from the given polygon");
    const auto bnd = clockwise_boundary(delta);
    const auto& verts = delta.vertices();
    BasePointReport report;
    std::vector<std::size_t> vpos;
    for (std::size_t i = 0; i < bnd.size(); ++i)
        if (std::find(verts.begin(), verts.end(), bnd[i]) != verts.end())
            vpos.push_back(i);
    for (std::size_t v = 0; v < vpos.size(); ++v) {
        const std::size_t begin = vpos[v];
        const std::size_t end = v + 1 < vpos.size() ? vpos[v + 1] : bnd.size() + vpos[0];
        EdgeBasePoints edge;
        edge.from = bnd[begin];
        edge.to = bnd[end % bnd.size()];
        for (std::size_t i = begin; i <= end; ++i) {
            const auto& k = bnd[i % bnd.size()];
            const ParamPolynomial c = f.coefficient(to_exponent(k));
            if (!c.is_constant())
                throw DomainError("coefficient at " + to_string(k) +
                                  " involves parameters; substitute numeric values first");
            edge.restriction.push_back(c.constant_value());
        }
        for (const auto* end_coeff : {&edge.restriction.front(), &edge.restriction.back()})
            if (*end_coeff == 0)
                throw DomainError("zero coefficient at a vertex of the Newton polygon; the coefficient at "
                                  "every vertex must be non-zero");
        edge.multiplicities = root_multiplicities(edge.restriction);
        for (auto m : edge.multiplicities)
            report.total += m;
        report.edges.push_back(std::move(edge));
    }
    return report;
}

ConstructionScript parse_construction_script(std::string_view text)
{
    ConstructionScript script;
    bool have_base = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        ++line_no;
        pos = eol + 1;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::vector<std::pair<std::string, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t s = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tokens.emplace_back(line.substr(s, i - s), s + 1);
        }
        if (tokens.empty())
            continue;
        auto param = [&](const std::pair<std::string, std::size_t>& tok) {
            std::string s = tok.first;
            if (!s.empty() && s[0] == 'q')
                s.erase(0, 1);
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw ParseError("expected a parameter like q3, got '" + tok.first + "'", line_no, tok.second);
            return static_cast<std::size_t>(std::stoul(s));
        };
        auto integer = [&](const std::pair<std::string, std::size_t>& tok) {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(tok.first, &used);
                if (used == tok.first.size())
                    return v;
            } catch (const std::exception&) {
            }
            throw ParseError("expected an integer, got '" + tok.first + "'", line_no, tok.second);
        };
        if (tokens[0].first == "base") {
            if (have_base)
                throw ParseError("duplicate base line", line_no, tokens[0].second);
            if (tokens.size() < 2)
                throw ParseError("base kind missing", line_no, line.size() + 1);
            try {
                script.base = parse_base_kind(tokens[1].first);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line_no, tokens[1].second);
            }
            for (std::size_t t = 2; t < tokens.size(); ++t)
                script.base_params.push_back(param(tokens[t]));
            if (script.base_params.empty())
                for (std::size_t i = 0; i < parameter_count(script.base); ++i)
                    script.base_params.push_back(i);
            if (script.base_params.size() != parameter_count(script.base))
                throw ParseError(to_string(script.base) + " takes " + std::to_string(parameter_count(script.base)) +
                                     " parameters",
                                 line_no, tokens[0].second);
            have_base = true;
        } else if (tokens[0].first == "blowup") {
            if (!have_base)
                throw ParseError("blowup before base", line_no, tokens[0].second);
            if (tokens.size() != 4)
                throw ParseError("expected 'blowup <x> <y> <param>'", line_no, tokens[0].second);
            script.blowups.emplace_back(LatticePoint{integer(tokens[1]), integer(tokens[2])}, param(tokens[3]));
        } else {
            throw ParseError("unknown directive '" + tokens[0].first + "'", line_no, tokens[0].second);
        }
    }
    if (!have_base)
        throw ParseError("missing base line", line_no, 1);
    return script;
}

LGModelPair run_construction(const ConstructionScript& script)
{
    LGModelPair pair = base_lg(script.base, script.base_params);
    for (const auto& [k, a] : script.blowups)
        pair = blowup_step(pair, k, a);
    return pair;
}

MutationCheck mutation_check(const LaurentPolynomial& f, const std::vector<RationalFunctionExpr>& subs,
                             const LaurentPolynomial& target, unsigned n)
{
    MutationCheck out;
    out.image = rational_substitution(f, subs).to_laurent();
    out.laurent = out.image.has_value();
    if (out.laurent) {
        out.difference = *out.image - target;
        out.equal = out.difference.is_zero();
    }
    out.periods_equal = period_sequence_pruned(f, n) == period_sequence_pruned(target, n);
    return out;
}

LaurentPolynomial s7_surface_model() { return parse_laurent("x+y+q0/(x*y)+q0*q1/y+q2*x*y", {}, 2); }

LaurentPolynomial s7_mutated_model()
{
    return parse_laurent("x+y+q0/(x*y)+(q0*q1+q0*q2)/y+q0*q1*q2*x/y", {}, 2);
}

std::vector<RationalFunctionExpr> s7_mutation()
{
    return {parse_expression("x", {}, 2), parse_expression("y/(1+q2*x)", {}, 2)};
}

MutationCheck mutation_check_s7(const std::optional<std::vector<Rational>>& values, unsigned n)
{
    auto f = s7_surface_model();
    auto target = s7_mutated_model();
    auto subs = s7_mutation();
    if (values) {
        if (values->size() != 3)
            throw DomainError("S7 takes three parameter values");
        std::map<std::size_t, Rational> at;
        for (std::size_t i = 0; i < 3; ++i)
            at[i] = (*values)[i];
        f = evaluate_parameters(f, at);
        target = evaluate_parameters(target, at);
        for (auto& s : subs)
            s = RationalFunctionExpr(evaluate_parameters(s.numerator(), at), evaluate_parameters(s.denominator(), at));
    }
    return mutation_check(f, subs, target, n);
}

} // namespace lgtoric
