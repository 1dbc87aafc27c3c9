#include "lgtoric/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lgtoric {

namespace {

using V2 = std::array<long long, 2>;
using EdgeMultiset = std::map<V2, int>;

long long det(const V2& a, const V2& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

V2 neg(const V2& a)
{
    return {-a[0], -a[1]};
}

LatticePoint point(const V2& a)
{
    return LatticePoint{a[0], a[1]};
}

std::vector<LatticePoint> normalized(std::vector<LatticePoint> pts)
{
    const LatticePoint lo = *std::min_element(pts.begin(), pts.end());
    for (auto& p : pts)
        p = p - lo;
    std::sort(pts.begin(), pts.end());
    return pts;
}

void require_planar(const LatticePolytope& p)
{
    if (p.ambient_dim() != 2)
        throw DomainError("expected a lattice polygon or segment in Z^2");
}

// Primitive edge directions of the boundary with multiplicity (lattice length).
EdgeMultiset edge_multiset(const LatticePolytope& p)
{
    EdgeMultiset m;
    auto add_edge = [&](const LatticePoint& a, const LatticePoint& b) {
        const Integer len = lattice_length(a, b);
        const LatticePoint d = b - a;
        const V2 dir{to_int64(d[0] / len), to_int64(d[1] / len)};
        m[dir] += static_cast<int>(to_int64(len));
    };
    if (p.dim() == 1) {
        add_edge(p.vertices()[0], p.vertices()[1]);
        add_edge(p.vertices()[1], p.vertices()[0]);
    } else {
        const auto cyc = p.boundary_cycle();
        for (std::size_t i = 0; i < cyc.size(); ++i)
            add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    return m;
}

struct Candidate
{
    AnPolygon polygon;
    EdgeMultiset usage;
    std::vector<LatticePoint> key; // normalized vertex list
};

AnPolygon make_segment(const V2& d)
{
    const auto pts = normalized({LatticePoint{0, 0}, point(d)});
    AnPolygon a;
    a.n = 0;
    a.v = {pts[0]};
    a.u = pts[1];
    return a;
}

AnPolygon make_triangle(unsigned n, const V2& w, const V2& apex_step)
{
    std::vector<LatticePoint> v;
    for (unsigned k = 0; k <= n; ++k)
        v.push_back(LatticePoint{static_cast<long long>(k) * w[0], static_cast<long long>(k) * w[1]});
    LatticePoint u = v.back() + point(apex_step);
    std::vector<LatticePoint> all = v;
    all.push_back(u);
    const LatticePoint lo = *std::min_element(all.begin(), all.end());
    for (auto& p : v)
        p = p - lo;
    u = u - lo;
    if (v.back() < v.front())
        std::reverse(v.begin(), v.end());
    AnPolygon a;
    a.n = n;
    a.u = u;
    a.v = std::move(v);
    return a;
}

std::vector<Candidate> candidate_parts(const EdgeMultiset& m)
{
    std::map<std::pair<unsigned, std::vector<LatticePoint>>, Candidate> out;
    auto add = [&](AnPolygon poly, EdgeMultiset usage) {
        auto key = poly.vertices();
        out.emplace(std::make_pair(poly.n, key), Candidate{std::move(poly), std::move(usage), key});
    };
    for (const auto& [d, count] : m) {
        if (m.count(neg(d)) && d < neg(d))
            add(make_segment(d), {{d, 1}, {neg(d), 1}});
        for (int n = 1; n <= count; ++n)
            for (const auto& [a, ca] : m) {
                if (det(d, a) != 1)
                    continue;
                const V2 b{-n * d[0] - a[0], -n * d[1] - a[1]};
                if (!m.count(b))
                    continue;
                add(make_triangle(static_cast<unsigned>(n), d, a), {{d, n}, {a, 1}, {b, 1}});
            }
    }
    std::vector<Candidate> parts;
    for (auto& [k, c] : out)
        parts.push_back(std::move(c));
    return parts;
}

IntMatrix point_lattice(const std::vector<LatticePoint>& pts)
{
    IntMatrix gens;
    for (std::size_t i = 1; i < pts.size(); ++i)
        gens.push_back((pts[i] - pts[0]).coords);
    return lattice_basis(gens, 2);
}

} // namespace

std::vector<LatticePoint> AnPolygon::vertices() const
{
    std::vector<LatticePoint> out{u, v.front()};
    if (n > 0)
        out.push_back(v.back());
    std::sort(out.begin(), out.end());
    return out;
}

LatticePolytope AnPolygon::polytope() const
{
    return convex_hull(vertices(), HullMode::AllowDegenerate);
}

std::optional<AnPolygon> as_An(const LatticePolytope& p)
{
    require_planar(p);
    const auto& vs = p.vertices();
    if (p.dim() == 1) {
        if (lattice_length(vs[0], vs[1]) != 1)
            return std::nullopt;
        AnPolygon a;
        a.n = 0;
        a.v = {vs[0]};
        a.u = vs[1];
        return a;
    }
    if (p.dim() != 2 || vs.size() != 3)
        return std::nullopt;
    // Long edge: the longest one, ties broken by the first in vertex order.
    std::size_t apex = 3;
    Integer longest = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const Integer len = lattice_length(vs[(i + 1) % 3], vs[(i + 2) % 3]);
        if (len > longest) {
            longest = len;
            apex = i;
        }
    }
    const LatticePoint& a = vs[(apex + 1) % 3];
    const LatticePoint& b = vs[(apex + 2) % 3];
    const LatticePoint& u = vs[apex];
    if (lattice_length(u, a) != 1 || lattice_length(u, b) != 1 || normalized_volume(p) != longest)
        return std::nullopt;
    AnPolygon out;
    out.n = static_cast<unsigned>(to_int64(longest));
    out.u = u;
    const LatticePoint& start = a < b ? a : b;
    const LatticePoint& end = a < b ? b : a;
    for (unsigned k = 0; k <= out.n; ++k) {
        LatticePoint step = end - start;
        for (auto& c : step.coords)
            c = c / longest * k;
        out.v.push_back(start + step);
    }
    return out;
}

std::optional<unsigned> classify_An(const LatticePolytope& p)
{
    if (auto a = as_An(p))
        return a->n;
    return std::nullopt;
}

LaurentPolynomial an_polynomial(const AnPolygon& p)
{
    const std::size_t nv = p.u.dim();
    LaurentPolynomial f(nv);
    f.add_term(to_exponent(p.u), 1);
    if (p.n == 0) {
        f.add_term(to_exponent(p.v.at(0)), 1);
        return f;
    }
    if (p.v.size() != p.n + 1)
        throw DomainError("A_n polygon needs n+1 points on its long edge");
    for (unsigned k = 0; k <= p.n; ++k)
        f.add_term(to_exponent(p.v[k]), ParamPolynomial(Rational(binomial(p.n, k))));
    return f;
}

std::vector<MinkowskiDecomposition> minkowski_decompositions(const LatticePolytope& p)
{
    require_planar(p);
    if (p.dim() == 0)
        return {};
    const EdgeMultiset edges = edge_multiset(p);
    const std::vector<Candidate> cands = candidate_parts(edges);
    const IntMatrix polygon_lattice = point_lattice(integral_points(p));

    std::set<std::vector<std::pair<unsigned, std::vector<LatticePoint>>>> seen;
    std::vector<MinkowskiDecomposition> out;
    EdgeMultiset remaining = edges;
    std::vector<std::size_t> chosen;
    std::function<void()> search = [&]() {
        if (remaining.empty()) {
            std::vector<std::size_t> parts = chosen;
            std::sort(parts.begin(), parts.end());
            std::vector<std::pair<unsigned, std::vector<LatticePoint>>> key;
            for (auto i : parts)
                key.emplace_back(cands[i].polygon.n, cands[i].key);
            if (!seen.insert(key).second)
                return;
            MinkowskiDecomposition d;
            d.offset = p.vertices().front();
            IntMatrix gens;
            for (auto i : parts) {
                d.parts.push_back(cands[i].polygon);
                const auto pts = integral_points(cands[i].polygon.polytope());
                for (std::size_t k = 1; k < pts.size(); ++k)
                    gens.push_back((pts[k] - pts[0]).coords);
            }
            d.polygon_lattice = polygon_lattice;
            d.parts_lattice = lattice_basis(gens, 2);
            d.admissible = d.parts_lattice == d.polygon_lattice;
            if (!(minkowski_sum(d) == p))
                throw InternalError("Minkowski parts do not sum to the polygon");
            out.push_back(std::move(d));
            return;
        }
        const V2 first = remaining.begin()->first;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const auto& use = cands[i].usage;
            if (!use.count(first))
                continue;
            bool fits = true;
            for (const auto& [dir, k] : use) {
                auto it = remaining.find(dir);
                if (it == remaining.end() || it->second < k)
                    fits = false;
            }
            if (!fits)
                continue;
            for (const auto& [dir, k] : use)
                if ((remaining[dir] -= k) == 0)
                    remaining.erase(dir);
            chosen.push_back(i);
            search();
            chosen.pop_back();
            for (const auto& [dir, k] : use)
                remaining[dir] += k;
        }
    };
    search();
    std::sort(out.begin(), out.end(), [](const MinkowskiDecomposition& a, const MinkowskiDecomposition& b) {
        auto key = [](const MinkowskiDecomposition& d) {
            std::vector<std::pair<unsigned, std::vector<LatticePoint>>> k;
            for (const auto& part : d.parts)
                k.emplace_back(part.n, part.vertices());
            return k;
        };
        return key(a) < key(b);
    });
    return out;
}

std::vector<MinkowskiDecomposition> decompose_admissible(const LatticePolytope& p)
{
    std::vector<MinkowskiDecomposition> out;
    for (auto& d : minkowski_decompositions(p))
        if (d.admissible)
            out.push_back(std::move(d));
    return out;
}

LatticePolytope minkowski_sum(const MinkowskiDecomposition& d)
{
    std::vector<LatticePoint> acc{d.offset};
    for (const auto& part : d.parts) {
        std::vector<LatticePoint> next;
        for (const auto& a : acc)
            for (const auto& b : part.vertices())
                next.push_back(a + b);
        acc = convex_hull(next, HullMode::AllowDegenerate).vertices();
    }
    return convex_hull(acc, HullMode::AllowDegenerate);
}

LaurentPolynomial decomposition_polynomial(const MinkowskiDecomposition& d)
{
    LaurentPolynomial f = LaurentPolynomial::monomial(d.offset.dim(), to_exponent(d.offset));
    for (const auto& part : d.parts)
        f = f * an_polynomial(part);
    return f;
}

MinkowskiPolytopeReport is_minkowski_polytope(const LatticePolytope& delta)
{
    if (delta.ambient_dim() != 3 || !is_reflexive(delta))
        throw DomainError("expected a reflexive 3-polytope");
    MinkowskiPolytopeReport report;
    report.facets = facet_charts(delta);
    report.minkowski = true;
    for (const auto& fc : report.facets) {
        report.decompositions.push_back(decompose_admissible(fc.image));
        if (report.decompositions.back().empty())
            report.minkowski = false;
    }
    return report;
}

MinkowskiEnumeration enumerate_minkowski_polynomials(const LatticePolytope& delta)
{
    const MinkowskiPolytopeReport report = is_minkowski_polytope(delta);
    MinkowskiEnumeration out;
    out.minkowski = report.minkowski;
    if (!report.minkowski)
        return out;

    // Candidate coefficient assignments on each facet's lattice points.
    using Assignment = std::map<Exponent, ParamPolynomial>;
    std::vector<std::vector<Assignment>> choices(report.facets.size());
    for (std::size_t i = 0; i < report.facets.size(); ++i) {
        const auto& fc = report.facets[i];
        std::set<LaurentPolynomial> distinct;
        for (const auto& d : report.decompositions[i])
            distinct.insert(decomposition_polynomial(d));
        for (const auto& g : distinct) {
            Assignment a;
            for (const auto& [e, c] : g.terms())
                a[to_exponent(fc.chart.from_chart(to_point(e, 2).coords))] = c;
            choices[i].push_back(std::move(a));
        }
    }

    std::set<LaurentPolynomial> found;
    Assignment current;
    std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (i == choices.size()) {
            std::vector<LaurentPolynomial::Term> terms(current.begin(), current.end());
            found.insert(LaurentPolynomial::from_terms(3, std::move(terms)));
            return;
        }
        for (const auto& a : choices[i]) {
            bool consistent = true;
            for (const auto& [e, c] : a) {
                auto it = current.find(e);
                if (it != current.end() && it->second != c) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent)
                continue;
            std::vector<Exponent> added;
            for (const auto& [e, c] : a)
                if (current.emplace(e, c).second)
                    added.push_back(e);
            search(i + 1);
            for (const auto& e : added)
                current.erase(e);
        }
    };
    search(0);
    out.polynomials.assign(found.begin(), found.end());
    return out;
}

} // namespace lgtoric
