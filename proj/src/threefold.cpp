#include "lgtoric/threefold.hpp"

#include <algorithm>

#include "lgtoric/fixtures.hpp"
#include "lgtoric/linalg.hpp"

namespace lgtoric {

namespace {

bool part_less(const AnPolygon& a, const AnPolygon& b)
{
    if (a.n != b.n)
        return a.n > b.n;
    return a.vertices() < b.vertices();
}

} // namespace

FacetComponentReport facet_components(const LaurentPolynomial& f, const LatticePolytope& delta, std::size_t facet,
                                      const MinkowskiDecomposition& decomposition)
{
    const auto charts = facet_charts(delta);
    if (facet >= charts.size())
        throw DomainError("facet index " + std::to_string(facet) + " out of range");
    const LaurentPolynomial restriction = restrict_to_facet(f, charts[facet]);
    const LaurentPolynomial expected = decomposition_polynomial(decomposition);
    if (restriction != expected)
        throw DomainError("restriction to facet " + std::to_string(facet) + " is " + to_string(restriction) +
                          ", not the decomposition polynomial " + to_string(expected));

    FacetComponentReport report;
    report.facet = facet;
    report.decomposition = decomposition;
    for (const auto& part : decomposition.parts) {
        auto it = std::find_if(report.components.begin(), report.components.end(),
                               [&](const FacetComponent& c) { return c.part == part; });
        if (it != report.components.end()) {
            ++it->multiplicity;
            continue;
        }
        FacetComponent c;
        c.part = part;
        c.descriptor = part.n == 0 ? "line" : "(y0+y1)^" + std::to_string(part.n) + "+y2";
        c.multiplicity = 1;
        report.components.push_back(std::move(c));
    }
    std::sort(report.components.begin(), report.components.end(), [](const FacetComponent& a, const FacetComponent& b) {
        if (a.multiplicity != b.multiplicity)
            return a.multiplicity > b.multiplicity;
        return part_less(a.part, b.part);
    });
    return report;
}

FacetComponentReport facet_components(const LaurentPolynomial& f, const LatticePolytope& delta, std::size_t facet)
{
    const auto charts = facet_charts(delta);
    if (facet >= charts.size())
        throw DomainError("facet index " + std::to_string(facet) + " out of range");
    const LaurentPolynomial restriction = restrict_to_facet(f, charts[facet]);
    for (const auto& d : decompose_admissible(charts[facet].image))
        if (decomposition_polynomial(d) == restriction)
            return facet_components(f, delta, facet, d);
    throw DomainError("restriction to facet " + std::to_string(facet) + " (" + to_string(restriction) +
                      ") matches no admissible decomposition");
}

bool vertex_avoidance_check(const LaurentPolynomial& f)
{
    if (f.is_zero())
        return false;
    return vertex_avoidance_check(f, newton_polytope(f));
}

bool vertex_avoidance_check(const LaurentPolynomial& f, const LatticePolytope& delta)
{
    for (const auto& v : delta.vertices())
        if (f.coefficient(to_exponent(v)).is_zero())
            return false;
    return true;
}

bool smooth_resolution_check(const LatticePolytope& nabla)
{
    if (nabla.ambient_dim() != 3 || !nabla.full_dimensional())
        throw DomainError("expected a full-dimensional 3-polytope");
    const auto tri = triangulate_boundary(nabla);
    for (const auto& t : tri.triangles) {
        IntMatrix m;
        for (auto i : t)
            m.push_back(tri.vertices[i].coords);
        const Integer d = determinant(m);
        if (d != 1 && d != -1)
            return false;
    }
    return true;
}

InfinityFiberReport infinity_fiber_report(const LatticePolytope& delta)
{
    if (delta.ambient_dim() != 3 || !delta.full_dimensional())
        throw DomainError("expected a full-dimensional 3-polytope");
    if (!is_reflexive(delta))
        throw DomainError("polytope is not reflexive");
    const LatticePolytope nabla = dual_polytope(delta).to_lattice();
    const auto tri = boundary_triangulation(nabla);
    InfinityFiberReport r;
    r.components = tri.vertices.size();
    r.edges = tri.edges.size();
    r.triangles = tri.triangles.size();
    r.degree = normalized_volume(nabla);
    r.genus = r.degree / 2 + 1;
    r.points = tri.vertices;
    r.adjacency = tri.edges;
    r.triple_points = tri.triangles;
    const long long v = static_cast<long long>(r.components), e = static_cast<long long>(r.edges),
                    t = static_cast<long long>(r.triangles);
    if (v - e + t != 2 || 2 * e != 3 * t)
        throw InternalError("fiber over infinity is not a triangulated sphere");
    if (Integer(v) != r.degree / 2 + 2 || r.degree % 2 != 0)
        throw InternalError("component count " + std::to_string(v) + " differs from (-K)^3/2 + 2 with (-K)^3 = " +
                            r.degree.str());
    return r;
}

FamilyIdentityResult prop44_fixture(const std::string& name)
{
    const auto& fx = fixtures::family_identity(name);
    // lambda is the only parameter, so it takes index 0.
    const Symbols sym = Symbols::with_lambda(fx.variables, 0);
    const LaurentPolynomial f = parse_laurent(fx.f, {}, 3);
    std::vector<RationalFunctionExpr> subs;
    for (const auto& s : fx.substitution)
        subs.push_back(parse_expression(s, sym, 3));
    const auto [lhs, rhs] = parse_equation(fx.equation, sym, 3);
    const LaurentPolynomial e = parse_laurent(fx.denominator, sym, 3);
    const auto check = family_identity_check(f, subs, lhs, rhs, e, 0);
    return {name, check.holds, check.difference};
}

} // namespace lgtoric
