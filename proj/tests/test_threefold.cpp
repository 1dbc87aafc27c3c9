#include "doctest.h"

#include "lgtoric/fixtures.hpp"
#include "lgtoric/threefold.hpp"

using namespace lgtoric;

namespace {

std::vector<unsigned> profile(const FacetComponentReport& r)
{
    std::vector<unsigned> out;
    for (const auto& c : r.components)
        out.push_back(c.multiplicity);
    return out;
}

// First facet whose chart image has the given number of lattice points and vertices.
std::size_t find_facet(const LatticePolytope& delta, std::size_t points, std::size_t vertices)
{
    const auto charts = facet_charts(delta);
    for (std::size_t i = 0; i < charts.size(); ++i)
        if (charts[i].lattice_points.size() == points && charts[i].image.vertices().size() == vertices)
            return i;
    FAIL("no such facet");
    return 0;
}

} // namespace

TEST_CASE("facet components")
{
    SUBCASE("A_1 triangle facet")
    {
        const auto delta = fixtures::delta_p3();
        const auto f = enumerate_minkowski_polynomials(delta).polynomials.at(0);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto r = facet_components(f, delta, i);
            CHECK(profile(r) == std::vector<unsigned>{1});
            CHECK(r.components[0].descriptor == "(y0+y1)^1+y2");
        }
    }
    SUBCASE("unit square facet")
    {
        const auto delta = fixtures::square_pyramid();
        const auto f = enumerate_minkowski_polynomials(delta).polynomials.at(0);
        const auto r = facet_components(f, delta, find_facet(delta, 4, 4));
        CHECK(profile(r) == std::vector<unsigned>{1, 1});
        CHECK(r.components[0].descriptor == "line");
    }
    SUBCASE("2 x 1 rectangle facet")
    {
        const auto delta = fixtures::triangle_prism();
        const auto f = parse_laurent("(x+y+1/(x*y))*(z+2+1/z)");
        REQUIRE(newton_polytope(f) == delta);
        const std::size_t facet = find_facet(delta, 6, 4);
        const auto r = facet_components(f, delta, facet);
        CHECK(profile(r) == std::vector<unsigned>{2, 1});
        CHECK(r.decomposition.parts.size() == 3);

        // A decomposition that does not match the restriction is rejected.
        auto wrong = r.decomposition;
        wrong.parts.pop_back();
        CHECK_THROWS_AS(facet_components(f, delta, facet, wrong), DomainError);
    }
    SUBCASE("every facet of every enumerated polynomial factors")
    {
        for (const auto& delta : {fixtures::octahedron(), fixtures::cube(), fixtures::square_pyramid()}) {
            const auto en = enumerate_minkowski_polynomials(delta);
            REQUIRE(en.minkowski);
            for (const auto& f : en.polynomials)
                for (std::size_t i = 0; i < delta.facets().size(); ++i) {
                    const auto r = facet_components(f, delta, i);
                    unsigned total = 0;
                    for (const auto& c : r.components)
                        total += c.multiplicity;
                    CHECK(total == r.decomposition.parts.size());
                }
        }
    }
}

TEST_CASE("vertex avoidance")
{
    const auto delta = fixtures::octahedron();
    const auto f = enumerate_minkowski_polynomials(delta).polynomials.at(0);
    CHECK(vertex_avoidance_check(f));
    CHECK(vertex_avoidance_check(f, delta));
    CHECK(vertex_avoidance_check(parse_laurent("x+y")));
    auto g = f - parse_laurent("x", {}, 3);
    CHECK_FALSE(vertex_avoidance_check(g, delta));
    CHECK_FALSE(vertex_avoidance_check(LaurentPolynomial(3)));
}

TEST_CASE("smooth resolution")
{
    CHECK(smooth_resolution_check(dual_polytope(fixtures::delta_p3()).to_lattice()));
    CHECK(smooth_resolution_check(fixtures::cube()));
    for (const auto& d : {fixtures::octahedron(), fixtures::square_pyramid(), fixtures::triangle_prism(),
                          fixtures::diamond_prism()}) {
        CHECK(smooth_resolution_check(d));
        CHECK(smooth_resolution_check(dual_polytope(d).to_lattice()));
    }
    const auto oct = fixtures::octahedron();
    std::vector<LatticePoint> big;
    for (const auto& v : oct.vertices())
        big.push_back(Integer(2) * v);
    CHECK_FALSE(smooth_resolution_check(convex_hull(big)));
}

TEST_CASE("fiber over infinity")
{
    const auto p3 = infinity_fiber_report(fixtures::delta_p3());
    CHECK(p3.degree == 64);
    CHECK(p3.components == 34);
    CHECK(p3.genus == 33);
    CHECK(p3.components - p3.edges + p3.triangles == 2);
    CHECK(2 * p3.edges == 3 * p3.triangles);

    const auto oct = infinity_fiber_report(fixtures::octahedron());
    CHECK(oct.degree == 48);
    CHECK(oct.components == 26);
    CHECK(oct.adjacency.size() == oct.edges);
    CHECK(oct.triple_points.size() == oct.triangles);

    for (const auto& d : {fixtures::cube(), fixtures::square_pyramid(), fixtures::triangle_prism()}) {
        const auto r = infinity_fiber_report(d);
        CHECK(Integer(r.components) == r.degree / 2 + 2);
    }
    const auto octa = fixtures::octahedron();
    std::vector<LatticePoint> big;
    for (const auto& v : octa.vertices())
        big.push_back(Integer(2) * v);
    CHECK_THROWS_AS(infinity_fiber_report(convex_hull(big)), DomainError);
}

TEST_CASE("pencil identities")
{
    for (const auto& fx : fixtures::family_identities()) {
        const auto r = prop44_fixture(fx.name);
        CAPTURE(fx.name);
        CHECK(r.holds);
        CHECK(r.difference.is_zero());
    }
    CHECK_THROWS_AS(prop44_fixture("1-1"), DomainError);
}
