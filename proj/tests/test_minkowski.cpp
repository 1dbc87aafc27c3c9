#include "doctest.h"

#include <functional>
#include <set>

#include "lgtoric/expr.hpp"
#include "lgtoric/minkowski.hpp"

using namespace lgtoric;

namespace {

LatticePolytope polygon(std::vector<LatticePoint> pts)
{
    return convex_hull(pts, HullMode::AllowDegenerate);
}

LatticePolytope octahedron()
{
    return convex_hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

LatticePolytope p3()
{
    return convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
}

// Exhaustive oracle: all multisets of A_n-type lattice polygons (placed at
// the origin, vertices in a small box) whose Minkowski sum equals P up to
// translation.
std::size_t brute_force_count(const LatticePolytope& target, bool admissible_only)
{
    std::vector<LatticePolytope> shapes;
    std::set<std::vector<LatticePoint>> seen;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    std::vector<LatticePoint> pts{{0, 0}, {a, b}, {c, d}};
                    LatticePolytope p;
                    try {
                        p = convex_hull(pts, HullMode::AllowDegenerate);
                    } catch (const DomainError&) {
                        continue;
                    }
                    if (p.dim() == 0 || !classify_An(p))
                        continue;
                    std::vector<LatticePoint> v = p.vertices();
                    const LatticePoint lo = v.front();
                    for (auto& x : v)
                        x = x - lo;
                    if (seen.insert(v).second)
                        shapes.push_back(convex_hull(v, HullMode::AllowDegenerate));
                }
    std::vector<LatticePoint> tv = target.vertices();
    const LatticePoint tlo = tv.front();
    for (auto& x : tv)
        x = x - tlo;
    std::size_t count = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::vector<LatticePoint>)> rec = [&](std::size_t start,
                                                                          std::vector<LatticePoint> sum) {
        auto hull = convex_hull(sum, HullMode::AllowDegenerate);
        std::vector<LatticePoint> hv = hull.vertices();
        if (hv == tv) {
            if (admissible_only) {
                IntMatrix gens, pgens;
                for (auto i : chosen) {
                    auto pts = integral_points(shapes[i]);
                    for (std::size_t k = 1; k < pts.size(); ++k)
                        gens.push_back((pts[k] - pts[0]).coords);
                }
                auto tp = integral_points(target);
                for (std::size_t k = 1; k < tp.size(); ++k)
                    pgens.push_back((tp[k] - tp[0]).coords);
                if (lattice_basis(gens, 2) == lattice_basis(pgens, 2))
                    ++count;
            } else {
                ++count;
            }
            return;
        }
        for (std::size_t i = start; i < shapes.size(); ++i) {
            std::vector<LatticePoint> next;
            for (const auto& a : hv)
                for (const auto& b : shapes[i].vertices())
                    next.push_back(a + b);
            auto h = convex_hull(next, HullMode::AllowDegenerate);
            // A summand can only grow the bounding box; prune beyond the target.
            bool fits = true;
            for (const auto& x : h.vertices())
                if (!target.contains(x + tlo))
                    fits = false;
            if (!fits)
                continue;
            chosen.push_back(i);
            rec(i, h.vertices());
            chosen.pop_back();
        }
    };
    rec(0, {LatticePoint{0, 0}});
    return count;
}

} // namespace

TEST_CASE("A_n classification")
{
    CHECK(classify_An(polygon({{0, 0}, {1, 0}})) == 0u);
    CHECK(classify_An(polygon({{0, 1}, {0, 0}, {2, 0}})) == 2u);
    CHECK(classify_An(polygon({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == std::nullopt);
    CHECK(classify_An(polygon({{0, 0}, {2, 0}})) == std::nullopt);
    CHECK(classify_An(polygon({{0, 0}, {2, 0}, {0, 2}})) == std::nullopt);
    CHECK(classify_An(polygon({{0, 0}, {1, 0}, {0, 1}})) == 1u);
}

TEST_CASE("A_n polynomials")
{
    AnPolygon a0{0, {0, 0}, {{1, 0}}};
    CHECK(an_polynomial(a0) == parse_laurent("1+x", {}, 2));
    AnPolygon a2{2, {0, 1}, {{0, 0}, {1, 0}, {2, 0}}};
    CHECK(an_polynomial(a2) == parse_laurent("y+1+2*x+x^2"));
    AnPolygon a1{1, {0, 1}, {{0, 0}, {1, 0}}};
    CHECK(an_polynomial(a1) == parse_laurent("y+1+x"));
    for (unsigned n = 1; n <= 5; ++n) {
        auto p = as_An(polygon({{0, 1}, {0, 0}, {static_cast<long long>(n), 0}}));
        REQUIRE(p);
        auto edge = convex_hull({{0, 0}, {static_cast<long long>(n), 0}}, HullMode::AllowDegenerate);
        auto r = restrict_to_face(an_polynomial(*p), edge, edge.chart());
        CHECK(r == power(parse_laurent("1+x"), n));
    }
}

TEST_CASE("decompositions of small polygons")
{
    auto square = polygon({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto ds = decompose_admissible(square);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].parts.size() == 2);
    CHECK(ds[0].parts[0].n == 0);
    CHECK(ds[0].parts[1].n == 0);
    CHECK(decomposition_polynomial(ds[0]) == parse_laurent("(1+x)*(1+y)"));

    auto a2 = polygon({{0, 1}, {0, 0}, {2, 0}});
    auto da = decompose_admissible(a2);
    REQUIRE(da.size() == 1);
    CHECK(da[0].parts.size() == 1);
    CHECK(da[0].parts[0].n == 2);

    auto rect = polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    auto dr = decompose_admissible(rect);
    REQUIRE(dr.size() == 1);
    CHECK(dr[0].parts.size() == 3);
    CHECK(dr[0].parts[1] == dr[0].parts[2]);
    CHECK_FALSE(dr[0].parts[0] == dr[0].parts[1]);
    CHECK(decomposition_polynomial(dr[0]) == parse_laurent("(1+x)^2*(1+y)"));

    auto diamond = polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(decompose_admissible(diamond).empty());
    auto all = minkowski_decompositions(diamond);
    REQUIRE(all.size() == 1);
    CHECK_FALSE(all[0].admissible);

    auto seg = polygon({{0, 0}, {3, 0}});
    auto dseg = decompose_admissible(seg);
    REQUIRE(dseg.size() == 1);
    CHECK(dseg[0].parts.size() == 3);
}

TEST_CASE("decompositions agree with the exhaustive oracle")
{
    std::vector<LatticePolytope> polys{
        polygon({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),        polygon({{0, 1}, {0, 0}, {2, 0}}),
        polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}}),        polygon({{0, 1}, {0, 0}, {3, 0}}),
        polygon({{0, 0}, {2, 0}, {0, 2}}),                polygon({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}}),
        polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}),        polygon({{0, 0}, {1, 0}, {0, 1}}),
        polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),      polygon({{0, 0}, {3, 0}, {0, 1}, {1, 1}}),
    };
    for (const auto& p : polys) {
        CHECK(minkowski_decompositions(p).size() == brute_force_count(p, false));
        CHECK(decompose_admissible(p).size() == brute_force_count(p, true));
    }
}

TEST_CASE("A_n polygons have only the trivial decomposition for small n")
{
    for (long long n = 1; n <= 3; ++n) {
        auto p = polygon({{0, 1}, {0, 0}, {n, 0}});
        auto ds = decompose_admissible(p);
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].parts.size() == 1);
    }
}

TEST_CASE("Minkowski polytopes")
{
    CHECK(is_minkowski_polytope(p3()).minkowski);
    CHECK(is_minkowski_polytope(octahedron()).minkowski);
    auto prism = convex_hull({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, 0, -1}, {0, 1, -1}, {-1, 0, -1},
                              {0, -1, -1}});
    REQUIRE(is_reflexive(prism));
    CHECK_FALSE(is_minkowski_polytope(prism).minkowski);
    CHECK_FALSE(enumerate_minkowski_polynomials(prism).minkowski);
    CHECK_THROWS_AS(is_minkowski_polytope(convex_hull({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {-2, -2, -2}})),
                    DomainError);
}

TEST_CASE("Minkowski polynomial enumeration")
{
    auto e = enumerate_minkowski_polynomials(p3());
    REQUIRE(e.polynomials.size() == 1);
    CHECK(e.polynomials[0] == parse_laurent("x+y+z+1/(x*y*z)"));
    auto o = enumerate_minkowski_polynomials(octahedron());
    REQUIRE(o.polynomials.size() == 1);
    CHECK(o.polynomials[0] == parse_laurent("x+y+z+1/x+1/y+1/z"));

    auto pyramid = convex_hull({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {-1, -1, -2}});
    auto pe = enumerate_minkowski_polynomials(pyramid);
    REQUIRE(pe.polynomials.size() == 1);
    const auto& f = pe.polynomials[0];
    CHECK(f == parse_laurent("z*(1+x)*(1+y)+x^-1*y^-1*z^-2"));
    for (const auto& g : pe.polynomials) {
        CHECK(constant_term(g).is_zero());
        for (const auto& v : pyramid.vertices())
            CHECK(g.coefficient(to_exponent(v)) == ParamPolynomial(1));
    }
    auto cube = convex_hull({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1},
                             {-1, -1, -1}});
    auto ce = enumerate_minkowski_polynomials(cube);
    REQUIRE(ce.polynomials.size() == 1);
    CHECK(ce.polynomials[0] == parse_laurent("(x+2+1/x)*(y+2+1/y)*(z+2+1/z)-8"));
}
