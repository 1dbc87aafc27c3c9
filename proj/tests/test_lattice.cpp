#include "doctest.h"

#include "lgtoric/lattice.hpp"

using namespace lgtoric;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::initializer_list<long long>> list)
{
    std::vector<LatticePoint> out;
    for (auto p : list)
        out.emplace_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalPoint> integral(const std::vector<LatticePoint>& v)
{
    std::vector<RationalPoint> out;
    for (const auto& p : v) {
        RationalPoint q;
        for (const auto& c : p.coords)
            q.coords.emplace_back(c);
        out.push_back(q);
    }
    return out;
}

// Every vertex of the dual solves dim facet equalities of P with value -1:
// checked directly against P's vertices.
bool is_dual_vertex_set(const LatticePolytope& p, const std::vector<LatticePoint>& cand)
{
    for (const auto& y : cand)
        for (const auto& x : p.vertices()) {
            Integer s = 0;
            for (std::size_t i = 0; i < x.dim(); ++i)
                s += x[i] * y[i];
            if (s < -1)
                return false;
        }
    return true;
}

LatticePolytope cube()
{
    std::vector<LatticePoint> v;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1})
                v.push_back({a, b, c});
    return convex_hull(v);
}

LatticePolytope octahedron()
{
    return convex_hull(pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
}

LatticePolytope p3()
{
    return convex_hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
}

} // namespace

TEST_CASE("convex hull drops interior points")
{
    auto p = convex_hull(pts({{1, 0}, {0, 1}, {-1, -1}, {0, 0}}));
    CHECK(p.vertices() == pts({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(p.facets().size() == 3);
    auto sq = convex_hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(sq.vertices().size() == 4);
    CHECK(normalized_volume(sq) == 2);
}

TEST_CASE("collinear input is dimension deficient")
{
    try {
        convex_hull(pts({{0, 0}, {1, 1}, {2, 2}}));
        FAIL("expected an error");
    } catch (const DimensionDeficiencyError& e) {
        CHECK(e.affine_rank() == 1);
    }
    auto seg = convex_hull(pts({{0, 0}, {1, 1}, {2, 2}}), HullMode::AllowDegenerate);
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices() == pts({{0, 0}, {2, 2}}));
    CHECK(integral_points(seg).size() == 3);
    auto dot_ = convex_hull(pts({{3, -2}}), HullMode::AllowDegenerate);
    CHECK(integral_points(dot_) == pts({{3, -2}}));
}

TEST_CASE("dual polytopes")
{
    auto tri = convex_hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
    auto d = dual_polytope(tri);
    CHECK(d == rational_hull(integral(pts({{2, -1}, {-1, 2}, {-1, -1}}))));
    CHECK(dual_polytope(d) == to_rational(tri));

    auto diamond = convex_hull(pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(dual_polytope(diamond) == rational_hull(integral(pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}))));

    auto dp3 = dual_polytope(p3());
    auto expect = pts({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}, {-1, -1, -1}});
    CHECK(dp3 == rational_hull(integral(expect)));
    CHECK(is_dual_vertex_set(p3(), expect));

    auto off = convex_hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK_THROWS_AS(dual_polytope(off), DomainError);
}

TEST_CASE("reflexivity")
{
    CHECK(is_reflexive(convex_hull(pts({{1, 0}, {0, 1}, {-1, -1}}))));
    CHECK_FALSE(is_reflexive(convex_hull(pts({{2, 0}, {0, 2}, {-2, -2}}))));
    CHECK(is_reflexive(convex_hull(pts({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}))));
    CHECK(is_reflexive(cube()));
    CHECK(is_reflexive(octahedron()));
    CHECK(is_reflexive(p3()));
}

TEST_CASE("integral points and volumes")
{
    auto tri = convex_hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(integral_points(tri).size() == 4);
    auto big = convex_hull(pts({{2, -1}, {-1, 2}, {-1, -1}}));
    CHECK(integral_points(big).size() == 10);
    CHECK(normalized_volume(convex_hull(pts({{0, 0}, {1, 0}, {0, 1}}))) == 1);
    CHECK(normalized_volume(big) == 9);
    auto dp3 = dual_polytope(p3()).to_lattice();
    CHECK(normalized_volume(dp3) == 64);
    CHECK(normalized_volume(cube()) == 48);
    CHECK(integral_points(dp3).size() == 35);
}

TEST_CASE("facet charts")
{
    for (const auto& fc : facet_charts(p3())) {
        if (fc.inequality.offset != -1 || fc.lattice_points.size() != 3)
            continue;
        CHECK(normalized_volume(fc.image) == 1);
        for (const auto& x : fc.lattice_points)
            CHECK(fc.chart.from_chart(fc.chart.to_chart(x)) == x);
    }
    auto simplex_facet = facet_charts(p3());
    bool found = false;
    for (const auto& fc : simplex_facet)
        if (fc.lattice_points == pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) {
            found = true;
            CHECK(fc.image.vertices() == pts({{0, 0}, {1, 0}, {0, 1}}));
        }
    CHECK(found);
    for (const auto& fc : facet_charts(octahedron()))
        CHECK(normalized_volume(fc.image) == 1);
    auto cube_charts = facet_charts(cube());
    CHECK(cube_charts.size() == 6);
    for (const auto& fc : cube_charts) {
        CHECK(fc.image.vertices() == pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
        CHECK(fc.lattice_points.size() == 9);
    }
}

TEST_CASE("boundary triangulations")
{
    auto c = boundary_triangulation(cube());
    CHECK(c.vertices.size() == 26);
    CHECK(c.edges.size() == 72);
    CHECK(c.triangles.size() == 48);
    auto d = boundary_triangulation(dual_polytope(p3()).to_lattice());
    CHECK(d.vertices.size() == 34);
    CHECK(d.edges.size() == 96);
    CHECK(d.triangles.size() == 64);
    auto o = boundary_triangulation(octahedron());
    CHECK(o.vertices.size() == 6);
    CHECK(o.edges.size() == 12);
    CHECK(o.triangles.size() == 8);
    for (const auto& t : d.triangles) {
        const auto& a = d.vertices[t[0]];
        IntMatrix m{(d.vertices[t[1]] - a).coords, (d.vertices[t[2]] - a).coords, a.coords};
        // The origin lies at lattice distance one from every facet.
        CHECK(abs_value(determinant(m)) == 1);
    }
}

TEST_CASE("reflexive polygons")
{
    auto all = enumerate_reflexive_polygons(4);
    CHECK(all.size() == 16);
    for (const auto& p : all) {
        auto dual = dual_polytope(p).to_lattice();
        CHECK(boundary_points(p).size() + boundary_points(dual).size() == 12);
        CHECK(normalized_volume(dual) == boundary_points(dual).size());
        CHECK(dual_polytope(dual) == to_rational(p));
    }
}

TEST_CASE("normal form is GL2 invariant")
{
    auto p = convex_hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
    IntMatrix u{{2, 1}, {1, 1}};
    CHECK(polygon_normal_form(transform(p, u)) == polygon_normal_form(p));
    auto q = convex_hull(pts({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    CHECK(polygon_normal_form(q) != polygon_normal_form(p));
}

TEST_CASE("unimodular maps commute with duality")
{
    auto p = p3();
    IntMatrix u{{1, 2, 0}, {0, 1, 0}, {1, 1, 1}};
    auto up = transform(p, u);
    // Dual transforms by the inverse transpose.
    IntMatrix w = transpose(unimodular_inverse(u));
    auto lhs = dual_polytope(up).to_lattice();
    auto rhs = transform(dual_polytope(p).to_lattice(), w);
    CHECK(lhs == rhs);
}

TEST_CASE("polytope text format")
{
    auto p = parse_polytope("# triangle\ndim 2\n1 0\n0 1\n-1 -1 # last\n");
    CHECK(p.vertices().size() == 3);
    CHECK(parse_polytope(format_polytope(p)) == p);
    try {
        parse_polytope("dim 2\n1 0\n0 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_polytope("dim 2\n1 0 0\n"), ParseError);
}
