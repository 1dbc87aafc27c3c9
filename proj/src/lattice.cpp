#include "lgtoric/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hull.hpp"

namespace lgtoric {

LatticePoint::LatticePoint(std::initializer_list<long long> c)
{
    coords.reserve(c.size());
    for (long long v : c)
        coords.emplace_back(v);
}

bool LatticePoint::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const Integer& v) { return v == 0; });
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b)
{
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.dim(); ++i)
        r[i] += b[i];
    return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b)
{
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.dim(); ++i)
        r[i] -= b[i];
    return r;
}

LatticePoint operator-(const LatticePoint& a)
{
    LatticePoint r = a;
    for (auto& v : r.coords)
        v = -v;
    return r;
}

LatticePoint operator*(const Integer& k, const LatticePoint& a)
{
    LatticePoint r = a;
    for (auto& v : r.coords)
        v *= k;
    return r;
}

Integer dot(const IntVector& a, const LatticePoint& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::string to_string(const LatticePoint& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i)
            s += ",";
        s += p[i].str();
    }
    return s + ")";
}

bool RationalPoint::is_integral() const
{
    return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return lgtoric::is_integral(r); });
}

// ---------------------------------------------------------------------------
// AffineChart

AffineChart AffineChart::spanning(const std::vector<LatticePoint>& points)
{
    if (points.empty())
        throw DomainError("chart of an empty point set");
    AffineChart chart;
    chart.origin_ = *std::min_element(points.begin(), points.end());
    const std::size_t n = chart.origin_.dim();
    // Difference vectors as columns; a unimodular row reduction maps their
    // span onto the first `rank` coordinate axes.
    IntMatrix diffs(n);
    for (const auto& p : points) {
        if (p.dim() != n)
            throw DomainError("points of mixed dimension");
        if (p == chart.origin_)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            diffs[i].push_back(p[i] - chart.origin_[i]);
    }
    RowEchelon re = row_echelon(diffs);
    chart.rank_ = re.rank;
    chart.transform_ = std::move(re.transform);
    chart.inverse_ = unimodular_inverse(chart.transform_);
    return chart;
}

AffineChart AffineChart::identity(std::size_t dim)
{
    AffineChart chart;
    chart.origin_ = LatticePoint(IntVector(dim, 0));
    chart.transform_ = identity_matrix(dim);
    chart.inverse_ = identity_matrix(dim);
    chart.rank_ = dim;
    return chart;
}

bool AffineChart::contains(const LatticePoint& p) const
{
    const IntVector y = mat_vec(transform_, (p - origin_).coords);
    for (std::size_t i = rank_; i < y.size(); ++i)
        if (y[i] != 0)
            return false;
    return true;
}

IntVector AffineChart::to_chart(const LatticePoint& p) const
{
    if (p.dim() != ambient_dim())
        throw DomainError("chart: dimension mismatch");
    IntVector y = mat_vec(transform_, (p - origin_).coords);
    for (std::size_t i = rank_; i < y.size(); ++i)
        if (y[i] != 0)
            throw DomainError("chart: point " + to_string(p) + " is off the chart's affine span");
    y.resize(rank_);
    return y;
}

LatticePoint AffineChart::from_chart(const IntVector& y) const
{
    if (y.size() != rank_)
        throw DomainError("chart: coordinate vector has the wrong length");
    IntVector full = y;
    full.resize(ambient_dim(), 0);
    return origin_ + LatticePoint(mat_vec(inverse_, full));
}

std::vector<Hyperplane> AffineChart::equations() const
{
    std::vector<Hyperplane> eqs;
    for (std::size_t i = rank_; i < ambient_dim(); ++i)
        eqs.push_back({transform_[i], dot(transform_[i], origin_)});
    return eqs;
}

// ---------------------------------------------------------------------------
// Hulls

DimensionDeficiencyError::DimensionDeficiencyError(std::size_t affine_rank, std::size_t ambient)
    : DomainError("point set is not full-dimensional: affine rank " + std::to_string(affine_rank) +
                  " in dimension " + std::to_string(ambient)),
      affine_rank_(affine_rank)
{}

LatticePolytope convex_hull(const std::vector<LatticePoint>& input, HullMode mode)
{
    if (input.empty())
        throw DomainError("convex hull of an empty point set");
    const std::size_t n = input[0].dim();
    if (n < 1 || n > 3)
        throw DomainError("only dimensions 1 to 3 are supported");
    std::vector<LatticePoint> pts = input;
    for (const auto& p : pts)
        if (p.dim() != n)
            throw DomainError("points of mixed dimension");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    AffineChart chart = AffineChart::spanning(pts);
    if (chart.rank() == n)
        chart = AffineChart::identity(n);
    else if (mode == HullMode::RequireFullDimensional)
        throw DimensionDeficiencyError(chart.rank(), n);
    const std::size_t r = chart.rank();

    std::vector<std::array<Integer, 3>> local;
    local.reserve(pts.size());
    for (const auto& p : pts) {
        IntVector y = chart.to_chart(p);
        std::array<Integer, 3> a{0, 0, 0};
        for (std::size_t i = 0; i < r; ++i)
            a[i] = y[i];
        local.push_back(a);
    }
    detail::HullResult hull = detail::hull_in_chart(local, r);

    LatticePolytope poly;
    poly.ambient_dim_ = n;
    poly.chart_ = chart;
    std::vector<std::size_t> order = hull.vertices;
    std::sort(order.begin(), order.end()); // pts is sorted, so this is lexicographic
    std::vector<std::size_t> remap(pts.size(), SIZE_MAX);
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        poly.vertices_.push_back(pts[order[i]]);
    }
    for (const auto& f : hull.facets) {
        Facet facet;
        facet.inequality.normal.assign(n, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                facet.inequality.normal[j] += f.normal[i] * chart.transform()[i][j];
        facet.inequality.offset = f.offset + dot(facet.inequality.normal, chart.origin());
        for (auto v : f.vertices)
            facet.vertices.push_back(remap[v]);
        poly.facets_.push_back(std::move(facet));
    }
    for (auto v : hull.cycle)
        poly.cycle_.push_back(remap[v]);
    poly.equations_ = chart.equations();
    return poly;
}

std::vector<LatticePoint> LatticePolytope::boundary_cycle() const
{
    if (dim() != 2)
        throw DomainError("boundary_cycle requires a polygon");
    std::vector<LatticePoint> out;
    for (auto i : cycle_)
        out.push_back(vertices_[i]);
    return out;
}

bool LatticePolytope::contains(const LatticePoint& p) const
{
    for (const auto& e : equations_)
        if (dot(e.normal, p) != e.offset)
            return false;
    for (const auto& f : facets_)
        if (dot(f.inequality.normal, p) < f.inequality.offset)
            return false;
    return true;
}

bool LatticePolytope::relative_interior_contains(const LatticePoint& p) const
{
    for (const auto& e : equations_)
        if (dot(e.normal, p) != e.offset)
            return false;
    for (const auto& f : facets_)
        if (dot(f.inequality.normal, p) <= f.inequality.offset)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Rational polytopes and duality

namespace {

Integer common_denominator(const std::vector<RationalPoint>& pts)
{
    Integer l = 1;
    for (const auto& p : pts)
        for (const auto& c : p.coords)
            l = lcm(l, denominator(c));
    return l;
}

} // namespace

RationalPolytope rational_hull(const std::vector<RationalPoint>& points)
{
    if (points.empty())
        throw DomainError("convex hull of an empty point set");
    const Integer scale = common_denominator(points);
    std::vector<LatticePoint> scaled;
    for (const auto& p : points) {
        LatticePoint q;
        for (const auto& c : p.coords)
            q.coords.push_back(numerator(c * scale));
        scaled.push_back(std::move(q));
    }
    const LatticePolytope hull = convex_hull(scaled);
    RationalPolytope out;
    out.ambient_dim_ = hull.ambient_dim();
    for (const auto& v : hull.vertices()) {
        RationalPoint q;
        for (const auto& c : v.coords)
            q.coords.push_back(Rational(c, scale));
        out.vertices_.push_back(std::move(q));
    }
    for (const auto& f : hull.facets())
        out.facets_.push_back({f.inequality.normal, Rational(f.inequality.offset, scale)});
    return out;
}

RationalPolytope to_rational(const LatticePolytope& p)
{
    std::vector<RationalPoint> pts;
    for (const auto& v : p.vertices()) {
        RationalPoint q;
        for (const auto& c : v.coords)
            q.coords.emplace_back(c);
        pts.push_back(std::move(q));
    }
    return rational_hull(pts);
}

bool RationalPolytope::is_integral() const
{
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RationalPoint& p) { return p.is_integral(); });
}

LatticePolytope RationalPolytope::to_lattice() const
{
    std::vector<LatticePoint> pts;
    for (const auto& v : vertices_) {
        if (!v.is_integral())
            throw DomainError("polytope has a non-integral vertex");
        LatticePoint q;
        for (const auto& c : v.coords)
            q.coords.push_back(numerator(c));
        pts.push_back(std::move(q));
    }
    return convex_hull(pts);
}

namespace {

template <class Offset>
RationalPolytope dual_from_facets(const std::vector<std::pair<IntVector, Offset>>& facets)
{
    std::vector<RationalPoint> verts;
    for (const auto& [normal, offset] : facets) {
        if (offset >= 0)
            throw DomainError("dual polytope: origin is not strictly interior");
        RationalPoint q;
        for (const auto& c : normal)
            q.coords.push_back(Rational(c) / Rational(-offset));
        verts.push_back(std::move(q));
    }
    return rational_hull(verts);
}

} // namespace

RationalPolytope dual_polytope(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        throw DimensionDeficiencyError(p.dim(), p.ambient_dim());
    std::vector<std::pair<IntVector, Integer>> facets;
    for (const auto& f : p.facets())
        facets.emplace_back(f.inequality.normal, f.inequality.offset);
    return dual_from_facets(facets);
}

RationalPolytope dual_polytope(const RationalPolytope& p)
{
    std::vector<std::pair<IntVector, Rational>> facets;
    for (const auto& f : p.facets())
        facets.emplace_back(f.normal, f.offset);
    return dual_from_facets(facets);
}

bool is_reflexive(const LatticePolytope& p)
{
    const RationalPolytope dual = dual_polytope(p);
    if (!dual.is_integral())
        return false;
    const LatticePoint zero(IntVector(p.ambient_dim(), 0));
    for (const LatticePolytope& q : {p, dual.to_lattice()})
        for (const auto& x : integral_points(q))
            if (q.relative_interior_contains(x) && !x.is_zero())
                throw InternalError("reflexive polytope with a non-zero interior lattice point " + to_string(x));
    return true;
}

// ---------------------------------------------------------------------------
// Lattice points and volume

std::vector<LatticePoint> integral_points(const LatticePolytope& p)
{
    const std::size_t n = p.ambient_dim();
    IntVector lo = p.vertices()[0].coords, hi = lo;
    for (const auto& v : p.vertices())
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<LatticePoint> out;
    LatticePoint cur(lo);
    std::function<void(std::size_t)> scan = [&](std::size_t i) {
        if (i == n) {
            if (p.contains(cur))
                out.push_back(cur);
            return;
        }
        for (Integer c = lo[i]; c <= hi[i]; ++c) {
            cur[i] = c;
            scan(i + 1);
        }
    };
    scan(0);
    return out;
}

std::vector<LatticePoint> boundary_points(const LatticePolytope& p)
{
    std::vector<LatticePoint> out;
    for (auto& x : integral_points(p))
        if (!p.relative_interior_contains(x))
            out.push_back(std::move(x));
    return out;
}

namespace {

Integer det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c)
{
    return determinant({a.coords, b.coords, c.coords});
}

} // namespace

Integer normalized_volume(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        return 0;
    const auto& v = p.vertices();
    switch (p.ambient_dim()) {
    case 1:
        return v.back()[0] - v.front()[0];
    case 2: {
        const auto cyc = p.boundary_cycle();
        Integer twice_area = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto& a = cyc[i];
            const auto& b = cyc[(i + 1) % cyc.size()];
            twice_area += a[0] * b[1] - a[1] * b[0];
        }
        return abs_value(twice_area);
    }
    default: {
        // Cone over every facet from the apex vertices()[0], fan-triangulated.
        const LatticePoint& apex = v[0];
        Integer total = 0;
        for (const auto& f : p.facets()) {
            if (dot(f.inequality.normal, apex) == f.inequality.offset)
                continue;
            const LatticePoint& c0 = v[f.vertices[0]];
            for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i)
                total += abs_value(det3(v[f.vertices[i]] - c0, v[f.vertices[i + 1]] - c0, apex - c0));
        }
        return total;
    }
    }
}

Integer lattice_length(const LatticePoint& a, const LatticePoint& b)
{
    Integer g = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        g = gcd(g, abs_value(Integer(b[i] - a[i])));
    return g;
}

std::vector<FacetChart> facet_charts(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        throw DimensionDeficiencyError(p.dim(), p.ambient_dim());
    const auto points = integral_points(p);
    std::vector<FacetChart> charts;
    for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
        const auto& ineq = p.facets()[fi].inequality;
        FacetChart fc;
        fc.facet_index = fi;
        fc.inequality = ineq;
        for (const auto& x : points)
            if (dot(ineq.normal, x) == ineq.offset)
                fc.lattice_points.push_back(x);
        fc.chart = AffineChart::spanning(fc.lattice_points);
        std::vector<LatticePoint> image;
        for (const auto& x : fc.lattice_points)
            image.emplace_back(fc.chart.to_chart(x));
        fc.image = convex_hull(image);
        charts.push_back(std::move(fc));
    }
    return charts;
}

// ---------------------------------------------------------------------------
// Boundary triangulation

namespace {

Integer orient(const IntVector& o, const IntVector& a, const IntVector& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Placing triangulation of planar lattice points (given in lexicographic
// order) using every point. Each new point lies strictly outside the hull of
// its predecessors and is coned to the strictly visible hull edges.
std::vector<std::array<std::size_t, 3>> placing_triangulation(const std::vector<IntVector>& pts)
{
    std::vector<std::array<std::size_t, 3>> tris;
    std::size_t k = 1;
    while (k < pts.size() && orient(pts[0], pts[1], pts[k]) == 0)
        ++k;
    if (k == pts.size())
        return tris;
    // pts[0..k) are collinear and consecutive along their line.
    std::vector<std::size_t> cycle;
    for (std::size_t i = 0; i + 1 < k; ++i)
        tris.push_back({i, i + 1, k});
    if (orient(pts[0], pts[k - 1], pts[k]) > 0) {
        for (std::size_t i = 0; i < k; ++i)
            cycle.push_back(i);
    } else {
        for (std::size_t i = k; i-- > 0;)
            cycle.push_back(i);
    }
    cycle.push_back(k);
    for (std::size_t p = k + 1; p < pts.size(); ++p) {
        const std::size_t m = cycle.size();
        std::vector<bool> visible(m);
        for (std::size_t i = 0; i < m; ++i)
            visible[i] = orient(pts[cycle[i]], pts[cycle[(i + 1) % m]], pts[p]) < 0;
        // Rotate so the visible edges form the run starting at index 0.
        std::size_t first = 0;
        while (!(visible[first] && !visible[(first + m - 1) % m]))
            ++first;
        std::vector<std::size_t> next;
        std::size_t i = first;
        while (visible[i % m]) {
            tris.push_back({cycle[i % m], cycle[(i + 1) % m], p});
            ++i;
        }
        // Keep cycle[i % m] .. cycle[first] (wrapping), then add p.
        for (std::size_t j = i; j <= first + m; ++j)
            next.push_back(cycle[j % m]);
        next.push_back(p);
        cycle = std::move(next);
    }
    return tris;
}

} // namespace

BoundaryTriangulation triangulate_boundary(const LatticePolytope& p)
{
    if (p.ambient_dim() != 3 || !p.full_dimensional())
        throw DomainError("boundary triangulation requires a full-dimensional 3-polytope");
    BoundaryTriangulation out;
    out.vertices = boundary_points(p);
    auto index_of = [&](const LatticePoint& x) {
        auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), x);
        if (it == out.vertices.end() || *it != x)
            throw InternalError("facet lattice point missing from the boundary");
        return static_cast<std::size_t>(it - out.vertices.begin());
    };
    std::set<std::array<std::size_t, 3>> tris;
    for (const auto& fc : facet_charts(p)) {
        std::vector<IntVector> local;
        for (const auto& x : fc.lattice_points)
            local.push_back(fc.chart.to_chart(x));
        // Chart coordinates of lexicographically sorted points are not sorted.
        std::vector<std::size_t> order(local.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return local[a] < local[b]; });
        std::vector<IntVector> sorted;
        for (auto i : order)
            sorted.push_back(local[i]);
        for (const auto& t : placing_triangulation(sorted)) {
            if (abs_value(orient(sorted[t[0]], sorted[t[1]], sorted[t[2]])) != 1)
                throw InternalError("placing triangulation produced a non-empty triangle");
            std::array<std::size_t, 3> g{index_of(fc.lattice_points[order[t[0]]]),
                                         index_of(fc.lattice_points[order[t[1]]]),
                                         index_of(fc.lattice_points[order[t[2]]])};
            std::sort(g.begin(), g.end());
            tris.insert(g);
        }
    }
    out.triangles.assign(tris.begin(), tris.end());
    std::set<std::array<std::size_t, 2>> edges;
    for (const auto& t : out.triangles) {
        edges.insert({t[0], t[1]});
        edges.insert({t[0], t[2]});
        edges.insert({t[1], t[2]});
    }
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

BoundaryTriangulation boundary_triangulation(const LatticePolytope& nabla)
{
    if (!is_reflexive(nabla))
        throw DomainError("boundary_triangulation requires a reflexive polytope");
    BoundaryTriangulation t = triangulate_boundary(nabla);
    std::map<std::array<std::size_t, 2>, int> incidence;
    for (const auto& tri : t.triangles) {
        ++incidence[{tri[0], tri[1]}];
        ++incidence[{tri[0], tri[2]}];
        ++incidence[{tri[1], tri[2]}];
    }
    for (const auto& [edge, count] : incidence)
        if (count != 2)
            throw InternalError("boundary triangulation: an edge lies in " + std::to_string(count) + " triangles");
    const long long v = static_cast<long long>(t.vertices.size());
    const long long e = static_cast<long long>(t.edges.size());
    const long long f = static_cast<long long>(t.triangles.size());
    if (2 * e != 3 * f || v - e + f != 2)
        throw InternalError("boundary triangulation is not a triangulated sphere");
    return t;
}

// ---------------------------------------------------------------------------
// Unimodular maps and polygon classification

LatticePolytope transform(const LatticePolytope& p, const IntMatrix& u)
{
    if (abs_value(determinant(u)) != 1)
        throw DomainError("transform: matrix is not unimodular");
    std::vector<LatticePoint> pts;
    for (const auto& v : p.vertices())
        pts.emplace_back(mat_vec(u, v.coords));
    return convex_hull(pts, HullMode::AllowDegenerate);
}

std::vector<LatticePoint> polygon_normal_form(const LatticePolytope& p)
{
    if (p.ambient_dim() != 2 || !p.full_dimensional())
        throw DomainError("normal form requires a polygon");
    const auto cyc = p.boundary_cycle();
    std::vector<LatticePoint> best;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        for (int dir : {1, -1}) {
            const LatticePoint& v = cyc[i];
            const LatticePoint& w = cyc[(i + cyc.size() + dir) % cyc.size()];
            const Integer g = gcd(abs_value(v[0]), abs_value(v[1]));
            if (g == 0)
                throw DomainError("normal form: the origin is a vertex");
            // Unimodular matrix sending v/g to e1.
            const IntMatrix to_e1 = row_echelon(IntMatrix{{Integer(v[0] / g)}, {Integer(v[1] / g)}}).transform;
            IntVector wi = mat_vec(to_e1, w.coords);
            if (wi[1] == 0)
                throw DomainError("normal form: the origin is not interior");
            IntMatrix u = to_e1;
            if (wi[1] < 0) {
                u[1][0] = -u[1][0];
                u[1][1] = -u[1][1];
                wi[1] = -wi[1];
            }
            Integer k = -(wi[0] / wi[1]);
            if (wi[0] + k * wi[1] < 0)
                k += 1;
            u[0][0] += k * u[1][0];
            u[0][1] += k * u[1][1];
            std::vector<LatticePoint> image;
            for (const auto& x : cyc)
                image.emplace_back(mat_vec(u, x.coords));
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best)
                best = std::move(image);
        }
    }
    return best;
}

std::vector<LatticePolytope> enumerate_reflexive_polygons(int bound)
{
    // Candidate vertices: primitive points of the box. For a polygon with the
    // origin in its interior, an edge [a, b] (counter-clockwise) lies at
    // lattice distance one from the origin exactly when det(a, b) equals its
    // lattice length; reflexivity is equivalent to this for every edge.
    std::vector<LatticePoint> cand;
    for (int x = -bound; x <= bound; ++x)
        for (int y = -bound; y <= bound; ++y)
            if (gcd(Integer(std::abs(x)), Integer(std::abs(y))) == 1)
                cand.push_back({x, y});
    auto det = [](const LatticePoint& a, const LatticePoint& b) { return Integer(a[0] * b[1] - a[1] * b[0]); };
    auto unit_edge = [&](const LatticePoint& a, const LatticePoint& b) {
        return det(a, b) > 0 && det(a, b) == lattice_length(a, b);
    };
    auto left_turn = [&](const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
        return det(b - a, c - b) > 0;
    };
    // Angle of x measured counter-clockwise from the ray through `start`.
    auto angle_less = [&](const LatticePoint& start, const LatticePoint& a, const LatticePoint& b) {
        auto half = [&](const LatticePoint& x) {
            const Integer d = det(start, x);
            if (d > 0)
                return 0;
            if (d == 0 && start[0] * x[0] + start[1] * x[1] > 0)
                return -1;
            return d == 0 ? 1 : 2;
        };
        const int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        return det(a, b) > 0;
    };

    std::map<std::vector<LatticePoint>, LatticePolytope> classes;
    std::vector<LatticePoint> path;
    std::function<void()> extend = [&]() {
        const LatticePoint start = path.front();
        const LatticePoint last = path.back();
        if (path.size() >= 3 && unit_edge(last, start) && left_turn(path[path.size() - 2], last, start) &&
            left_turn(last, start, path[1])) {
            LatticePolytope poly = convex_hull(path);
            if (poly.vertices().size() != path.size() || !is_reflexive(poly))
                throw InternalError("reflexive polygon enumeration produced an invalid candidate");
            classes.emplace(polygon_normal_form(poly), poly);
        }
        for (const auto& q : cand) {
            if (!(start < q) || !unit_edge(last, q) || !angle_less(start, last, q))
                continue;
            if (path.size() >= 2 && !left_turn(path[path.size() - 2], last, q))
                continue;
            path.push_back(q);
            extend();
            path.pop_back();
        }
    };
    for (const auto& s : cand) {
        path = {s};
        extend();
    }
    std::vector<LatticePolytope> out;
    for (auto& [nf, poly] : classes)
        out.push_back(std::move(poly));
    return out;
}

// ---------------------------------------------------------------------------
// Text format

LatticePolytope parse_polytope(std::string_view text)
{
    std::size_t line_no = 0;
    std::size_t dim = 0;
    std::vector<LatticePoint> pts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            tokens.emplace_back(line.substr(i, j - i), i + 1);
            i = j;
        }
        if (tokens.empty())
            continue;
        if (dim == 0) {
            if (tokens.size() != 2 || tokens[0].first != "dim")
                throw ParseError("expected header 'dim <d>'", line_no, tokens[0].second);
            const auto& [tok, col] = tokens[1];
            if (tok != "2" && tok != "3")
                throw ParseError("dimension must be 2 or 3", line_no, col);
            dim = static_cast<std::size_t>(tok[0] - '0');
            continue;
        }
        if (tokens.size() != dim)
            throw ParseError("expected " + std::to_string(dim) + " coordinates, found " + std::to_string(tokens.size()),
                             line_no, tokens[0].second);
        LatticePoint p;
        for (const auto& [tok, col] : tokens) {
            std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
            if (start == tok.size() ||
                !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("invalid integer '" + std::string(tok) + "'", line_no, col);
            p.coords.emplace_back(std::string(tok[0] == '+' ? tok.substr(1) : tok));
        }
        pts.push_back(std::move(p));
    }
    if (dim == 0)
        throw ParseError("missing 'dim' header", line_no, 1);
    if (pts.empty())
        throw ParseError("no points given", line_no, 1);
    return convex_hull(pts);
}

std::string format_polytope(const LatticePolytope& p)
{
    std::ostringstream os;
    os << "dim " << p.ambient_dim() << "\n";
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.dim(); ++i)
            os << (i ? " " : "") << v[i];
        os << "\n";
    }
    return os.str();
}

} // namespace lgtoric
