// Exact geometry of lattice polytopes in dimension 2 and 3.
//
// Every polytope is built through convex_hull(), which computes the vertex
// set together with an inequality description. Polytopes that do not span
// their ambient space (points, segments, facets of 3-polytopes) are kept
// with their affine hull equations and an AffineChart onto Z^rank.
#ifndef LGTORIC_LATTICE_HPP
#define LGTORIC_LATTICE_HPP

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lgtoric/linalg.hpp"
#include "lgtoric/numeric.hpp"

namespace lgtoric {

struct LatticePoint
{
    IntVector coords;

    LatticePoint() = default;
    explicit LatticePoint(IntVector c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<long long> c);

    std::size_t dim() const { return coords.size(); }
    const Integer& operator[](std::size_t i) const { return coords[i]; }
    Integer& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const;
    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords < b.coords; }
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a);
LatticePoint operator*(const Integer& k, const LatticePoint& a);
Integer dot(const IntVector& a, const LatticePoint& b);
std::string to_string(const LatticePoint& p);

struct RationalPoint
{
    RatVector coords;

    std::size_t dim() const { return coords.size(); }
    bool is_integral() const;
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; }
};

/// normal . x >= offset
struct Halfspace
{
    IntVector normal;
    Integer offset;
};

/// normal . x == offset
struct Hyperplane
{
    IntVector normal;
    Integer offset;
};

/// Lattice-preserving affine coordinates on the affine span of a point set.
///
/// transform() is unimodular; to_chart(x) is the first rank() coordinates of
/// transform() * (x - origin()), and the remaining coordinates vanish exactly
/// on the span. Lattice points of the span correspond bijectively to Z^rank.
class AffineChart
{
  public:
    AffineChart() = default;

    /// Chart whose origin is the lexicographically smallest input point.
    static AffineChart spanning(const std::vector<LatticePoint>& points);
    static AffineChart identity(std::size_t dim);

    std::size_t ambient_dim() const { return origin_.dim(); }
    std::size_t rank() const { return rank_; }
    const LatticePoint& origin() const { return origin_; }
    const IntMatrix& transform() const { return transform_; }

    bool contains(const LatticePoint& p) const;
    IntVector to_chart(const LatticePoint& p) const;
    LatticePoint from_chart(const IntVector& y) const;

    /// The equations cutting out the span (ambient rows rank()..dim-1).
    std::vector<Hyperplane> equations() const;

  private:
    LatticePoint origin_;
    IntMatrix transform_;
    IntMatrix inverse_;
    std::size_t rank_ = 0;
};

struct Facet
{
    Halfspace inequality;
    /// Indices into LatticePolytope::vertices(); cyclic order for 3-polytopes,
    /// the two endpoints (counter-clockwise) for polygons.
    std::vector<std::size_t> vertices;
};

class DimensionDeficiencyError : public DomainError
{
  public:
    DimensionDeficiencyError(std::size_t affine_rank, std::size_t ambient);
    std::size_t affine_rank() const { return affine_rank_; }

  private:
    std::size_t affine_rank_;
};

enum class HullMode
{
    RequireFullDimensional,
    AllowDegenerate,
};

class LatticePolytope
{
  public:
    LatticePolytope() = default;

    std::size_t ambient_dim() const { return ambient_dim_; }
    /// Dimension of the affine hull.
    std::size_t dim() const { return chart_.rank(); }
    bool full_dimensional() const { return dim() == ambient_dim_; }

    /// Extreme points in lexicographic order.
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    /// Facets relative to the affine hull.
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Hyperplane>& equations() const { return equations_; }
    const AffineChart& chart() const { return chart_; }

    /// Counter-clockwise vertex cycle of a polygon (dim() == 2).
    std::vector<LatticePoint> boundary_cycle() const;

    bool contains(const LatticePoint& p) const;
    /// Interior relative to the affine hull.
    bool relative_interior_contains(const LatticePoint& p) const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

  private:
    friend LatticePolytope convex_hull(const std::vector<LatticePoint>&, HullMode);

    std::size_t ambient_dim_ = 0;
    std::vector<LatticePoint> vertices_;
    std::vector<Facet> facets_;
    std::vector<Hyperplane> equations_;
    std::vector<std::size_t> cycle_;
    AffineChart chart_;
};

LatticePolytope convex_hull(const std::vector<LatticePoint>& points,
                            HullMode mode = HullMode::RequireFullDimensional);

struct RationalHalfspace
{
    IntVector normal;
    Rational offset;
};

class RationalPolytope
{
  public:
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    const std::vector<RationalHalfspace>& facets() const { return facets_; }
    bool is_integral() const;
    /// Throws DomainError unless every vertex is integral.
    LatticePolytope to_lattice() const;

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b)
    {
        return a.vertices_ == b.vertices_;
    }

  private:
    friend RationalPolytope rational_hull(const std::vector<RationalPoint>&);

    std::size_t ambient_dim_ = 0;
    std::vector<RationalPoint> vertices_;
    std::vector<RationalHalfspace> facets_;
};

/// Full-dimensional hull of rational points.
RationalPolytope rational_hull(const std::vector<RationalPoint>& points);
RationalPolytope to_rational(const LatticePolytope& p);

/// {x : <x, y> >= -1 for all y in P}; P must contain the origin in its interior.
RationalPolytope dual_polytope(const LatticePolytope& p);
RationalPolytope dual_polytope(const RationalPolytope& p);

bool is_reflexive(const LatticePolytope& p);

/// All lattice points of P in lexicographic order (bounding-box scan).
std::vector<LatticePoint> integral_points(const LatticePolytope& p);
std::vector<LatticePoint> boundary_points(const LatticePolytope& p);

/// dim! times the Euclidean volume; 0 for lower-dimensional input.
Integer normalized_volume(const LatticePolytope& p);

/// Lattice length of the segment [a, b].
Integer lattice_length(const LatticePoint& a, const LatticePoint& b);

struct FacetChart
{
    std::size_t facet_index = 0;
    Halfspace inequality;
    std::vector<LatticePoint> lattice_points; // lexicographic
    AffineChart chart;                         // origin = lex-smallest facet lattice point
    LatticePolytope image;                     // 2D polygon in chart coordinates
};

std::vector<FacetChart> facet_charts(const LatticePolytope& p);

struct BoundaryTriangulation
{
    std::vector<LatticePoint> vertices;                  // all boundary lattice points
    std::vector<std::array<std::size_t, 2>> edges;       // sorted index pairs
    std::vector<std::array<std::size_t, 3>> triangles;   // sorted index triples
};

/// Triangulation of the boundary of a 3-polytope through all of its boundary
/// lattice points, by lexicographic placing in every facet. Each triangle is
/// empty. No reflexivity requirement.
BoundaryTriangulation triangulate_boundary(const LatticePolytope& p);

/// triangulate_boundary() for a reflexive 3-polytope, with the sphere
/// invariants (2e = 3t, v - e + t = 2) asserted.
BoundaryTriangulation boundary_triangulation(const LatticePolytope& nabla);

/// Image of P under the linear map x -> U x (U unimodular).
LatticePolytope transform(const LatticePolytope& p, const IntMatrix& u);

/// Canonical vertex list of a polygon containing the origin in its interior,
/// invariant under GL(2, Z).
std::vector<LatticePoint> polygon_normal_form(const LatticePolytope& p);

/// One representative per GL(2, Z) class of reflexive polygons whose vertices
/// lie in [-bound, bound]^2.
std::vector<LatticePolytope> enumerate_reflexive_polygons(int bound);

/// Parses the polytope text format: "dim d", then one point per line.
LatticePolytope parse_polytope(std::string_view text);
std::string format_polytope(const LatticePolytope& p);

} // namespace lgtoric

#endif
