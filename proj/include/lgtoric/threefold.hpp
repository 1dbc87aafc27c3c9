// Combinatorics of toric Landau-Ginzburg models of Fano threefolds: facet
// components of the base locus, vertex avoidance, smoothness of the crepant
// resolution, the fiber over infinity and the pencil identities.
#ifndef LGTORIC_THREEFOLD_HPP
#define LGTORIC_THREEFOLD_HPP

#include <array>
#include <string>
#include <vector>

#include "lgtoric/expr.hpp"
#include "lgtoric/minkowski.hpp"

namespace lgtoric {

struct FacetComponent
{
    /// The part of the decomposition cutting out this component.
    AnPolygon part;
    /// "line" for A_0 parts, "(y0+y1)^n+y2" for A_n parts.
    std::string descriptor;
    unsigned multiplicity = 0;
};

struct FacetComponentReport
{
    std::size_t facet = 0;
    MinkowskiDecomposition decomposition;
    /// By decreasing multiplicity, then by part.
    std::vector<FacetComponent> components;
};

/// f restricted to the facet must equal the decomposition polynomial in the
/// facet chart; throws DomainError otherwise.
FacetComponentReport facet_components(const LaurentPolynomial& f, const LatticePolytope& delta, std::size_t facet,
                                      const MinkowskiDecomposition& decomposition);
/// Uses the first admissible decomposition the restriction matches.
FacetComponentReport facet_components(const LaurentPolynomial& f, const LatticePolytope& delta, std::size_t facet);

/// Every vertex of N(f) has a non-zero coefficient.
bool vertex_avoidance_check(const LaurentPolynomial& f);
/// Every vertex of delta has a non-zero coefficient in f.
bool vertex_avoidance_check(const LaurentPolynomial& f, const LatticePolytope& delta);

/// Every triangle of the boundary triangulation spans a unimodular cone.
bool smooth_resolution_check(const LatticePolytope& nabla);

struct InfinityFiberReport
{
    std::size_t components = 0; // v
    std::size_t edges = 0;      // e
    std::size_t triangles = 0;  // t
    /// (-K)^3 = normalized volume of the dual polytope.
    Integer degree = 0;
    /// (-K)^3 / 2 + 1
    Integer genus = 0;
    /// Boundary lattice points of the dual polytope, one per component.
    std::vector<LatticePoint> points;
    std::vector<std::array<std::size_t, 2>> adjacency;
    std::vector<std::array<std::size_t, 3>> triple_points;
};

/// Requires a reflexive 3-polytope; asserts v - e + t = 2, 2e = 3t and
/// v = (-K)^3 / 2 + 2.
InfinityFiberReport infinity_fiber_report(const LatticePolytope& delta);

struct FamilyIdentityResult
{
    std::string name;
    bool holds = false;
    LaurentPolynomial difference;
};

/// Verifies one of the named pencil identities "2-1", "2-2", "2-3", "9-1",
/// "10-1" with symbolic lambda.
FamilyIdentityResult prop44_fixture(const std::string& name);

} // namespace lgtoric

#endif
