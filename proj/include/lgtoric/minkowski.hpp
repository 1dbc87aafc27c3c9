// A_n polygons, admissible lattice Minkowski decompositions and Minkowski
// Laurent polynomials.
#ifndef LGTORIC_MINKOWSKI_HPP
#define LGTORIC_MINKOWSKI_HPP

#include <optional>
#include <vector>

#include "lgtoric/laurent.hpp"
#include "lgtoric/lattice.hpp"

namespace lgtoric {

/// For n >= 1 a triangle with apex u and long edge v_0 .. v_n of lattice
/// length n; for n = 0 the unit segment from u to v_0.
struct AnPolygon
{
    unsigned n = 0;
    LatticePoint u;
    std::vector<LatticePoint> v;

    std::vector<LatticePoint> vertices() const;
    LatticePolytope polytope() const;
    friend bool operator==(const AnPolygon& a, const AnPolygon& b) { return a.vertices() == b.vertices(); }
};

/// n if the polygon or segment is of type A_n, otherwise nothing.
std::optional<unsigned> classify_An(const LatticePolytope& p);
/// The A_n structure of a polygon of type A_n.
std::optional<AnPolygon> as_An(const LatticePolytope& p);

/// x^u + sum_k binom(n, k) x^{v_k}.
LaurentPolynomial an_polynomial(const AnPolygon& p);

struct MinkowskiDecomposition
{
    /// Parts translated so that their lexicographically smallest point is
    /// the origin, in canonical order; repeated parts are kept.
    std::vector<AnPolygon> parts;
    /// P = offset + parts[0] + ... + parts[s-1].
    LatticePoint offset;
    bool admissible = false;
    /// Hermite bases of the lattice spanned by differences of P's lattice
    /// points and of the sum of the parts' lattices.
    IntMatrix polygon_lattice;
    IntMatrix parts_lattice;
};

/// Every decomposition of a lattice polygon or segment in Z^2 into A_n parts,
/// up to order and translation of the parts.
std::vector<MinkowskiDecomposition> minkowski_decompositions(const LatticePolytope& p);
/// The admissible ones.
std::vector<MinkowskiDecomposition> decompose_admissible(const LatticePolytope& p);

/// offset + sum of the parts, as a polytope.
LatticePolytope minkowski_sum(const MinkowskiDecomposition& d);
/// x^offset * prod f_{Q_i}.
LaurentPolynomial decomposition_polynomial(const MinkowskiDecomposition& d);

struct MinkowskiPolytopeReport
{
    bool minkowski = false;
    std::vector<FacetChart> facets;
    /// Admissible decompositions of each facet image.
    std::vector<std::vector<MinkowskiDecomposition>> decompositions;
};

/// Requires a reflexive 3-polytope.
MinkowskiPolytopeReport is_minkowski_polytope(const LatticePolytope& delta);

struct MinkowskiEnumeration
{
    bool minkowski = false;
    /// Distinct Minkowski polynomials, sorted; empty when no facet choices
    /// agree on shared lattice points.
    std::vector<LaurentPolynomial> polynomials;
};

MinkowskiEnumeration enumerate_minkowski_polynomials(const LatticePolytope& delta);

} // namespace lgtoric

#endif
