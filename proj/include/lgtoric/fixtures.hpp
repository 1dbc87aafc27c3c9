// Built-in polytopes, toric data and identity fixtures.
#ifndef LGTORIC_FIXTURES_HPP
#define LGTORIC_FIXTURES_HPP

#include <string>
#include <vector>

#include "lgtoric/lattice.hpp"
#include "lgtoric/periods.hpp"

namespace lgtoric::fixtures {

/// conv(e1, e2, e3, -e1-e2-e3), the fan polytope of P^3.
LatticePolytope delta_p3();
/// conv(+-e_i).
LatticePolytope octahedron();
/// conv({-1, 1}^3).
LatticePolytope cube();
/// Reflexive pyramid with a unit-square facet at height 1.
LatticePolytope square_pyramid();
/// Triangle x [-1, 1]; its side facets are 2 x 1 rectangles.
LatticePolytope triangle_prism();
/// Diamond x [-1, 1]; not a Minkowski polytope.
LatticePolytope diamond_prism();

/// Toric data for P^2, P^1 x P^1, P^3 and the degree 7 del Pezzo surface.
/// Curve-class parameters are q0, q1, ... in the order listed.
ToricData toric_p2();
ToricData toric_p1xp1();
ToricData toric_p3();
/// Rays (0,1), (-1,-1), (0,-1), (1,0), (1,1); classes k, l, m with
/// parameters q0*q1, q0, q0*q2.
ToricData toric_s7();

/// A named Laurent polynomial, a rational change of variables and the
/// target equation of the resulting pencil.
struct FamilyIdentity
{
    std::string name;
    std::string f;
    /// Names of the new variables; "lambda" is the pencil parameter.
    std::vector<std::string> variables;
    /// Expressions for x, y, z in the new variables.
    std::vector<std::string> substitution;
    std::string equation;
    /// E with (f o subs - lambda) E = lhs - rhs.
    std::string denominator;
};

const std::vector<FamilyIdentity>& family_identities();
/// Throws DomainError for an unknown name.
const FamilyIdentity& family_identity(const std::string& name);

} // namespace lgtoric::fixtures

#endif
