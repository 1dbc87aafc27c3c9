// Inductive toric Landau-Ginzburg models of del Pezzo surfaces with divisor
// parameters, markings, base points on the boundary and the S7 mutation.
#ifndef LGTORIC_DELPEZZO_HPP
#define LGTORIC_DELPEZZO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgtoric/expr.hpp"
#include "lgtoric/lattice.hpp"
#include "lgtoric/laurent.hpp"

namespace lgtoric {

enum class BaseKind
{
    P2,
    QuadricDeg1,
    QuadricDeg2,
    F2,
};

/// "P2", "quadric-deg-1", "quadric-deg-2", "F2".
BaseKind parse_base_kind(std::string_view name);
std::string to_string(BaseKind kind);
/// Number of divisor parameters a base needs.
std::size_t parameter_count(BaseKind kind);

struct MarkedPolygon
{
    LatticePolytope polygon;
    /// Every boundary lattice point with its marking, clockwise, starting at
    /// the lexicographically smallest vertex.
    std::vector<std::pair<LatticePoint, ParamPolynomial>> markings;

    const ParamPolynomial* marking(const LatticePoint& k) const;
};

/// Boundary lattice points of a polygon, clockwise from the lexicographically
/// smallest vertex.
std::vector<LatticePoint> clockwise_boundary(const LatticePolytope& polygon);

/// Markings read off the coefficients of f on its reflexive Newton polygon.
MarkedPolygon marked_polygon(const LaurentPolynomial& f);

struct LGModelPair
{
    LaurentPolynomial f_toric;
    LaurentPolynomial f_surface;
    MarkedPolygon marked;
};

/// params are parameter indices: {a0} for P2, {a, b} for the quadric
/// degenerations, {alpha, beta} for F2.
LGModelPair base_lg(BaseKind kind, const std::vector<std::size_t>& params);

/// Adds the boundary point k with parameter q_param.
LGModelPair blowup_step(const LGModelPair& pair, const LatticePoint& k, std::size_t param);

/// Expands every edge K_0 .. K_r into the coefficients of
/// m_0 (1 + m_1/m_0 s) ... (1 + m_r/m_{r-1} s).
LaurentPolynomial markings_to_surface(const MarkedPolygon& marked);

struct EdgeBasePoints
{
    LatticePoint from;
    LatticePoint to;
    /// Coefficients of the edge restriction, s^0 at `from`.
    std::vector<Rational> restriction;
    /// One entry per distinct root in the torus.
    std::vector<unsigned> multiplicities;
};

struct BasePointReport
{
    std::vector<EdgeBasePoints> edges;
    unsigned total = 0;
};

/// Multiplicities of the distinct complex roots of a polynomial over Q,
/// coefficients from s^0 up, via square-free decomposition.
std::vector<unsigned> root_multiplicities(const std::vector<Rational>& coeffs);

/// Requires numeric coefficients and N(f) = delta a reflexive polygon with
/// non-zero vertex coefficients.
BasePointReport base_points_on_boundary(const LaurentPolynomial& f, const LatticePolytope& delta);

struct ConstructionScript
{
    BaseKind base = BaseKind::P2;
    std::vector<std::size_t> base_params;
    std::vector<std::pair<LatticePoint, std::size_t>> blowups;
};

/// Lines "base <kind> <param>..." then "blowup <x> <y> <param>"; parameters
/// are written q<i> or as bare indices, '#' starts a comment.
ConstructionScript parse_construction_script(std::string_view text);
LGModelPair run_construction(const ConstructionScript& script);

struct MutationCheck
{
    bool laurent = false;
    bool equal = false;
    bool periods_equal = false;
    bool holds() const { return laurent && equal && periods_equal; }
    std::optional<LaurentPolynomial> image;
    /// image - target when both are Laurent.
    LaurentPolynomial difference;
};

/// Applies subs to f and compares with target exactly and through the period
/// sequences up to n.
MutationCheck mutation_check(const LaurentPolynomial& f, const std::vector<RationalFunctionExpr>& subs,
                             const LaurentPolynomial& target, unsigned n);

/// S7 models with parameters q0, q1, q2.
LaurentPolynomial s7_surface_model();
LaurentPolynomial s7_mutated_model();
std::vector<RationalFunctionExpr> s7_mutation();

/// x -> x, y -> y / (1 + q2 x) sends s7_surface_model() to s7_mutated_model().
/// With `values`, q0..q2 are specialized first.
MutationCheck mutation_check_s7(const std::optional<std::vector<Rational>>& values = std::nullopt, unsigned n = 8);

} // namespace lgtoric

#endif
