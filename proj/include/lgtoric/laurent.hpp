// Sparse Laurent polynomials in 1 to 3 variables with coefficients in the
// parameter ring.
#ifndef LGTORIC_LAURENT_HPP
#define LGTORIC_LAURENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lgtoric/lattice.hpp"
#include "lgtoric/param.hpp"

namespace lgtoric {

/// Exponent vector; entries past nvars are zero.
using Exponent = std::array<std::int32_t, 3>;

LatticePoint to_point(const Exponent& e, std::size_t nvars);
Exponent to_exponent(const LatticePoint& p);

class LaurentPolynomial
{
  public:
    using Term = std::pair<Exponent, ParamPolynomial>;

    explicit LaurentPolynomial(std::size_t nvars = 0);

    static LaurentPolynomial constant(std::size_t nvars, const ParamPolynomial& c);
    static LaurentPolynomial monomial(std::size_t nvars, const Exponent& e, const ParamPolynomial& c = 1);
    static LaurentPolynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    /// Terms sorted by exponent (ascending lexicographic), no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    ParamPolynomial coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const ParamPolynomial& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const ParamPolynomial& c);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }
    /// Fixed total order, for deduplication.
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Builds from unsorted terms, merging duplicates.
    static LaurentPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const ParamPolynomial& c, LaurentPolynomial a);

/// Exact product. With threads > 1 the terms of `a` are split into chunks
/// multiplied concurrently; the result does not depend on the split.
LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b, unsigned threads = 1);
LaurentPolynomial power(const LaurentPolynomial& f, unsigned j, unsigned threads = 1);

ParamPolynomial constant_term(const LaurentPolynomial& f);

/// Hull of the support; a lower-dimensional support is returned as a
/// degenerate polytope (check full_dimensional()).
LatticePolytope newton_polytope(const LaurentPolynomial& f);

/// Monomials of f supported on `face`, written in the coordinates of `chart`.
LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const LatticePolytope& face, const AffineChart& chart);
/// Restriction to a facet of the Newton polytope, in the facet chart.
LaurentPolynomial restrict_to_facet(const LaurentPolynomial& f, const FacetChart& facet);

/// Scaling of one variable: x_i -> factor * x_i.
struct VariableScale
{
    Rational rational = 1;
    ParamMonomial parameters;
};

/// x^e -> (prod scale_i^{e_i}) x^{U e}. U must be unimodular. A negative
/// power of a parameter scale is rejected, since the coefficient ring has no
/// parameter inverses.
LaurentPolynomial monomial_substitution(const LaurentPolynomial& f, const IntMatrix& u,
                                        const std::vector<VariableScale>& scale = {});

/// Substitutes rational values for parameters.
LaurentPolynomial evaluate_parameters(const LaurentPolynomial& f, const std::map<std::size_t, Rational>& values);
/// Substitutes parameter polynomials for parameters.
LaurentPolynomial substitute_parameters(const LaurentPolynomial& f,
                                        const std::map<std::size_t, ParamPolynomial>& values);

/// Canonical text: terms in decreasing lexicographic exponent order, e.g.
/// "x+y+q0*x^-1*y^-1".
std::string to_string(const LaurentPolynomial& f, const Symbols& symbols = {});

} // namespace lgtoric

#endif
