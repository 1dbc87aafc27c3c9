// Quotients of Laurent polynomials, the text parser, and rational
// substitutions used to verify birational identities.
#ifndef LGTORIC_EXPR_HPP
#define LGTORIC_EXPR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgtoric/laurent.hpp"

namespace lgtoric {

/// numerator / denominator, normalized so that the denominator is a
/// polynomial with no monomial factor whose leading coefficient starts with
/// rational coefficient 1. No gcd cancellation is attempted.
class RationalFunctionExpr
{
  public:
    explicit RationalFunctionExpr(std::size_t nvars = 0);
    RationalFunctionExpr(LaurentPolynomial f);
    /// Throws DomainError when the denominator is zero.
    RationalFunctionExpr(LaurentPolynomial numerator, LaurentPolynomial denominator);

    std::size_t nvars() const { return num_.nvars(); }
    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// The quotient as a Laurent polynomial when the denominator divides the
    /// numerator exactly.
    std::optional<LaurentPolynomial> to_laurent() const;

    RationalFunctionExpr& operator+=(const RationalFunctionExpr& o);
    RationalFunctionExpr& operator-=(const RationalFunctionExpr& o);
    RationalFunctionExpr& operator*=(const RationalFunctionExpr& o);
    RationalFunctionExpr& operator/=(const RationalFunctionExpr& o);

  private:
    void normalize();

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

RationalFunctionExpr operator+(RationalFunctionExpr a, const RationalFunctionExpr& b);
RationalFunctionExpr operator-(RationalFunctionExpr a, const RationalFunctionExpr& b);
RationalFunctionExpr operator*(RationalFunctionExpr a, const RationalFunctionExpr& b);
RationalFunctionExpr operator/(RationalFunctionExpr a, const RationalFunctionExpr& b);
RationalFunctionExpr pow(const RationalFunctionExpr& a, int e);

/// Cross-multiplied equality.
bool equivalent(const RationalFunctionExpr& a, const RationalFunctionExpr& b);

/// n / d when d divides n in the ring of Laurent polynomials over Q[q].
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& n, const LaurentPolynomial& d);

std::string to_string(const RationalFunctionExpr& r, const Symbols& symbols = {});

/// Parses + - * / ^ (integer exponents) and parentheses over rational
/// numbers, the variables named in `symbols`, q<i> and parameter aliases.
/// Juxtaposition multiplies. Without `nvars` the variable count is the
/// highest variable used (at least one).
RationalFunctionExpr parse_expression(std::string_view text, const Symbols& symbols = {},
                                      std::optional<std::size_t> nvars = std::nullopt);
/// As parse_expression, requiring a Laurent polynomial.
LaurentPolynomial parse_laurent(std::string_view text, const Symbols& symbols = {},
                                std::optional<std::size_t> nvars = std::nullopt);
/// "lhs = rhs"
std::pair<RationalFunctionExpr, RationalFunctionExpr> parse_equation(std::string_view text,
                                                                     const Symbols& symbols = {},
                                                                     std::optional<std::size_t> nvars = std::nullopt);

/// f(x_1, ..., x_n) with x_i replaced by subs[i]. All substitutes share one
/// variable count, which becomes that of the result.
RationalFunctionExpr rational_substitution(const LaurentPolynomial& f, const std::vector<RationalFunctionExpr>& subs);

struct IdentityCheck
{
    bool holds = false;
    /// (N - lambda D) E - (lhs - rhs) D for f o subs = N / D; zero iff holds.
    LaurentPolynomial difference;
};

/// Verifies (f o subs - lambda) * denominator == lhs - rhs, cross-multiplied
/// by the denominator of f o subs. lambda is the parameter `lambda_index`.
IdentityCheck family_identity_check(const LaurentPolynomial& f, const std::vector<RationalFunctionExpr>& subs,
                                    const RationalFunctionExpr& lhs, const RationalFunctionExpr& rhs,
                                    const LaurentPolynomial& denominator, std::size_t lambda_index);

} // namespace lgtoric

#endif
