// Polynomials in the formal parameters q_0, q_1, ... with rational
// coefficients. A parameter q_i stands for exp(-a_i) of a divisor class.
#ifndef LGTORIC_PARAM_HPP
#define LGTORIC_PARAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgtoric/numeric.hpp"

namespace lgtoric {

/// Naming of variables and parameters in the text format. Parameters print
/// as q<i> unless an alias is registered for their index.
struct Symbols
{
    std::vector<std::string> variables{"x", "y", "z"};
    std::map<std::string, std::size_t> parameter_aliases;

    std::string parameter_name(std::size_t index) const;
    /// Symbols with the pencil parameter registered as "lambda" at `index`.
    static Symbols with_lambda(std::vector<std::string> variables, std::size_t index);
};

/// Exponent vector over parameter indices; trailing zeros are trimmed, so
/// the constant monomial has an empty vector.
struct ParamMonomial
{
    std::vector<std::uint32_t> exps;

    static ParamMonomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t index) const { return index < exps.size() ? exps[index] : 0; }
    std::uint64_t degree() const;
    bool is_one() const { return exps.empty(); }
    void trim();

    friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const ParamMonomial& a, const ParamMonomial& b) { return a.exps != b.exps; }
};

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
bool divides(const ParamMonomial& a, const ParamMonomial& b);
/// b / a; requires divides(a, b).
ParamMonomial quotient(const ParamMonomial& b, const ParamMonomial& a);

/// Canonical term order: lower total degree first, then lexicographically
/// larger exponent vectors first (so q0*q1 precedes q0*q2).
bool term_order_less(const ParamMonomial& a, const ParamMonomial& b);

class ParamPolynomial
{
  public:
    using Term = std::pair<ParamMonomial, Rational>;

    ParamPolynomial() = default;
    ParamPolynomial(const Rational& c);
    ParamPolynomial(long long c) : ParamPolynomial(Rational(c)) {}
    ParamPolynomial(const ParamMonomial& m, const Rational& c = 1);

    static ParamPolynomial parameter(std::size_t index, std::uint32_t power = 1);

    /// Terms in canonical order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for zero); throws otherwise.
    Rational constant_value() const;
    /// Coefficient of the constant monomial.
    Rational constant_coefficient() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t parameter_count() const;

    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const Rational& c);
    /// this += a * b
    void add_mul(const ParamPolynomial& a, const ParamPolynomial& b);
    void add_term(const ParamMonomial& m, const Rational& c);

    /// Substitutes rational values for the listed parameters.
    ParamPolynomial evaluate(const std::map<std::size_t, Rational>& values) const;
    /// Substitutes polynomials for the listed parameters.
    ParamPolynomial substitute(const std::map<std::size_t, ParamPolynomial>& values) const;

    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPolynomial& a, const ParamPolynomial& b) { return !(a == b); }
    /// Arbitrary but fixed total order, for use as a map key.
    friend bool operator<(const ParamPolynomial& a, const ParamPolynomial& b);

  private:
    std::vector<Term> terms_;
};

ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b);
ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b);
ParamPolynomial operator-(const ParamPolynomial& a);
ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
ParamPolynomial pow(const ParamPolynomial& a, unsigned e);

/// Canonical text such as "q0*q1+q0*q2" or "-1/2*q3^2".
std::string to_string(const ParamPolynomial& p, const Symbols& symbols = {});

} // namespace lgtoric

#endif
