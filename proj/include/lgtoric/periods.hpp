// Period sequences, toric Givental series and coefficient recurrences.
#ifndef LGTORIC_PERIODS_HPP
#define LGTORIC_PERIODS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgtoric/laurent.hpp"

namespace lgtoric {

/// Power series coefficients c_0 .. c_N in the parameter ring.
struct Series
{
    std::vector<ParamPolynomial> coeffs;

    std::size_t size() const { return coeffs.size(); }
    const ParamPolynomial& operator[](std::size_t j) const { return coeffs[j]; }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs == b.coeffs; }
};

using PeriodSequence = Series;
using ISeries = Series;

/// coeffs[j] = constant term of f^j for j = 0..N.
PeriodSequence period_sequence(const LaurentPolynomial& f, unsigned n, unsigned threads = 1);

/// Same values as period_sequence. After step j, monomials x^e with -e
/// outside (N - j) * N(f) are dropped since they cannot reach the constant
/// term within the remaining steps.
PeriodSequence period_sequence_pruned(const LaurentPolynomial& f, unsigned n, unsigned threads = 1);

/// Fan rays of a smooth toric Fano variety with a basis of the relations
/// among them. Row b of `relations` lists the intersection numbers D_i . beta_b
/// of basis curve class beta_b; `parameters[b]` is the parameter monomial
/// exp(-beta_b . D) attached to it.
struct ToricData
{
    std::vector<LatticePoint> rays;
    IntMatrix relations;
    std::vector<ParamMonomial> parameters;

    /// Throws DomainError unless the rays are primitive and the relations are
    /// an independent set of linear relations of full rank.
    void validate() const;
};

/// Sum over curve classes beta with D_i . beta >= 0 of
/// j! / prod_i (D_i . beta)! * q^beta * t^j, j = sum_i D_i . beta.
ISeries givental_series(const ToricData& data, unsigned n);

struct PeriodCheck
{
    bool equal = false;
    std::optional<unsigned> first_mismatch;
};

PeriodCheck check_period_condition(const LaurentPolynomial& f, const ISeries& series, unsigned n,
                                   unsigned threads = 1);
PeriodCheck compare_series(const Series& a, const Series& b, unsigned n);

/// sum_{i=0..order} p_i(k) c_{k+i} = 0 with p_i(k) = sum_d coefficients[i][d] k^d.
/// Coefficients are coprime integers and the top coefficient of p_order is
/// positive.
struct Recurrence
{
    unsigned order = 0;
    unsigned degree = 0;
    std::vector<std::vector<Integer>> coefficients;

    Rational residual(const std::vector<Rational>& seq, std::size_t k) const;
    bool annihilates(const std::vector<Rational>& seq) const;
};

/// Values of a series whose coefficients are constants.
std::vector<Rational> numeric_values(const Series& s);

/// Extra equations demanded beyond the unknown count before a candidate
/// recurrence is trusted.
constexpr unsigned kRecurrenceMargin = 5;

/// Smallest (order, then degree) recurrence annihilating every term.
std::optional<Recurrence> find_recurrence(const std::vector<Rational>& seq, unsigned max_order,
                                          unsigned max_degree);

/// "p_1(k)*c(k+1) + p_0(k)*c(k) = 0" style text, e.g. "(k+1)*c(k+1) + (-4*k-2)*c(k) = 0".
std::string to_string(const Recurrence& r);

} // namespace lgtoric

#endif
