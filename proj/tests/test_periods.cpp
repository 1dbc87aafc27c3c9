#include "doctest.h"

#include <random>

#include "lgtoric/expr.hpp"
#include "lgtoric/periods.hpp"

using namespace lgtoric;

namespace {

LaurentPolynomial L(const char* s, std::size_t n = 0)
{
    return n ? parse_laurent(s, {}, n) : parse_laurent(s);
}

std::vector<Rational> values(std::initializer_list<long long> v)
{
    std::vector<Rational> out;
    for (auto x : v)
        out.emplace_back(x);
    return out;
}

// Brute-force constant term of f^j by summing over all j-tuples of terms.
Rational brute_constant_term(const LaurentPolynomial& f, unsigned j)
{
    std::vector<Rational> coeff;
    std::vector<Exponent> exps;
    for (const auto& t : f.terms()) {
        exps.push_back(t.first);
        coeff.push_back(t.second.constant_value());
    }
    Rational total = 0;
    std::vector<std::size_t> idx(j, 0);
    while (true) {
        Exponent e{0, 0, 0};
        Rational c = 1;
        for (auto i : idx) {
            for (int k = 0; k < 3; ++k)
                e[k] += exps[i][k];
            c *= coeff[i];
        }
        if (e == Exponent{0, 0, 0})
            total += c;
        std::size_t k = 0;
        while (k < j && ++idx[k] == exps.size())
            idx[k++] = 0;
        if (k == j)
            break;
    }
    return total;
}

Series specialize(const Series& s, const std::map<std::size_t, Rational>& at)
{
    Series out;
    for (const auto& c : s.coeffs)
        out.coeffs.push_back(c.evaluate(at));
    return out;
}

ToricData s7_data()
{
    ToricData d;
    d.rays = {{0, 1}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}};
    d.relations = {{1, 0, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 1, 0, 0, 1}};
    d.parameters = {ParamMonomial{{1, 1}}, ParamMonomial{{1}}, ParamMonomial{{1, 0, 1}}};
    return d;
}

} // namespace

TEST_CASE("period sequences of small polynomials")
{
    const auto a = period_sequence(L("x+1/x"), 6);
    std::vector<long long> expect{1, 0, 2, 0, 6, 0, 20};
    for (unsigned j = 0; j <= 6; ++j)
        CHECK(a[j] == ParamPolynomial(expect[j]));

    const auto b = period_sequence(L("x+y+1/(x*y)"), 6);
    std::vector<long long> expect2{1, 0, 0, 6, 0, 0, 90};
    for (unsigned j = 0; j <= 6; ++j)
        CHECK(b[j] == ParamPolynomial(expect2[j]));

    const auto c = period_sequence_pruned(L("x+y+z+1/(x*y*z)"), 8);
    CHECK(c[4] == ParamPolynomial(24));
    CHECK(c[8] == ParamPolynomial(2520));
    CHECK(c[5] == ParamPolynomial(0));
}

TEST_CASE("constant terms agree with a brute-force expansion")
{
    for (const char* s : {"x+y+1/(x*y)+2", "x+1/x+y+1/y+x*y", "x*y+y*z-z+1/(x*z)+3/y"}) {
        const auto f = L(s);
        const auto seq = period_sequence(f, 5);
        for (unsigned j = 1; j <= 5; ++j)
            CHECK(seq[j].constant_value() == brute_constant_term(f, j));
    }
}

TEST_CASE("pruning does not change the sequence")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 1 + trial % 3;
        LaurentPolynomial f(n);
        for (int t = 0; t < 6; ++t) {
            Exponent e{0, 0, 0};
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ex(rng);
            f.add_term(e, ParamPolynomial(Rational(co(rng))));
        }
        CHECK(period_sequence(f, 7) == period_sequence_pruned(f, 7));
        CHECK(period_sequence(f, 7, 1) == period_sequence(f, 7, 4));
    }
    // Parameters and a lower-dimensional Newton polytope.
    const auto g = L("q0*x*y+q1/(x*y)+q0*q1");
    CHECK(period_sequence(g, 8) == period_sequence_pruned(g, 8));
}

TEST_CASE("Givental series of projective spaces and products")
{
    ToricData p2;
    p2.rays = {{1, 0}, {0, 1}, {-1, -1}};
    p2.relations = {{1, 1, 1}};
    p2.parameters = {ParamMonomial::variable(0)};
    const auto i2 = givental_series(p2, 9);
    CHECK(i2[3] == ParamPolynomial(6) * ParamPolynomial::parameter(0));
    CHECK(i2[6] == ParamPolynomial(90) * ParamPolynomial::parameter(0, 2));
    CHECK(i2[4].is_zero());
    CHECK(check_period_condition(parse_laurent("x+y+q0/(x*y)"), i2, 9).equal);

    ToricData p1p1;
    p1p1.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    p1p1.relations = {{1, 1, 0, 0}, {0, 0, 1, 1}};
    p1p1.parameters = {ParamMonomial::variable(0), ParamMonomial::variable(1)};
    const auto q = givental_series(p1p1, 6);
    auto qa = ParamPolynomial::parameter(0), qb = ParamPolynomial::parameter(1);
    CHECK(q[2] == ParamPolynomial(2) * qa + ParamPolynomial(2) * qb);
    CHECK(q[4] == ParamPolynomial(6) * qa * qa + ParamPolynomial(24) * qa * qb + ParamPolynomial(6) * qb * qb);
    CHECK(check_period_condition(parse_laurent("x+q0/x+y+q1/y"), q, 6).equal);

    ToricData p3;
    p3.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    p3.relations = {{1, 1, 1, 1}};
    p3.parameters = {ParamMonomial{}};
    const auto i3 = givental_series(p3, 8);
    CHECK(i3[4] == ParamPolynomial(24));
    CHECK(i3[8] == ParamPolynomial(2520));
}

TEST_CASE("Givental series of the degree 7 del Pezzo surface")
{
    const auto i = givental_series(s7_data(), 7);
    auto q0 = ParamPolynomial::parameter(0), q1 = ParamPolynomial::parameter(1), q2 = ParamPolynomial::parameter(2);
    CHECK(i[1].is_zero());
    CHECK(i[2] == ParamPolynomial(2) * q0 * q1 + ParamPolynomial(2) * q0 * q2);
    const auto at_zero = specialize(i, {{0, 1}, {1, 1}, {2, 1}});
    CHECK(at_zero[2] == ParamPolynomial(4));
    CHECK(at_zero[3] == ParamPolynomial(6));
    const auto f = parse_laurent("x+y+q0/(x*y)+q0*q1/y+q2*x*y");
    const auto check = check_period_condition(f, i, 7);
    CHECK(check.equal);
    CHECK_FALSE(check_period_condition(parse_laurent("x+y+q0/(x*y)+q0*q1/y"), i, 7).equal);
}

TEST_CASE("toric data validation")
{
    auto d = s7_data();
    CHECK_NOTHROW(d.validate());
    auto bad = d;
    bad.relations[0] = {1, 0, 1, 1, 0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.relations.pop_back();
    bad.parameters.pop_back();
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.rays[0] = {0, 2};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.relations[2] = {2, 2, 0, 2, 0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("compare_series reports the first mismatch")
{
    Series a{{1, 0, 2, 0}}, b{{1, 0, 3, 0}};
    CHECK(compare_series(a, a, 3).equal);
    const auto r = compare_series(a, b, 3);
    CHECK_FALSE(r.equal);
    CHECK(r.first_mismatch == 2u);
    CHECK(compare_series(a, b, 1).equal);
    CHECK(compare_series(a, a, 5).first_mismatch == 4u);
}

TEST_CASE("recurrences")
{
    std::vector<Rational> central;
    for (unsigned k = 0; k < 20; ++k)
        central.emplace_back(binomial(2 * k, k));
    const auto r = find_recurrence(central, 3, 3);
    REQUIRE(r);
    CHECK(r->order == 1);
    CHECK(r->degree == 1);
    CHECK(r->coefficients[1] == std::vector<Integer>{1, 1});
    CHECK(r->coefficients[0] == std::vector<Integer>{-2, -4});
    CHECK(to_string(*r) == "(k+1)*c(k+1) + (-4*k-2)*c(k) = 0");

    std::vector<Rational> cubic;
    for (unsigned k = 0; k < 24; ++k)
        cubic.emplace_back(factorial(3 * k) / (factorial(k) * factorial(k) * factorial(k)));
    const auto s = find_recurrence(cubic, 2, 3);
    REQUIRE(s);
    CHECK(s->order == 1);
    CHECK(s->degree == 2);
    CHECK(s->coefficients[1] == std::vector<Integer>{1, 2, 1});
    CHECK(s->coefficients[0] == std::vector<Integer>{-6, -27, -27});
    CHECK(s->annihilates(cubic));

    // Apery-like order 2 sequence: sum_k binom(n,k)^2 binom(n+k,k).
    std::vector<Rational> apery;
    for (unsigned n = 0; n < 30; ++n) {
        Integer t = 0;
        for (unsigned k = 0; k <= n; ++k)
            t += binomial(n, k) * binomial(n, k) * binomial(n + k, k);
        apery.emplace_back(t);
    }
    const auto ap = find_recurrence(apery, 2, 2);
    REQUIRE(ap);
    CHECK(ap->order == 2);
    CHECK(ap->degree == 2);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-1000, 1000);
    std::vector<Rational> noise;
    for (int k = 0; k < 30; ++k)
        noise.emplace_back(d(rng));
    CHECK_FALSE(find_recurrence(noise, 2, 2));

    CHECK_FALSE(find_recurrence(values({1, 2, 3}), 2, 2));
    CHECK(find_recurrence(values({1, 1, 1, 1, 1, 1, 1, 1}), 1, 0));
}

TEST_CASE("numeric values require constant coefficients")
{
    Series s{{1, ParamPolynomial::parameter(0)}};
    CHECK_THROWS_AS(numeric_values(s), DomainError);
    CHECK(numeric_values(Series{{1, 2}}) == values({1, 2}));
}
