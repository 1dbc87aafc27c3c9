#include "doctest.h"

#include <random>

#include "lgtoric/expr.hpp"

using namespace lgtoric;

namespace {

LaurentPolynomial L(const char* s, std::size_t n = 0)
{
    return n ? parse_laurent(s, {}, n) : parse_laurent(s);
}

LaurentPolynomial random_poly(std::mt19937& rng, std::size_t nvars, int terms, int bound)
{
    std::uniform_int_distribution<int> ex(-bound, bound), co(-3, 3);
    LaurentPolynomial f(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e{0, 0, 0};
        for (std::size_t i = 0; i < nvars; ++i)
            e[i] = ex(rng);
        f.add_term(e, ParamPolynomial(Rational(co(rng))));
    }
    return f;
}

} // namespace

TEST_CASE("parameter polynomials")
{
    auto q0 = ParamPolynomial::parameter(0), q1 = ParamPolynomial::parameter(1), q2 = ParamPolynomial::parameter(2);
    auto p = q0 * q2 + q0 * q1;
    CHECK(to_string(p) == "q0*q1+q0*q2");
    CHECK(to_string(ParamPolynomial(Rational(-1, 2)) * q1 * q1 + 1) == "1-1/2*q1^2");
    CHECK((p - p).is_zero());
    CHECK(pow(q0 + 1, 2) == q0 * q0 + ParamPolynomial(2) * q0 + 1);
    CHECK(p.evaluate({{0, 2}}) == ParamPolynomial(2) * q1 + ParamPolynomial(2) * q2);
}

TEST_CASE("products and constant terms")
{
    CHECK(L("(1+x)*(1+y)") == L("1+x+y+x*y"));
    CHECK(power(L("x+x^-1"), 2) == L("x^2+2+x^-2"));
    CHECK((L("x+y") * LaurentPolynomial(2)).is_zero());
    CHECK(constant_term(L("x+y+x^-1*y^-1")).is_zero());
    CHECK(constant_term(power(L("x+y+x^-1*y^-1"), 3)) == ParamPolynomial(6));
    CHECK(constant_term(L("q1+x")) == ParamPolynomial::parameter(1));
}

TEST_CASE("multithreaded products agree")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 5; ++i) {
        auto f = random_poly(rng, 3, 40, 3), g = random_poly(rng, 3, 40, 3);
        CHECK(multiply(f, g, 4) == multiply(f, g, 1));
    }
}

TEST_CASE("ring axioms on random operands")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto a = random_poly(rng, 2, 5, 2), b = random_poly(rng, 2, 5, 2), c = random_poly(rng, 2, 5, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("text format round trip")
{
    Symbols s;
    auto f = L("x+y+q0/(x*y)+(q0*q1+q0*q2)/y");
    CHECK(to_string(f) == "x+y+(q0*q1+q0*q2)*y^-1+q0*x^-1*y^-1");
    CHECK(parse_laurent(to_string(f)) == f);
    CHECK(to_string(L("-x^2*y^-1+3/4")) == "-x^2*y^-1+3/4");
    CHECK(L("2x y") == L("2*x*y"));
    CHECK(L("x^(-2)") == L("1/x^2"));
    try {
        parse_laurent("x+\n  y*w");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_laurent("x+"), ParseError);
    CHECK_THROWS_AS(parse_laurent("(x+1"), ParseError);
    CHECK_THROWS_AS(parse_laurent("1/(1+x)"), DomainError);
}

TEST_CASE("newton polytopes")
{
    auto p = newton_polytope(L("x+y+x^-1*y^-1"));
    CHECK(p.vertices().size() == 3);
    CHECK(p.full_dimensional());
    auto c = newton_polytope(L("1"));
    CHECK_FALSE(c.full_dimensional());
    auto p3 = newton_polytope(L("x+y+z+1/(x*y*z)"));
    CHECK(normalized_volume(p3) == 4);
    CHECK_THROWS_AS(newton_polytope(LaurentPolynomial(2)), DomainError);
}

TEST_CASE("newton polytope of a product is the Minkowski sum")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ex(-2, 2), co(1, 4);
    for (int i = 0; i < 10; ++i) {
        LaurentPolynomial f(2), g(2);
        for (int t = 0; t < 4; ++t) {
            f.add_term({ex(rng), ex(rng), 0}, ParamPolynomial(co(rng)));
            g.add_term({ex(rng), ex(rng), 0}, ParamPolynomial(co(rng)));
        }
        std::vector<LatticePoint> sums;
        const auto nf = newton_polytope(f), ng = newton_polytope(g);
        for (const auto& a : nf.vertices())
            for (const auto& b : ng.vertices())
                sums.push_back(a + b);
        CHECK(newton_polytope(f * g) == convex_hull(sums, HullMode::AllowDegenerate));
    }
}

TEST_CASE("face restriction")
{
    auto f = L("x+y+z+1/(x*y*z)");
    auto p = newton_polytope(f);
    bool found = false;
    for (const auto& fc : facet_charts(p))
        if (fc.lattice_points.size() == 3 && fc.lattice_points[0] == LatticePoint{0, 0, 1}) {
            found = true;
            // facet conv{e1,e2,e3}, chart origin e3
            auto r = restrict_to_facet(f, fc);
            CHECK(r.nvars() == 2);
            CHECK(r.size() == 3);
            CHECK(constant_term(r) == ParamPolynomial(1));
            CHECK(normalized_volume(newton_polytope(r)) == 1);
        }
    CHECK(found);
    auto vertex = convex_hull({LatticePoint{1, 0, 0}}, HullMode::AllowDegenerate);
    auto r = restrict_to_face(f, vertex, vertex.chart());
    CHECK(r.size() == 1);
    CHECK(r.nvars() == 0);
}

TEST_CASE("restriction commutes with products on a shared face")
{
    auto f = L("x+y+1/(x*y)"), g = L("x+2*y+3/(x*y)");
    auto face = convex_hull({LatticePoint{1, 0}, LatticePoint{0, 1}}, HullMode::AllowDegenerate);
    auto face2 = convex_hull({LatticePoint{2, 0}, LatticePoint{0, 2}}, HullMode::AllowDegenerate);
    auto rf = restrict_to_face(f, face, face.chart());
    auto rg = restrict_to_face(g, face, face.chart());
    auto rfg = restrict_to_face(f * g, face2, face2.chart());
    CHECK(rfg == rf * rg);
}

TEST_CASE("monomial substitutions")
{
    auto f = L("x+y+x^-1*y^-1");
    CHECK(monomial_substitution(f, identity_matrix(2)) == f);
    CHECK(monomial_substitution(L("x+x^-1"), IntMatrix{{-1}}) == L("x+x^-1"));
    CHECK(monomial_substitution(L("x+y"), IntMatrix{{1, 0}, {1, 1}}) == L("x*y+y"));
    CHECK_THROWS_AS(monomial_substitution(f, IntMatrix{{2, 0}, {0, 1}}), DomainError);
    std::mt19937 rng(5);
    IntMatrix u{{1, 1, 0}, {0, 1, 0}, {2, 1, 1}};
    for (int i = 0; i < 5; ++i) {
        auto g = random_poly(rng, 3, 6, 2);
        auto h = monomial_substitution(g, u);
        auto pg = LaurentPolynomial::constant(3, 1), ph = pg;
        for (int j = 1; j <= 8; ++j) {
            pg = pg * g;
            ph = ph * h;
            CHECK(constant_term(pg) == constant_term(ph));
        }
    }
    std::vector<VariableScale> scale(2);
    scale[0].parameters = ParamMonomial::variable(0);
    CHECK(monomial_substitution(L("x^2+y"), identity_matrix(2), scale) == L("q0^2*x^2+y"));
    CHECK_THROWS_AS(monomial_substitution(L("x^-1"), identity_matrix(1), {scale[0]}), DomainError);
}

TEST_CASE("rational substitutions")
{
    auto r = rational_substitution(L("x*y"), {parse_expression("x", {}, 2), parse_expression("y/(1+q2*x)", {}, 2)});
    CHECK(equivalent(r, parse_expression("x*y/(1+q2*x)")));
    CHECK_FALSE(r.to_laurent());
    auto z = rational_substitution(L("z^-1", 3), {parse_expression("x", {}, 1), parse_expression("x", {}, 1),
                                                  parse_expression("1/x-1", {}, 1)});
    CHECK(equivalent(z, parse_expression("x/(1-x)")));
    CHECK_THROWS_AS(rational_substitution(L("x^-1"), {parse_expression("0", {}, 1)}), DomainError);
}

TEST_CASE("exact division")
{
    auto n = L("(1+q0*x)^3*(y+x)", 2);
    auto q = exact_divide(n, L("1+q0*x", 2));
    REQUIRE(q);
    CHECK(*q == L("(1+q0*x)^2*(y+x)", 2));
    CHECK_FALSE(exact_divide(L("1+x", 2), L("1+y")));
    CHECK(exact_divide(L("x^-2+x^-1"), L("1+x")) == L("x^-2"));
}

TEST_CASE("identity check against f minus lambda")
{
    auto symbols = Symbols::with_lambda({"x", "y"}, 5);
    auto f = L("x+y+1/(x*y)");
    auto [lhs, rhs] = parse_equation("x+y+1/(x*y)-lambda = 0", symbols, 2);
    auto id = family_identity_check(f, {parse_expression("x", {}, 2), parse_expression("y", {}, 2)}, lhs, rhs,
                                    L("1", 2), 5);
    CHECK(id.holds);
    auto [l2, r2] = parse_equation("x+y-lambda = 0", symbols, 2);
    auto bad = family_identity_check(f, {parse_expression("x", {}, 2), parse_expression("y", {}, 2)}, l2, r2,
                                     L("1", 2), 5);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.difference.is_zero());
}
