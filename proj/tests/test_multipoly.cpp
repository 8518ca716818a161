#include <doctest.h>

#include "formsym/parse.hpp"
#include "formsym/ratfunc.hpp"

#include <random>

using namespace formsym;

namespace {

std::mt19937_64 rng(0xabcdef01);

GaussianRational random_coeff() {
    long long re = (long long)(rng() % 9) - 4;
    long long im = (long long)(rng() % 9) - 4;
    return GaussianRational(Rational(re), Rational(im));
}

MultiPoly random_poly(const std::vector<std::string>& vars, uint32_t maxdeg, int terms) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars.size());
        for (auto& e : m) e = (uint32_t)(rng() % (maxdeg + 1));
        p += MultiPoly::monomial(vars, m, random_coeff());
    }
    return p;
}

const std::vector<std::string> P{"p"};
const std::vector<std::string> PQ{"p", "q"};

} // namespace

TEST_CASE("parser fundamentals") {
    MultiPoly f = parse_polynomial("p^3+1", P);
    CHECK(f.to_string() == "p^3+1");
    CHECK(f.degree_in("p") == 3);

    // appendix-style factored input expands fully
    MultiPoly g = parse_polynomial("p^2*(p+1)-q^2", PQ);
    CHECK(g == parse_polynomial("p^3+p^2-q^2", PQ));

    CHECK(parse_polynomial("(1+i)*(1-i)", P) == parse_polynomial("2", P));
    CHECK(parse_polynomial("1/2*p + 1/2*p", P) == parse_polynomial("p", P));
    CHECK(parse_polynomial("-p^2", P) == -parse_polynomial("p^2", P));
    CHECK(parse_polynomial("3 - 2", P) == parse_polynomial("1", P));

    CHECK_THROWS_AS(parse_polynomial("p^", P), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("p+", P), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("(p", P), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("q+1", P), UnknownVariable);
}

TEST_CASE("derivative") {
    MultiPoly f = parse_polynomial("p^3+p+1", P);
    CHECK(f.derivative("p") == parse_polynomial("3*p^2+1", P));
    MultiPoly g = parse_polynomial("p^3+p^2-q^2", PQ);
    CHECK(g.derivative("q") == parse_polynomial("-2*q", PQ));
    CHECK(parse_polynomial("7", P).derivative("p").is_zero());
    CHECK_THROWS(f.derivative("z"));
}

TEST_CASE("evaluate") {
    MultiPoly f = parse_polynomial("p^3+1", P);
    CHECK(f.evaluate({{"p", GaussianRational(2)}}) == GaussianRational(9));
    MultiPoly g = parse_polynomial("p^3+p^2-q^2", PQ);
    CHECK(g.evaluate({{"p", GaussianRational(1)}, {"q", GaussianRational(2)}}) ==
          GaussianRational(-2));
    MultiPoly h = parse_polynomial("p^4+1", P);
    CHECK(h.evaluate({{"p", GaussianRational::i()}}) == GaussianRational(2));
    CHECK_THROWS(g.evaluate({{"p", GaussianRational(1)}}));
}

TEST_CASE("gcd basics") {
    MultiPoly a = parse_polynomial("p^2-1", P);
    MultiPoly b = parse_polynomial("p-1", P);
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(parse_polynomial("p^3", PQ), parse_polynomial("q^3", PQ)) ==
          parse_polynomial("1", PQ));
    CHECK(poly_gcd(MultiPoly(P), MultiPoly(P)).is_zero());
    CHECK(poly_gcd(parse_polynomial("36*p^4-36*p", P), parse_polynomial("36*p", P)) ==
          parse_polynomial("p", P));
    // bivariate with content
    MultiPoly c = parse_polynomial("(q+1)*(p^2-q)", PQ);
    MultiPoly d = parse_polynomial("(q^2+2*q+1)*(p+3)*(p^2-q)", PQ);
    CHECK(poly_gcd(c, d) == parse_polynomial("(q+1)*(p^2-q)", PQ));
}

TEST_CASE("gcd divides both inputs exactly (property)") {
    for (int it = 0; it < 60; ++it) {
        MultiPoly a = random_poly(PQ, 3, 3);
        MultiPoly b = random_poly(PQ, 3, 3);
        MultiPoly m = random_poly(PQ, 2, 2);
        MultiPoly x = a * m, y = b * m;
        if (x.is_zero() || y.is_zero()) continue;
        MultiPoly g = poly_gcd(x, y);
        CHECK(x.exact_div(g) * g == x);
        CHECK(y.exact_div(g) * g == y);
        // common factor m must divide the gcd
        if (!m.is_zero()) CHECK(g.exact_div(poly_gcd(g, m)) * poly_gcd(g, m) == g);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    for (int it = 0; it < 1000; ++it) {
        std::vector<std::string> vars = (it % 2) ? PQ : std::vector<std::string>{"p", "q", "r"};
        MultiPoly a = random_poly(vars, 6, 3);
        MultiPoly b = random_poly(vars, 6, 3);
        MultiPoly c = random_poly(vars, 6, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluate commutes with arithmetic") {
    for (int it = 0; it < 200; ++it) {
        MultiPoly a = random_poly(PQ, 4, 3);
        MultiPoly b = random_poly(PQ, 4, 3);
        std::map<std::string, GaussianRational> pt{
            {"p", random_coeff()}, {"q", random_coeff()}};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("derivative satisfies Leibniz rule") {
    for (int it = 0; it < 200; ++it) {
        MultiPoly a = random_poly(PQ, 4, 3);
        MultiPoly b = random_poly(PQ, 4, 3);
        CHECK((a * b).derivative("p") ==
              a.derivative("p") * b + a * b.derivative("p"));
    }
}

TEST_CASE("resultant") {
    MultiPoly a = parse_polynomial("p-1", P);
    MultiPoly b = parse_polynomial("p-2", P);
    MultiPoly r = resultant(a, b, "p");
    CHECK(r.is_constant());
    CHECK(!r.is_zero());
    CHECK(r.constant_value().norm() == Rational(1));

    MultiPoly c = parse_polynomial("p^2+1", PQ);
    MultiPoly d = parse_polynomial("p-q", PQ);
    CHECK(resultant(c, d, "p") == parse_polynomial("q^2+1", PQ));

    // shared root makes the resultant vanish
    MultiPoly e = parse_polynomial("(p-1)*(p+2)", P);
    MultiPoly f = parse_polynomial("(p-1)*(p-5)", P);
    CHECK(resultant(e, f, "p").is_zero());
    CHECK_THROWS_AS(resultant(MultiPoly(P), e, "p"), std::domain_error);
}

TEST_CASE("resultant agrees with product over roots (small oracle)") {
    // res_p(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a),
    // checked on split fixtures with known roots
    MultiPoly f = parse_polynomial("(p-1)*(p-2)*(p-3)", P);
    MultiPoly g = parse_polynomial("(p-4)*(p-5)", P);
    GaussianRational expect(1);
    for (long long a : {1, 2, 3}) {
        expect *= g.evaluate({{"p", GaussianRational(a)}});
    }
    MultiPoly r = resultant(f, g, "p");
    CHECK(r.is_constant());
    CHECK(r.constant_value() == expect);
}

TEST_CASE("squarefree part") {
    MultiPoly f = parse_polynomial("(p-1)^2*(p+2)", P);
    CHECK(squarefree_part(f, "p") == parse_polynomial("(p-1)*(p+2)", P));
    CHECK(squarefree_part(parse_polynomial("p^3", P), "p") == parse_polynomial("p", P));
    CHECK_THROWS_AS(squarefree_part(MultiPoly(P), "p"), std::domain_error);
}

TEST_CASE("reduce_fraction") {
    RationalFunction r = reduce_fraction(parse_polynomial("p^2-1", P), parse_polynomial("p-1", P));
    CHECK(r.num() == parse_polynomial("p+1", P));
    CHECK(r.den() == parse_polynomial("1", P));

    RationalFunction z = reduce_fraction(MultiPoly(PQ), parse_polynomial("q", PQ));
    CHECK(z.is_zero());
    CHECK(z.den() == parse_polynomial("1", PQ));

    CHECK_THROWS_AS(reduce_fraction(parse_polynomial("p", P), MultiPoly(P)), DivisionByZero);

    // idempotence: reducing a reduced pair returns it unchanged
    RationalFunction s = reduce_fraction(parse_polynomial("p^3+p+1", PQ), parse_polynomial("q^2+p", PQ));
    RationalFunction t = reduce_fraction(s.num(), s.den());
    CHECK(s == t);

    // denominator normalized monic under graded-lex
    RationalFunction u = reduce_fraction(parse_polynomial("p", P), parse_polynomial("2*p+2", P));
    CHECK(u.den() == parse_polynomial("p+1", P));
    CHECK(u.num() == parse_polynomial("1/2*p", P));
}

TEST_CASE("substitute composes polynomials") {
    MultiPoly f = parse_polynomial("p^2+q", PQ);
    std::map<std::string, MultiPoly> images{
        {"p", parse_polynomial("q+1", PQ)},
        {"q", parse_polynomial("p", PQ)},
    };
    CHECK(f.substitute(images) == parse_polynomial("(q+1)^2+p", PQ));
}
