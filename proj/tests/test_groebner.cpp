#include <doctest.h>

#include "formsym/groebner.hpp"
#include "formsym/parse.hpp"

#include <random>

using namespace formsym;

namespace {
std::mt19937_64 rng(0x60b0e55);

const std::vector<std::string> PQ{"p", "q"};

Ideal ideal_of(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
    Ideal id{vars, {}};
    for (const char* g : gens) id.generators.push_back(parse_polynomial(g, vars));
    return id;
}
}

TEST_CASE("buchberger on split linear system") {
    GroebnerBasis gb = buchberger(ideal_of(PQ, {"p-1", "q-2"}), MonomialOrder::lex());
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == parse_polynomial("q-2", PQ));
    CHECK(gb.basis[1] == parse_polynomial("p-1", PQ));
}

TEST_CASE("buchberger circle and line, lex p>q") {
    GroebnerBasis gb = buchberger(ideal_of(PQ, {"p^2+q^2-1", "p-q"}), MonomialOrder::lex());
    // hand S-pair reduction gives {p-q, 2q^2-1}; reduced basis is monic
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == parse_polynomial("q^2-1/2", PQ));
    CHECK(gb.basis[1] == parse_polynomial("p-q", PQ));
    // normal-form-zero check for both generators
    CHECK(normal_form(parse_polynomial("p^2+q^2-1", PQ), gb).is_zero());
    CHECK(normal_form(parse_polynomial("p-q", PQ), gb).is_zero());
}

TEST_CASE("buchberger inconsistent system gives unit ideal") {
    GroebnerBasis gb = buchberger(ideal_of({"p"}, {"p", "p+1"}), MonomialOrder::lex());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == parse_polynomial("1", {"p"}));
}

TEST_CASE("reduced basis is canonical under generator shuffling") {
    std::vector<std::string> vars{"p", "q", "r"};
    std::vector<MultiPoly> gens{
        parse_polynomial("p^2*q-r", vars),
        parse_polynomial("q^2-p*r", vars),
        parse_polynomial("p*r^2-q^3+1", vars),
        parse_polynomial("p+q+r-2", vars),
    };
    GroebnerBasis ref = buchberger(Ideal{vars, gens}, MonomialOrder::grevlex());
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        // also throw in a random combination of generators
        std::vector<MultiPoly> noisy = gens;
        noisy.push_back(gens[0] * parse_polynomial("q-3", vars) + gens[1]);
        GroebnerBasis gb = buchberger(Ideal{vars, noisy}, MonomialOrder::grevlex());
        REQUIRE(gb.basis.size() == ref.basis.size());
        for (size_t i = 0; i < gb.basis.size(); ++i) CHECK(gb.basis[i] == ref.basis[i]);
    }
}

TEST_CASE("normal form examples") {
    GroebnerBasis gb = buchberger(ideal_of(PQ, {"p-1", "q-2"}), MonomialOrder::lex());
    CHECK(normal_form(parse_polynomial("p-1", PQ), gb).is_zero());

    GroebnerBasis gb2 = buchberger(ideal_of(PQ, {"p-q"}), MonomialOrder::lex());
    CHECK(normal_form(parse_polynomial("p^2", PQ), gb2) == parse_polynomial("q^2", PQ));
}

TEST_CASE("normal form kills random ideal combinations (property)") {
    std::vector<std::string> vars{"p", "q"};
    Ideal id = ideal_of(vars, {"p^3-q", "p*q-p-1"});
    GroebnerBasis gb = buchberger(id, MonomialOrder::grevlex());
    for (int it = 0; it < 40; ++it) {
        MultiPoly combo(vars);
        for (const auto& g : id.generators) {
            MultiPoly coef(vars);
            for (int t = 0; t < 3; ++t) {
                Monomial m{(uint32_t)(rng() % 3), (uint32_t)(rng() % 3)};
                long long re = (long long)(rng() % 7) - 3;
                coef += MultiPoly::monomial(vars, m, GaussianRational(Rational(re)));
            }
            combo += coef * g;
        }
        CHECK(normal_form(combo, gb).is_zero());
    }
    // residual identity: f - NF(f) is in the ideal
    for (int it = 0; it < 10; ++it) {
        MultiPoly f(vars);
        for (int t = 0; t < 4; ++t) {
            Monomial m{(uint32_t)(rng() % 5), (uint32_t)(rng() % 5)};
            long long re = (long long)(rng() % 7) - 3;
            f += MultiPoly::monomial(vars, m, GaussianRational(Rational(re)));
        }
        MultiPoly nf = normal_form(f, gb);
        CHECK(normal_form(f - nf, gb).is_zero());
    }
}

TEST_CASE("quotient dimension") {
    GroebnerBasis gb1 = buchberger(ideal_of({"p"}, {"p^3-1"}), MonomialOrder::lex());
    CHECK(quotient_dimension(gb1).finite);
    CHECK(quotient_dimension(gb1).count == 3);

    GroebnerBasis gb2 = buchberger(ideal_of(PQ, {"p^2-1", "q^3-1"}), MonomialOrder::grevlex());
    CHECK(quotient_dimension(gb2).count == 6);

    GroebnerBasis gb3 = buchberger(ideal_of(PQ, {"p*q-1"}), MonomialOrder::grevlex());
    CHECK_FALSE(quotient_dimension(gb3).finite);
}

TEST_CASE("quotient dimension of random split products (property)") {
    for (int it = 0; it < 10; ++it) {
        int na = 1 + (int)(rng() % 3), nb = 1 + (int)(rng() % 3);
        MultiPoly fp = parse_polynomial("1", PQ), fq = parse_polynomial("1", PQ);
        // distinct linear factors in p and in q
        std::vector<long long> used;
        for (int k = 0; k < na; ++k) {
            long long a;
            do { a = (long long)(rng() % 9) - 4; } while (std::count(used.begin(), used.end(), a));
            used.push_back(a);
            fp *= parse_polynomial("p", PQ) - MultiPoly::constant(PQ, GaussianRational(a));
        }
        used.clear();
        for (int k = 0; k < nb; ++k) {
            long long b;
            do { b = (long long)(rng() % 9) - 4; } while (std::count(used.begin(), used.end(), b));
            used.push_back(b);
            fq *= parse_polynomial("q", PQ) - MultiPoly::constant(PQ, GaussianRational(b));
        }
        GroebnerBasis gb = buchberger(Ideal{PQ, {fp, fq}}, MonomialOrder::grevlex());
        CHECK(quotient_dimension(gb).count == (uint64_t)(na * nb));
        CHECK(is_radical_zero_dim(gb));
    }
}

TEST_CASE("eliminate") {
    std::vector<std::string> vars{"p", "P"};
    Ideal id = ideal_of(vars, {"P-p^2", "p-2"});
    Ideal out = eliminate(id, {"p"});
    REQUIRE(out.generators.size() == 1);
    CHECK(out.generators[0] == parse_polynomial("P-4", {"P"}));

    // output generators never mention dropped variables
    std::vector<std::string> v3{"p", "q", "r"};
    Ideal id2 = ideal_of(v3, {"r-p^2-q^2", "p*q-1", "p+q-3"});
    Ideal out2 = eliminate(id2, {"p", "q"});
    CHECK(!out2.generators.empty());
    for (const auto& g : out2.generators) {
        CHECK(g.vars() == std::vector<std::string>{"r"});
    }
    // r = p^2+q^2 = (p+q)^2 - 2pq = 9 - 2 = 7
    CHECK(out2.generators[0] == parse_polynomial("r-7", {"r"}));
}

TEST_CASE("variety dimension") {
    std::vector<std::string> I3{"I1", "I2", "I3"};
    GroebnerBasis gb1 = buchberger(ideal_of(I3, {"1+6*I1"}), MonomialOrder::grevlex());
    CHECK(variety_dimension(gb1) == 2);

    GroebnerBasis gb2 = buchberger(ideal_of(I3, {"6*I2+45*I3-31", "1+6*I1"}), MonomialOrder::grevlex());
    CHECK(variety_dimension(gb2) == 1);

    GroebnerBasis gb0 = buchberger(Ideal{I3, {}}, MonomialOrder::grevlex());
    CHECK(variety_dimension(gb0) == 3);

    GroebnerBasis gbu = buchberger(ideal_of(I3, {"I1", "I1+1"}), MonomialOrder::grevlex());
    CHECK_THROWS_AS(variety_dimension(gbu), ImproperIdeal);
}

TEST_CASE("radical test by squarefree eliminants") {
    GroebnerBasis gb1 = buchberger(ideal_of({"p"}, {"p^2"}), MonomialOrder::lex());
    CHECK_FALSE(is_radical_zero_dim(gb1));

    GroebnerBasis gb2 = buchberger(ideal_of(PQ, {"p^2-1", "q^3-1"}), MonomialOrder::grevlex());
    CHECK(is_radical_zero_dim(gb2));

    GroebnerBasis gb3 = buchberger(ideal_of(PQ, {"p*q-1"}), MonomialOrder::grevlex());
    CHECK_THROWS_AS(is_radical_zero_dim(gb3), NotZeroDimensional);
}

TEST_CASE("minimal polynomial in quotient ring") {
    // p^2 = 2 with q = p+1: min poly of q is (t-1)^2 - 2
    GroebnerBasis gb = buchberger(ideal_of(PQ, {"p^2-2", "q-p-1"}), MonomialOrder::lex());
    MultiPoly m = minimal_polynomial(gb, parse_polynomial("q", PQ), "t");
    CHECK(m == parse_polynomial("t^2-2*t-1", {"t"}));
}

TEST_CASE("resource caps raise ResourceLimit") {
    GroebnerConfig tiny;
    tiny.max_reductions = 3;
    std::vector<std::string> v3{"p", "q", "r"};
    Ideal id = ideal_of(v3, {"p^3*q-r^2-1", "q^4-p*r+2", "r^3-p*q^2"});
    CHECK_THROWS_AS(buchberger(id, MonomialOrder::grevlex(), tiny), ResourceLimit);
}
