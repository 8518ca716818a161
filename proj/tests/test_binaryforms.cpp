#include <doctest.h>

#include "formsym/binaryforms.hpp"
#include "formsym/parse.hpp"
#include "formsym/roots.hpp"

#include <random>

using namespace formsym;

namespace {
const std::vector<std::string> P{"p"};

BinaryForm bf(const char* s, uint32_t n, int k = 0) {
    return BinaryForm(parse_polynomial(s, P), n, k);
}

GaussianRational monomial_J(long long n, long long k) {
    return GaussianRational(Rational(-4 * (n - 2 * k) * (n - 2 * k), k * (n - k) * (n - 1)));
}
GaussianRational monomial_K(long long n, long long k) {
    return GaussianRational(Rational(-6 * (n - 2 * k) * (n - 2 * k), k * (n - k) * (n - 1)));
}

std::mt19937_64 rng(0x715eed);
GaussianRational small_rand() {
    long long re = (long long)(rng() % 7) - 3;
    long long im = (long long)(rng() % 7) - 3;
    return GaussianRational(Rational(re), Rational(im));
}
}

TEST_CASE("covariants fixtures") {
    CHECK(covariants(bf("p^3", 3)).H.is_zero());
    CHECK(covariants(bf("p^3+1", 3)).H == parse_polynomial("36*p", P));
    CHECK(covariants(bf("p", 3)).H == parse_polynomial("-4", P));
}

TEST_CASE("monomial invariants match the closed forms for 3<=n<=8") {
    for (uint32_t n = 3; n <= 8; ++n) {
        for (uint32_t k = 1; k <= n - 1; ++k) {
            MultiPoly f = MultiPoly::monomial(P, Monomial{k}, GaussianRational(1));
            if (2 * k == n) {
                // J is still the stated constant (0 here)
                InvariantPair jk = invariants_jk(BinaryForm(f, n));
                CHECK(jk.J.is_constant());
                CHECK(jk.J.constant_value() == monomial_J(n, k));
                CHECK(jk.K.constant_value() == monomial_K(n, k));
                continue;
            }
            InvariantPair jk = invariants_jk(BinaryForm(f, n));
            REQUIRE(jk.J.is_constant());
            REQUIRE(jk.K.is_constant());
            CHECK(jk.J.constant_value() == monomial_J(n, k));
            CHECK(jk.K.constant_value() == monomial_K(n, k));
        }
    }
}

TEST_CASE("p (n=3) has J=-1, K=-3/2") {
    InvariantPair jk = invariants_jk(bf("p", 3));
    CHECK(jk.J.constant_value() == GaussianRational(Rational(-1)));
    CHECK(jk.K.constant_value() == GaussianRational(Rational(-3, 2)));
}

TEST_CASE("cubic syzygy: K = -3/2 identically for cubics with nonzero Hessian") {
    for (int it = 0; it < 50; ++it) {
        MultiPoly f(P);
        for (uint32_t d = 0; d <= 3; ++d)
            f += MultiPoly::monomial(P, Monomial{d}, small_rand());
        if (f.is_zero()) continue;
        BinaryForm form(f, 3);
        CovariantSet cs = covariants(form);
        if (cs.H.is_zero()) continue;
        CHECK(cs.U == (cs.H * cs.H).scaled(GaussianRational(Rational(-3, 2))));
        InvariantPair jk = invariants_jk(form);
        REQUIRE(jk.K.is_constant());
        CHECK(jk.K.constant_value() == GaussianRational(Rational(-3, 2)));
    }
}

TEST_CASE("classification trichotomy fixtures") {
    SymmetryClass c1 = classify(bf("p^3", 3));
    CHECK(c1.tag == SymmetryTag::TwoDimensional);
    CHECK_FALSE(c1.maximal_class);

    SymmetryClass c2 = classify(bf("p", 3));
    CHECK(c2.tag == SymmetryTag::OneDimensional);

    SymmetryClass c3 = classify(bf("p^3+1", 3));
    CHECK(c3.tag == SymmetryTag::Finite);
    CHECK(c3.maximal_class);

    SymmetryClass c4 = classify(bf("p^4+3*p^2+1", 4));
    CHECK(c4.tag == SymmetryTag::Finite);
    CHECK_FALSE(c4.maximal_class);
}

TEST_CASE("symmetry equations") {
    auto [eq1, eq2] = symmetry_equations(bf("p^3+1", 3));
    CHECK(eq2.is_zero());              // maximal class
    CHECK(eq1.degree_in("P") <= 6);
    // antisymmetry under p <-> P
    std::vector<std::string> pP{"p", "P"};
    MultiPoly swapped = eq1.substitute({{"p", MultiPoly::variable(pP, "P")},
                                        {"P", MultiPoly::variable(pP, "p")}});
    CHECK(swapped == -eq1);

    auto [f1, f2] = symmetry_equations(bf("p^4+3*p^2+1", 4));
    CHECK(!f1.is_zero());
    CHECK(!f2.is_zero());
    CHECK(f1.degree_in("P") <= 12);    // 6n-12
    CHECK(f2.degree_in("P") <= 8);     // 4n-8 bounds the index here

    CHECK_THROWS_AS(symmetry_equations(bf("p^3", 3)), NotFinite);
}

TEST_CASE("index bounds") {
    CHECK(index_bound(bf("p^3+1", 3)) == 6);
    // p^4+1 is dihedral (not maximal class): bound 4n-8 = 8
    CHECK(index_bound(bf("p^4+1", 4)) == 8);
    // equianharmonic quartic (vanishing apolar invariant) is maximal: 6n-12 = 12
    BinaryForm tetra = bf("p^4+4*p^3+p+1", 4);
    CHECK(classify(tetra).maximal_class);
    CHECK(index_bound(tetra) == 12);
    // generic sextic is not maximal class: bound 4n-8 = 16
    CHECK(index_bound(bf("p^6+p+1", 6)) == 16);
}

TEST_CASE("projective index: cubics and quartics") {
    CHECK(projective_index(bf("p^3+1", 3)) == 6);
    CHECK(projective_index(bf("p^3+p", 3)) == 6);
    CHECK(projective_index(bf("p^3+p+1", 3)) == 6);
    CHECK(projective_index(bf("p^4+1", 4)) == 8);
    CHECK(projective_index(bf("p^4+3*p^2+1", 4)) == 4);
}

TEST_CASE("projective index: quintic table") {
    CHECK(projective_index(bf("p^5+1", 5)) == 10);
    CHECK(projective_index(bf("p^5+p", 5)) == 4);
    CHECK(projective_index(bf("p^5+p^2", 5)) == 3);
    CHECK(projective_index(bf("p^5+p^3", 5)) == 2);
    CHECK(projective_index(bf("p^5+p^2+1", 5)) == 1);
    CHECK(projective_index(bf("p^5-4*p-2", 5)) == 1);
}

TEST_CASE("solve_symmetries on p^3+1") {
    BinaryForm form = bf("p^3+1", 3);
    std::vector<Mobius> syms = solve_symmetries(form);
    REQUIRE(syms.size() == 6);
    // identity present
    bool has_id = false, has_inv = false;
    for (const auto& m : syms) {
        if (mobius_equivalent(m, Mobius::identity())) has_id = true;
        if (mobius_equivalent(m, Mobius::from_exact(GaussianRational(), GaussianRational(1),
                                                    GaussianRational(1), GaussianRational())))
            has_inv = true;
    }
    CHECK(has_id);
    CHECK(has_inv);
    // closed under composition and inverse
    for (const auto& x : syms) {
        bool found_inv = false;
        for (const auto& y : syms)
            if (mobius_equivalent(x.inverse(), y)) found_inv = true;
        CHECK(found_inv);
    }
    for (const auto& x : syms)
        for (const auto& y : syms) {
            Mobius c = x.compose(y);
            int hits = 0;
            for (const auto& z : syms)
                if (mobius_equivalent(c, z)) ++hits;
            CHECK(hits == 1);
        }
}

TEST_CASE("solve_symmetries on p^4+1 gives the eight exact maps") {
    std::vector<Mobius> syms = solve_symmetries(bf("p^4+1", 4));
    REQUIRE(syms.size() == 8);
    GaussianRational one(1), zero, I = GaussianRational::i();
    std::vector<Mobius> expect = {
        Mobius::from_exact(one, zero, zero, one),    Mobius::from_exact(-one, zero, zero, one),
        Mobius::from_exact(I, zero, zero, one),      Mobius::from_exact(-I, zero, zero, one),
        Mobius::from_exact(zero, one, one, zero),    Mobius::from_exact(zero, -one, one, zero),
        Mobius::from_exact(zero, I, one, zero),      Mobius::from_exact(zero, -I, one, zero),
    };
    for (const auto& e : expect) {
        int hits = 0;
        for (const auto& m : syms)
            if (mobius_equivalent(m, e)) ++hits;
        CHECK(hits == 1);
    }
    for (const auto& m : syms) CHECK(m.is_exact());
}

TEST_CASE("solve count equals index count on degree-3/4 fixtures") {
    for (const char* s : {"p^3+1", "p^3+p", "p^4+1", "p^4+3*p^2+1"}) {
        uint32_t n = (s[2] == '3') ? 3 : 4;
        BinaryForm form = bf(s, n);
        CHECK(solve_symmetries(form).size() == projective_index(form));
    }
}

TEST_CASE("to_linear_fractional") {
    RationalFunction r = reduce_fraction(parse_polynomial("2*p+2", P), parse_polynomial("p-1", P));
    Mobius m = to_linear_fractional(r);
    CHECK(mobius_equivalent(m, Mobius::from_exact(GaussianRational(2), GaussianRational(2),
                                                  GaussianRational(1), GaussianRational(-1))));
    Mobius id = to_linear_fractional(RationalFunction::from_poly(parse_polynomial("p", P)));
    CHECK(mobius_equivalent(id, Mobius::identity()));
    CHECK_THROWS_AS(
        to_linear_fractional(reduce_fraction(parse_polynomial("p^2+1", P), parse_polynomial("p", P))),
        NotLinearFractional);
    CHECK_THROWS_AS(to_linear_fractional(RationalFunction::from_poly(parse_polynomial("3", P))),
                    NotLinearFractional);
}

TEST_CASE("matrix symmetry exact fixtures") {
    BinaryForm cubic = bf("p^3+1", 3);
    MatrixSymmetry ms = matrix_symmetry(cubic, Mobius::from_exact(GaussianRational(), GaussianRational(1),
                                                                  GaussianRational(1), GaussianRational()));
    REQUIRE(ms.mu.exact);
    CHECK(ms.mu.value.is_one());
    CHECK(ms.multiplicity == 3);
    CHECK(ms.entry[0][0].value.is_zero());
    CHECK(ms.entry[0][1].value.is_one());
    CHECK(ms.entry[1][0].value.is_one());
    CHECK(ms.entry[1][1].value.is_zero());

    BinaryForm octavic = bf("p^8+14*p^4+1", 8);
    MatrixSymmetry mi = matrix_symmetry(octavic, Mobius::from_exact(GaussianRational::i(), GaussianRational(),
                                                                    GaussianRational(), GaussianRational(1)));
    REQUIRE(mi.mu.exact);
    CHECK(mi.mu.value.is_one());
    CHECK(mi.entry[0][0].value == GaussianRational::i());
    CHECK(mi.entry[1][1].value.is_one());

    CHECK_THROWS_AS(matrix_symmetry(cubic, Mobius::from_exact(GaussianRational(2), GaussianRational(),
                                                              GaussianRational(), GaussianRational(1))),
                    NotASymmetry);
}

TEST_CASE("matrix symmetry with certified coefficients reports mu = 2") {
    // m = (0*p + (-1 - i sqrt3)) / (2 p + 0): the cleared representative of
    // the cube-root-of-unity-over-p map on p^3+1
    ComplexInterval s3 = principal_nth_root(GaussianRational(3), 2);
    ComplexInterval beta_box{RealInterval(Rational(-1)), -s3.re};
    Mobius m(AlgebraicCoefficient::from_exact(GaussianRational()),
             AlgebraicCoefficient::from_box(beta_box),
             AlgebraicCoefficient::from_exact(GaussianRational(2)),
             AlgebraicCoefficient::from_exact(GaussianRational()));
    MatrixSymmetry ms = matrix_symmetry(bf("p^3+1", 3), m);
    // reported scalar is (mu_true)^(1/3) = 8^(1/3) = 2
    Rational tol(BigInt(1), BigInt(1).shl(64));
    CHECK(ms.mu.box.contains(GaussianRational(2)));
    CHECK(ms.mu.box.rad() <= tol);
    // matrix = [[0, (-1-i sqrt3)/2], [1, 0]]
    CHECK(ms.entry[1][0].box.contains(GaussianRational(1)));
    CHECK(ms.entry[1][0].box.rad() <= tol);
    CHECK(ms.entry[0][0].box.contains(GaussianRational()));
    CHECK(ms.entry[1][1].box.contains(GaussianRational()));
    // entry[0][1] = beta/2 = (-1 - i sqrt3)/2
    ComplexInterval expect = beta_box * ComplexInterval(GaussianRational(Rational(1, 2)));
    CHECK(ms.entry[0][1].box.intersects(expect));
    CHECK(ms.entry[0][1].box.rad() <= Rational(BigInt(1), BigInt(1).shl(60)));
}

TEST_CASE("full index multipliers") {
    CHECK(full_index(6, bf("p^3+1", 3), IndexMode::Complex) == 18);
    CHECK(full_index(4, bf("p^4+1", 4), IndexMode::Real) == 8);
    CHECK(full_index(10, bf("p^5+1", 5), IndexMode::Real) == 10);
}

TEST_CASE("exceptional weight filter") {
    BinaryForm quartic = bf("p^4+1", 4, -2);
    std::vector<Mobius> syms = solve_symmetries(quartic);
    REQUIRE(syms.size() == 8);
    std::vector<Mobius> kept = exceptional_weight_filter(quartic, syms);
    REQUIRE(kept.size() == 4);
    GaussianRational one(1), zero, I = GaussianRational::i();
    std::vector<Mobius> expect = {
        Mobius::from_exact(one, zero, zero, one), Mobius::from_exact(-one, zero, zero, one),
        Mobius::from_exact(zero, one, one, zero), Mobius::from_exact(zero, -one, one, zero)};
    for (const auto& e : expect) {
        int hits = 0;
        for (const auto& m : kept)
            if (mobius_equivalent(m, e)) ++hits;
        CHECK(hits == 1);
    }

    BinaryForm mu4 = bf("p^4+3*p^2+1", 4, -2);
    std::vector<Mobius> s4 = solve_symmetries(mu4);
    REQUIRE(s4.size() == 4);
    CHECK(exceptional_weight_filter(mu4, s4).size() == 4);

    CHECK_THROWS_AS(exceptional_weight_filter(bf("p^3+1", 3), {}), NotExceptionalWeight);
}

TEST_CASE("J,K covariance under random Q(i) changes of variable") {
    for (int it = 0; it < 12; ++it) {
        uint32_t n = 3 + (uint32_t)(rng() % 4);
        MultiPoly f(P);
        for (uint32_t d = 0; d <= n; ++d)
            f += MultiPoly::monomial(P, Monomial{d}, small_rand());
        if (f.is_zero() || f.degree_in("p") == 0) { --it; continue; }
        BinaryForm form(f, n);
        if (classify(form).tag == SymmetryTag::TwoDimensional) { --it; continue; }
        GaussianRational a = small_rand(), b = small_rand(), c = small_rand(), d = small_rand();
        if ((a * d - b * c).is_zero()) { --it; continue; }
        BinaryForm img = transform_form(form, a, b, c, d);
        if (classify(img).tag == SymmetryTag::TwoDimensional) { --it; continue; }
        InvariantPair jk = invariants_jk(form);
        InvariantPair jk2 = invariants_jk(img);
        CHECK(jk2.J == compose_with_mobius(jk.J, a, b, c, d));
        CHECK(jk2.K == compose_with_mobius(jk.K, a, b, c, d));
        // classification invariance
        SymmetryClass c0 = classify(form), c1 = classify(img);
        CHECK(c0.tag == c1.tag);
        CHECK(c0.maximal_class == c1.maximal_class);
    }
}

TEST_CASE("projective index never exceeds the bound") {
    for (const char* s : {"p^3+1", "p^3+p", "p^4+1", "p^4+3*p^2+1", "p^5+p^2", "p^5+p^3"}) {
        std::string str(s);
        uint32_t n = (uint32_t)(str[2] - '0');
        BinaryForm form = bf(s, n);
        CHECK(projective_index(form) <= index_bound(form));
    }
}
