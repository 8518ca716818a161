#include "formsym/signature.hpp"

#include "formsym/parse.hpp"

#include <algorithm>

namespace formsym {

namespace {

MultiPoly lcm_poly(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly g = poly_gcd(a, b);
    return (a * b).exact_div(g).monic(MonomialOrder::grlex());
}

// squarefree polynomial with the same zero set; inverting it localizes at the
// same multiplicative set as the full denominator
MultiPoly squarefree_support(const MultiPoly& f) {
    if (f.is_constant()) return f;
    MultiPoly g = f;
    for (const auto& v : f.vars())
        if (f.depends_on(f.var_index(v))) g = poly_gcd(g, f.derivative(v));
    if (g.is_constant()) return f.monic(MonomialOrder::grlex());
    return f.exact_div(g).monic(MonomialOrder::grlex());
}

std::vector<MultiPoly> primitive_sorted(std::vector<MultiPoly> gens) {
    MonomialOrder ord = MonomialOrder::grlex();
    for (auto& g : gens) g = g.integer_primitive(ord);
    std::sort(gens.begin(), gens.end(), [&](const MultiPoly& x, const MultiPoly& y) {
        return ord.less(x.leading_term(ord).first, y.leading_term(ord).first);
    });
    return gens;
}

} // namespace

Ideal signature_ideal(const std::vector<RationalFunction>& invariants,
                      const std::vector<std::string>& names, const GroebnerConfig& cfg) {
    if (invariants.size() != names.size())
        throw std::invalid_argument("signature_ideal: names/invariants mismatch");
    bool any_nonconstant = false;
    for (const auto& r : invariants)
        if (!r.is_constant()) any_nonconstant = true;
    if (!any_nonconstant) {
        // signature is a single point: return its defining linear ideal
        Ideal out{names, {}};
        for (size_t j = 0; j < names.size(); ++j) {
            MultiPoly g = MultiPoly::variable(names, names[j]) -
                          MultiPoly::constant(names, invariants[j].constant_value());
            out.generators.push_back(g.integer_primitive(MonomialOrder::grlex()));
        }
        return out;
    }

    // lcm of the denominators; the saturation variable is only needed when
    // some denominator is nonconstant
    MultiPoly L;
    for (const auto& r : invariants) {
        MultiPoly Ds = squarefree_support(r.den());
        L = L.is_zero() ? Ds : lcm_poly(L, Ds);
    }
    bool saturate = !L.is_constant();

    std::vector<std::string> curve = invariants.front().num().vars();
    std::vector<std::string> ambient = curve;
    if (saturate) ambient.push_back("w");
    for (const auto& nm : names) ambient.push_back(nm);

    Ideal sys{ambient, {}};
    for (size_t j = 0; j < invariants.size(); ++j) {
        MultiPoly N = invariants[j].num().with_vars(ambient);
        MultiPoly D = invariants[j].den().with_vars(ambient);
        sys.generators.push_back(N - MultiPoly::variable(ambient, names[j]) * D);
    }
    if (saturate) {
        sys.generators.push_back(MultiPoly::constant(ambient, GaussianRational(1)) -
                                 MultiPoly::variable(ambient, "w") * L.with_vars(ambient));
    }
    std::vector<std::string> drop = curve;
    if (saturate) drop.push_back("w");
    Ideal out = eliminate(sys, drop, cfg);
    out.generators = primitive_sorted(out.generators);
    return out;
}

int signature_dimension(const Ideal& ideal, const GroebnerConfig& cfg) {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), cfg);
    return variety_dimension(gb);
}

SignatureVariety make_signature_variety(const std::vector<RationalFunction>& invariants,
                                        const std::vector<std::string>& names,
                                        const GroebnerConfig& cfg) {
    Ideal id = signature_ideal(invariants, names, cfg);
    SignatureVariety sv;
    sv.invariant_names = names;
    sv.generators = id.generators;
    sv.dimension = id.generators.empty() ? (int)names.size() : signature_dimension(id, cfg);
    return sv;
}

const std::vector<std::pair<Rational, Rational>> kSignatureProbes = {
    {Rational(1), Rational(2)}, {Rational(2), Rational(3)}, {Rational(1), Rational(1)},
    {Rational(2), Rational(2)}, {Rational(3), Rational(1)}, {Rational(1), Rational(3)},
    {Rational(2), Rational(1)}, {Rational(3), Rational(2)}, {Rational(1), Rational(0)},
    {Rational(0), Rational(1)}, {Rational(2), Rational(5)}, {Rational(5), Rational(2)},
    {Rational(3), Rational(4)}, {Rational(4), Rational(3)}, {Rational(1), Rational(4)},
};

SymmetryCount symmetry_count(const std::vector<RationalFunction>& invariants,
                             const std::pair<Rational, Rational>& probe,
                             const GroebnerConfig& cfg) {
    std::vector<std::string> pq{"p", "q"};
    std::map<std::string, GaussianRational> at{{"p", GaussianRational(probe.first)},
                                               {"q", GaussianRational(probe.second)}};
    // evaluate the invariants at the probe (DivisionByZero propagates)
    std::vector<GaussianRational> c;
    for (const auto& r : invariants) c.push_back(r.evaluate(at));

    std::vector<std::string> ambient{"p", "q", "w"};
    Ideal sys{ambient, {}};
    MultiPoly L;
    for (size_t j = 0; j < invariants.size(); ++j) {
        MultiPoly N = invariants[j].num().with_vars(ambient);
        MultiPoly D = invariants[j].den().with_vars(ambient);
        sys.generators.push_back(N - D.scaled(c[j]));
        MultiPoly Dc = invariants[j].den();
        MultiPoly Ds = squarefree_support(Dc);
        L = L.is_zero() ? Ds : lcm_poly(L, Ds);
    }
    if (!L.is_constant()) {
        sys.generators.push_back(MultiPoly::constant(ambient, GaussianRational(1)) -
                                 MultiPoly::variable(ambient, "w") * L.with_vars(ambient));
    }
    GroebnerBasis gb = buchberger(sys, MonomialOrder::grevlex(), cfg);
    QuotientDim qd = quotient_dimension(gb);
    if (!qd.finite)
        throw NotZeroDimensional("symmetry_count: ideal is not zero-dimensional at this probe");
    SymmetryCount out;
    out.count = qd.count;
    out.probe = probe;
    out.radical_verified = is_radical_zero_dim(gb);
    return out;
}

SymmetryCount symmetry_count_auto(const std::vector<RationalFunction>& invariants,
                                  const GroebnerConfig& cfg,
                                  std::vector<std::string>* diagnostics) {
    for (const auto& probe : kSignatureProbes) {
        try {
            return symmetry_count(invariants, probe, cfg);
        } catch (const DivisionByZero&) {
            if (diagnostics)
                diagnostics->push_back("probe (" + probe.first.to_string() + "," +
                                       probe.second.to_string() + "): division by zero");
        } catch (const NotZeroDimensional&) {
            if (diagnostics)
                diagnostics->push_back("probe (" + probe.first.to_string() + "," +
                                       probe.second.to_string() + "): not zero-dimensional");
        }
    }
    throw NotZeroDimensional("symmetry_count: every probe in the sequence failed");
}

Equivalence equivalence_test(const SignatureVariety& a, const SignatureVariety& b,
                             EquivMode mode, const GroebnerConfig& cfg) {
    if (a.invariant_names != b.invariant_names)
        throw NameMismatch("equivalence_test: invariant name lists differ");
    const std::vector<std::string>& names = a.invariant_names;
    GroebnerBasis ga = buchberger(Ideal{names, a.generators}, MonomialOrder::grevlex(), cfg);
    GroebnerBasis gb = buchberger(Ideal{names, b.generators}, MonomialOrder::grevlex(), cfg);
    // normal-form membership test in both directions
    bool a_in_b = true, b_in_a = true;
    for (const auto& g : a.generators)
        if (!normal_form(g, gb).is_zero()) { a_in_b = false; break; }
    for (const auto& g : b.generators)
        if (!normal_form(g, ga).is_zero()) { b_in_a = false; break; }
    if (!a_in_b || !b_in_a) return Equivalence::Inequivalent;
    if (a.dimension != b.dimension) return Equivalence::Inequivalent;
    return mode == EquivMode::Complex ? Equivalence::Equivalent : Equivalence::Inconclusive;
}

SumPowersReport sum_of_powers_conditions(uint32_t n) {
    if (n < 4) throw std::invalid_argument("sum_of_powers_conditions: n must be at least 4");
    std::vector<std::string> pq{"p", "q"};
    std::string txt = "p^" + std::to_string(n) + "+q^" + std::to_string(n) + "+1";
    TernaryForm form(parse_polynomial(txt, pq), n);

    TernaryInvariants ti = absolute_invariants(form);
    long long N = n;
    SumPowersReport rep{};
    rep.n = n;
    rep.I1_matches = ti.I[0].is_constant() &&
                     ti.I[0].constant_value() ==
                         GaussianRational(Rational(-(N - 2) * (N - 2), N * (N - 1)));
    rep.I5_matches =
        ti.I[4].is_constant() &&
        ti.I[4].constant_value() ==
            GaussianRational(Rational(-(N - 2) * (N - 2) * (N - 2) * (N - 3) * (N - 3) * (N - 3),
                                      N * N * N * (N - 1) * (N - 1) * (N - 1)));

    // rewrite in P = p^n, Q = q^n
    std::vector<std::string> PQv{"P", "Q"};
    auto rewrite = [&](const MultiPoly& f) {
        MultiPoly out(PQv);
        for (const auto& [m, c] : f.terms()) {
            if (m[0] % n || m[1] % n)
                throw std::logic_error("sum_of_powers: exponent not divisible by n");
            out += MultiPoly::monomial(PQv, Monomial{m[0] / n, m[1] / n}, c);
        }
        return out;
    };
    auto inPQ = [&](const RationalFunction& r) {
        return RationalFunction::from_coprime(rewrite(r.num()), rewrite(r.den()));
    };
    auto scale = [&](const RationalFunction& r, const Rational& s) {
        return r.scaled(GaussianRational(s));
    };
    Rational nn(N), n1(N - 1), n2(N - 2), n3(N - 3);
    RationalFunction i2 = scale(inPQ(ti.I[1]), nn * n1 / (n2 * n2));
    RationalFunction i3 = scale(inPQ(ti.I[2]), (nn * n1).pow(2) / n2.pow(4));
    RationalFunction i4 = scale(inPQ(ti.I[3]), (nn * n1).pow(2) / (n2 * n3).pow(2));
    RationalFunction i6 = scale(inPQ(ti.I[5]), (nn * n1).pow(6) / (n2 * n3).pow(6));
    RationalFunction i7 = scale(inPQ(ti.I[6]), nn * n1 / (n2 * n3));
    RationalFunction i8 = scale(inPQ(ti.I[7]), nn.pow(8) * n1.pow(8) / (n2.pow(10) * n3.pow(6)));

    RationalFunction sixteen = RationalFunction::from_poly(
        MultiPoly::constant(PQv, GaussianRational(16)));
    RationalFunction twenty = RationalFunction::from_poly(
        MultiPoly::constant(PQv, GaussianRational(20)));
    RationalFunction five_i7 = i7.scaled(GaussianRational(5));
    rep.i6_minus_i8 = (i6 - i8).is_zero();
    rep.i3_plus_i4_minus_i7 = (i3 + i4 - i7).is_zero();
    rep.i2_plus_5i7_minus_16 = (i2 + five_i7 - sixteen).is_zero();
    RationalFunction quartic = i4 * i7 * i7 - i7 * i7 * i7 - (i4 * i4).scaled(GaussianRational(4)) +
                               (i4 * i7).scaled(GaussianRational(4)) - i4.scaled(GaussianRational(8)) +
                               i7.scaled(GaussianRational(12)) + i8 - twenty;
    rep.quartic_relation = quartic.is_zero();
    return rep;
}

SignatureVariety binary_signature(const BinaryForm& form, const GroebnerConfig& cfg) {
    SymmetryClass cls = classify(form);
    if (cls.tag == SymmetryTag::TwoDimensional)
        throw HessianZero("binary_signature: Hessian vanishes identically");
    InvariantPair jk = invariants_jk(form);
    std::vector<std::string> names{"J", "K"};
    return make_signature_variety({jk.J, jk.K}, names, cfg);
}

} // namespace formsym
