#include "formsym/ternaryforms.hpp"

#include <algorithm>

namespace formsym {

namespace {

const std::vector<std::string> kJetVars = {
    "u00", "u10", "u01", "u20", "u11", "u02",
    "u30", "u21", "u12", "u03", "u40", "u31", "u22", "u13", "u04"};

const std::vector<std::string> kQNames = {
    "Q20", "Q11", "Q02", "Q30", "Q21", "Q12", "Q03", "Q40", "Q31", "Q22", "Q13", "Q04"};

std::vector<std::string> make_coform_vars() {
    std::vector<std::string> v{"mu", "eta"};
    v.insert(v.end(), kQNames.begin(), kQNames.end());
    return v;
}
const std::vector<std::string> kCoformVars = make_coform_vars();

uint32_t q_order(const std::string& name) {
    return (uint32_t)(name[1] - '0') + (uint32_t)(name[2] - '0');
}

MultiPoly jv(const std::string& name) { return MultiPoly::variable(kJetVars, name); }

GaussianRational rat(long long n, long long d = 1) { return GaussianRational(Rational(n, d)); }

// falling factorial (n-j)(n-j-1)...(n-k+1), k-j factors; empty product = 1
Rational falling(long long n, long long j, long long k) {
    Rational acc(1);
    for (long long t = n - j; t > n - k; --t) acc *= Rational(t);
    return acc;
}

WeightedFunction pure_q(uint32_t k, bool in_p, uint32_t n) {
    // (Qk0)/(Q0k): sum_j (-1)^(k-j) C(k,j) (n-j)!/(n-k)! u^(j-1) (u_first/n)^(k-j) u_j
    const std::string first = in_p ? "u10" : "u01";
    auto ujet = [&](uint32_t j) { return in_p ? "u" + std::to_string(j) + "0"
                                              : "u0" + std::to_string(j); };
    MultiPoly body(kJetVars);
    Rational binom(1);
    for (uint32_t j = 0; j <= k; ++j) {
        // C(k,j) computed incrementally
        if (j > 0) binom = binom * Rational((long long)(k - j + 1)) / Rational((long long)j);
        Rational coef = binom * falling(n, j, k) * Rational(1, (long long)n).pow((long long)(k - j));
        if ((k - j) % 2) coef = -coef;
        if (coef.is_zero()) continue;
        MultiPoly term = MultiPoly::constant(kJetVars, GaussianRational(coef));
        if (j == 0) {
            // u^(j-1) * u_{0} = u^0: no jet factor at all
        } else {
            term = term * jv("u00").pow(j - 1) * jv(ujet(j));
        }
        term = term * jv(first).pow(k - j);
        body += term;
    }
    return {body, Rational((long long)k * (1 - (long long)n), (long long)n), 0};
}

WeightedFunction swap_pq(const WeightedFunction& wf) {
    std::map<std::string, MultiPoly> images;
    for (const auto& v : kJetVars) {
        std::string sw = std::string("u") + v[2] + v[1];
        images[v] = MultiPoly::variable(kJetVars, sw);
    }
    return {wf.body.substitute(images), wf.u_exponent, wf.weight};
}

} // namespace

const std::vector<std::string>& jet_vars() { return kJetVars; }
const std::vector<std::string>& coform_vars() { return kCoformVars; }

TernaryForm::TernaryForm(MultiPoly poly, uint32_t n) : f(std::move(poly)), degree(n) {
    f = f.with_vars({"p", "q"});
    if (f.is_zero()) throw std::invalid_argument("TernaryForm: zero polynomial");
    if (n < 3) throw std::invalid_argument("TernaryForm: degree must be at least 3");
    if (f.total_degree() > n)
        throw std::invalid_argument("TernaryForm: declared degree below total degree");
}

WeightedFunction q_function(uint32_t k, uint32_t l, uint32_t n) {
    if (k + l > 4) throw OutOfRange("q_function: only k+l <= 4 is supported");
    Rational e((long long)(k + l) * (1 - (long long)n), (long long)n);
    auto r = [&](long long num, long long den) { return rat(num, den); };
    long long N = n;
    if (l == 0 && k == 0) {
        return {MultiPoly::constant(kJetVars, GaussianRational(1)), Rational(0), 0};
    }
    if (l == 0) return pure_q(k, true, n);
    if (k == 0) return pure_q(l, false, n);

    MultiPoly u = jv("u00");
    if (k == 1 && l == 1) {
        MultiPoly body = jv("u11") * u - (jv("u10") * jv("u01")).scaled(r(N - 1, N));
        return {body, e, 0};
    }
    if (k == 1 && l == 2) {
        MultiPoly body = jv("u12") * u.pow(2) -
                         ((jv("u02") * jv("u10") + (jv("u11") * jv("u01")).scaled(rat(2))) * u)
                             .scaled(r(N - 2, N)) +
                         (jv("u01").pow(2) * jv("u10")).scaled(r(2 * (N - 1) * (N - 2), N * N));
        return {body, e, 0};
    }
    if (k == 2 && l == 1) {
        MultiPoly body = jv("u21") * u.pow(2) -
                         ((jv("u20") * jv("u01") + (jv("u11") * jv("u10")).scaled(rat(2))) * u)
                             .scaled(r(N - 2, N)) +
                         (jv("u10").pow(2) * jv("u01")).scaled(r(2 * (N - 1) * (N - 2), N * N));
        return {body, e, 0};
    }
    if (k == 1 && l == 3) {
        MultiPoly body =
            jv("u13") * u.pow(3) -
            ((jv("u10") * jv("u03") + (jv("u12") * jv("u01")).scaled(rat(3))) * u.pow(2))
                .scaled(r(N - 3, N)) +
            ((jv("u01").pow(2) * jv("u11") + jv("u10") * jv("u01") * jv("u02")) * u)
                .scaled(r(3 * (N - 3) * (N - 2), N * N)) -
            (jv("u01").pow(3) * jv("u10")).scaled(r(3 * (N - 1) * (N - 2) * (N - 3), N * N * N));
        return {body, e, 0};
    }
    if (k == 3 && l == 1) return swap_pq(q_function(1, 3, n));
    if (k == 2 && l == 2) {
        MultiPoly body =
            jv("u22") * u.pow(3) -
            ((jv("u21") * jv("u01") + jv("u12") * jv("u10")) * u.pow(2)).scaled(r(2 * (N - 3), N)) +
            ((jv("u10").pow(2) * jv("u02") + (jv("u10") * jv("u01") * jv("u11")).scaled(rat(4)) +
              jv("u01").pow(2) * jv("u20")) *
             u)
                .scaled(r((N - 3) * (N - 2), N * N)) -
            (jv("u10").pow(2) * jv("u01").pow(2))
                .scaled(r(3 * (N - 1) * (N - 2) * (N - 3), N * N * N));
        return {body, e, 0};
    }
    throw OutOfRange("q_function: unsupported index pair");
}

std::pair<RationalFunction, Rational> restrict_weighted(const WeightedFunction& wf,
                                                        const TernaryForm& form) {
    std::vector<std::string> pq{"p", "q"};
    std::map<std::string, MultiPoly> images;
    for (const auto& v : kJetVars) {
        uint32_t dk = (uint32_t)(v[1] - '0'), dl = (uint32_t)(v[2] - '0');
        MultiPoly g = form.f;
        for (uint32_t t = 0; t < dk; ++t) g = g.derivative("p");
        for (uint32_t t = 0; t < dl; ++t) g = g.derivative("q");
        images[v] = g.with_vars(pq);
    }
    return {RationalFunction::from_poly(wf.body.substitute(images)), wf.u_exponent};
}

BinaryCoForm co_form(uint32_t k, uint32_t n) {
    if (k < 2 || k > 4) throw OutOfRange("co_form: k must be 2, 3 or 4");
    if (n < 3) throw std::invalid_argument("co_form: degree must be at least 3");
    MultiPoly mu = MultiPoly::variable(kCoformVars, "mu");
    MultiPoly eta = MultiPoly::variable(kCoformVars, "eta");
    MultiPoly acc(kCoformVars);
    BigInt binom(1);
    for (uint32_t a = 0; a <= k; ++a) {
        if (a > 0) binom = binom * BigInt((long long)(k - a + 1)) / BigInt((long long)a);
        std::string qn = "Q" + std::to_string(k - a) + std::to_string(a);
        acc += MultiPoly::variable(kCoformVars, qn).scaled(GaussianRational(Rational(binom))) *
               mu.pow(k - a) * eta.pow(a);
    }
    return {acc, k, 0, k};
}

BinaryCoForm coform_mul(const BinaryCoForm& a, const BinaryCoForm& b) {
    return {a.poly * b.poly, a.degree + b.degree, a.weight + b.weight, a.jet_order + b.jet_order};
}

BinaryCoForm transvectant(const BinaryCoForm& a, const BinaryCoForm& b, uint32_t r) {
    if (r > a.degree || r > b.degree)
        throw RankTooHigh("transvectant: rank exceeds a form degree");
    // omega process: sum_s (-1)^s C(r,s) (d^r a / dmu^(r-s) deta^s)(d^r b / dmu^s deta^(r-s))
    auto deriv = [&](const MultiPoly& f, uint32_t dmu, uint32_t deta) {
        MultiPoly g = f;
        for (uint32_t t = 0; t < dmu; ++t) g = g.derivative("mu");
        for (uint32_t t = 0; t < deta; ++t) g = g.derivative("eta");
        return g;
    };
    MultiPoly acc(kCoformVars);
    BigInt binom(1);
    for (uint32_t s = 0; s <= r; ++s) {
        if (s > 0) binom = binom * BigInt((long long)(r - s + 1)) / BigInt((long long)s);
        MultiPoly term = deriv(a.poly, r - s, s) * deriv(b.poly, s, r - s);
        term = term.scaled(GaussianRational(Rational((s % 2) ? -binom : binom)));
        acc += term;
    }
    return {acc, a.degree + b.degree - 2 * r, a.weight + b.weight + (int)r,
            a.jet_order + b.jet_order};
}

std::vector<RelativeInvariant> relative_invariants(uint32_t n) {
    BinaryCoForm P2 = co_form(2, n), P3 = co_form(3, n), P4 = co_form(4, n);
    BinaryCoForm H3 = transvectant(P3, P3, 2);
    BinaryCoForm H4 = transvectant(P4, P4, 2);
    BinaryCoForm T4 = transvectant(H4, P4, 1);
    BinaryCoForm S = transvectant(H4, coform_mul(P3, P3), 3);
    BinaryCoForm P2sq = coform_mul(P2, P2);
    BinaryCoForm P2cb = coform_mul(P2sq, P2);

    // weights of the classical relative invariants (mu,eta-degree-0 forms)
    struct Recipe {
        const char* name;
        BinaryCoForm tv;
        Rational constant;
        int weight;
    };
    // normalization constants back-solved against the explicit classical
    // expansions (signs fixed by the computed fixtures of the source corpus)
    std::vector<Recipe> recipes;
    recipes.push_back({"d2", transvectant(P2, P2, 2), Rational(-1, 8), 2});
    recipes.push_back({"d3", transvectant(H3, H3, 2), Rational(-1, 10368), 6});
    recipes.push_back({"i", transvectant(P4, P4, 4), Rational(1, 1152), 4});
    recipes.push_back({"j", transvectant(H4, P4, 4), Rational(1, 497664), 6});
    recipes.push_back({"M1", transvectant(H3, P2, 2), Rational(1, 288), 4});
    recipes.push_back({"M2", transvectant(coform_mul(P3, P3), P2cb, 6), Rational(1, 103680), 6});
    recipes.push_back({"M3", transvectant(P4, P2sq, 4), Rational(1, 576), 4});
    recipes.push_back({"M4", transvectant(T4, P2cb, 6), Rational(1, 1194393600), 9});
    recipes.push_back({"M5", transvectant(S, P4, 4), Rational(1, 238878720), 9});

    std::vector<RelativeInvariant> out;
    for (auto& rec : recipes) {
        if (rec.tv.degree != 0)
            throw std::logic_error(std::string("relative_invariants: ") + rec.name +
                                   " is not an invariant");
        MultiPoly q = rec.tv.poly.scaled(GaussianRational(rec.constant)).with_vars(kQNames);
        out.push_back(RelativeInvariant{rec.name, q, rec.weight, rec.tv.jet_order});
    }
    return out;
}

std::map<std::string, MultiPoly> restricted_q_values(const TernaryForm& form) {
    std::map<std::string, MultiPoly> out;
    for (const auto& qn : kQNames) {
        uint32_t k = (uint32_t)(qn[1] - '0'), l = (uint32_t)(qn[2] - '0');
        auto [rf, e] = restrict_weighted(q_function(k, l, form.degree), form);
        out[qn] = rf.num();   // restriction of a jet polynomial is a polynomial
    }
    return out;
}

TernaryInvariants absolute_invariants(const TernaryForm& form) {
    std::map<std::string, MultiPoly> qv = restricted_q_values(form);
    std::vector<RelativeInvariant> rel = relative_invariants(form.degree);
    std::map<std::string, const RelativeInvariant*> byname;
    for (const auto& r : rel) byname[r.name] = &r;

    std::map<std::string, MultiPoly> R;
    for (const auto& r : rel) R[r.name] = r.q_poly.substitute(qv);

    const MultiPoly& d2 = R.at("d2");
    if (d2.is_zero())
        throw HessianDegenerate("absolute_invariants: restricted d2 vanishes identically");

    // ratio table: numerator name, its power, d2 power
    struct Ratio {
        const char* num;
        uint32_t pow;
        uint32_t d2pow;
    };
    const std::array<Ratio, 8> table{{{"M1", 1, 2},
                                      {"M2", 1, 3},
                                      {"d3", 1, 3},
                                      {"i", 1, 2},
                                      {"j", 1, 3},
                                      {"M4", 2, 9},
                                      {"M3", 1, 2},
                                      {"M5", 2, 9}}};
    TernaryInvariants out;
    for (size_t t = 0; t < 8; ++t) {
        const RelativeInvariant* ri = byname.at(table[t].num);
        // ledger: the u-exponents and weights must cancel exactly
        long long num_order = (long long)ri->jet_order * table[t].pow;
        long long den_order = 4ll * table[t].d2pow;
        long long num_weight = (long long)ri->weight * table[t].pow;
        long long den_weight = 2ll * table[t].d2pow;
        if (num_order != den_order || num_weight != den_weight)
            throw std::logic_error("absolute_invariants: exponent/weight ledger mismatch");
        out.I[t] = reduce_power_fraction(R.at(table[t].num).pow(table[t].pow), d2, table[t].d2pow);
    }
    return out;
}

} // namespace formsym
