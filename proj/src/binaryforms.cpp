#include "formsym/binaryforms.hpp"

#include "formsym/roots.hpp"
#include "formsym/zerodim.hpp"

#include <algorithm>

namespace formsym {

namespace {
const std::vector<std::string> VP{"p"};

// fixed probe sequence of small rationals for generic base points
const std::vector<Rational> kProbes = {
    Rational(2),      Rational(3),      Rational(-2),    Rational(5, 2),
    Rational(-3),     Rational(7, 2),   Rational(4),     Rational(-5, 2),
    Rational(9, 2),   Rational(5),      Rational(1, 2),  Rational(-1, 2),
    Rational(7, 3),   Rational(-7, 3),  Rational(11, 2), Rational(6),
    Rational(13, 3),  Rational(-4),     Rational(17, 5), Rational(8),
};

GaussianRational ratio(uint32_t num, uint32_t den) {
    return GaussianRational(Rational((long long)num, (long long)den));
}
}

BinaryForm::BinaryForm(MultiPoly poly, uint32_t n, int k) : f(std::move(poly)), degree(n), weight(k) {
    f = f.with_vars(VP);
    if (f.is_zero()) throw std::invalid_argument("BinaryForm: zero polynomial");
    if (n == 0 || f.degree_in("p") > n)
        throw std::invalid_argument("BinaryForm: declared degree below polynomial degree");
}

std::vector<GaussianRational> BinaryForm::coeffs() const {
    std::vector<GaussianRational> c(degree + 1);
    for (const auto& [m, coef] : f.terms()) c[m[0]] = coef;
    return c;
}

CovariantSet covariants(const BinaryForm& form) {
    const MultiPoly& f = form.f;
    uint32_t n = form.degree;
    MultiPoly f1 = f.derivative("p");
    MultiPoly f2 = f1.derivative("p");
    MultiPoly f3 = f2.derivative("p");
    MultiPoly f4 = f3.derivative("p");

    MultiPoly H = (f * f2 - (f1 * f1).scaled(ratio(n - 1, n))).scaled(ratio(n * (n - 1), 1));
    MultiPoly T = (f * f * f3 - (f * f1 * f2).scaled(ratio(3 * (n - 2), n)) +
                   (f1 * f1 * f1).scaled(ratio(2 * (n - 1) * (n - 2), n * n)))
                      .scaled(-ratio(n * n * (n - 1), 1));
    MultiPoly V = f * f * f * f4 - (f * f * f1 * f3).scaled(ratio(4 * (n - 3), n)) +
                  (f * f1 * f1 * f2).scaled(ratio(6 * (n - 2) * (n - 3), n * n)) -
                  (f1 * f1 * f1 * f1).scaled(ratio(3 * (n - 1) * (n - 2) * (n - 3), n * n * n));
    MultiPoly U = V.scaled(ratio(n * n * n * (n - 1), 1)) -
                  (H * H).scaled(GaussianRational(Rational(3 * (long long)(n - 2), (long long)(n - 1))));
    return {H, T, U};
}

InvariantPair invariants_jk(const BinaryForm& form) {
    CovariantSet cs = covariants(form);
    if (cs.H.is_zero()) throw HessianZero("invariants_jk: Hessian vanishes identically");
    RationalFunction J = reduce_power_fraction(cs.T * cs.T, cs.H, 3);
    RationalFunction K = reduce_power_fraction(cs.U, cs.H, 2);
    return {J, K};
}

SymmetryClass classify(const BinaryForm& form) {
    CovariantSet cs = covariants(form);
    if (cs.H.is_zero()) return {SymmetryTag::TwoDimensional, false};
    RationalFunction J = reduce_power_fraction(cs.T * cs.T, cs.H, 3);
    if (J.is_constant()) return {SymmetryTag::OneDimensional, false};
    RationalFunction K = reduce_power_fraction(cs.U, cs.H, 2);
    return {SymmetryTag::Finite, K.is_constant()};
}

std::pair<MultiPoly, MultiPoly> symmetry_equations(const BinaryForm& form) {
    SymmetryClass cls = classify(form);
    if (cls.tag != SymmetryTag::Finite)
        throw NotFinite("symmetry_equations: symmetry group not finite");
    InvariantPair jk = invariants_jk(form);
    std::vector<std::string> pP{"p", "P"};
    auto lift = [&](const MultiPoly& g) { return g.with_vars(pP); };
    auto swapv = [&](const MultiPoly& g) {
        return g.substitute({{"p", MultiPoly::variable(pP, "P")}});
    };
    MultiPoly A = lift(jk.J.num()), B = lift(jk.J.den());
    MultiPoly C = lift(jk.K.num()), D = lift(jk.K.den());
    MultiPoly eq1 = A * swapv(jk.J.den()) - swapv(jk.J.num()) * B;
    MultiPoly eq2 = swapv(jk.K.num()) * D - C * swapv(jk.K.den());
    return {eq1, eq2};
}

uint32_t index_bound(const BinaryForm& form) {
    SymmetryClass cls = classify(form);
    if (cls.tag != SymmetryTag::Finite)
        throw NotFinite("index_bound: symmetry group not finite");
    return cls.maximal_class ? 6 * form.degree - 12 : 4 * form.degree - 8;
}

uint32_t projective_index(const BinaryForm& form, const GroebnerConfig&) {
    SymmetryClass cls = classify(form);
    if (cls.tag != SymmetryTag::Finite)
        throw NotFinite("projective_index: symmetry group not finite");
    InvariantPair jk = invariants_jk(form);
    const MultiPoly &A = jk.J.num(), &B = jk.J.den();
    const MultiPoly &C = jk.K.num(), &D = jk.K.den();
    std::vector<std::string> VPbig{"P"};
    auto toP = [&](const MultiPoly& g) {
        return g.with_vars(VP).substitute({{"p", MultiPoly::variable(VPbig, "P")}});
    };
    MultiPoly AP = toP(A), BP = toP(B), CP = toP(C), DP = toP(D);

    std::vector<uint32_t> counts;
    for (const Rational& p0r : kProbes) {
        GaussianRational p0(p0r);
        std::map<std::string, GaussianRational> at{{"p", p0}};
        GaussianRational b0 = B.evaluate(at);
        GaussianRational d0 = D.evaluate(at);
        if (b0.is_zero() || d0.is_zero()) continue;
        GaussianRational a0 = A.evaluate(at);
        GaussianRational c0 = C.evaluate(at);
        MultiPoly e1 = BP.scaled(a0) - AP.scaled(b0);
        if (e1.is_zero()) continue;
        MultiPoly h = e1;
        if (!cls.maximal_class) {
            MultiPoly e2 = CP.scaled(d0) - DP.scaled(c0);
            h = poly_gcd(e1, e2);
            if (h.is_constant()) continue;   // lost even the identity: non-generic
        }
        uint32_t cnt = squarefree_part(h, "P").degree_in("P");
        counts.push_back(cnt);
        size_t m = counts.size();
        if (m >= 3 && counts[m - 1] == counts[m - 2] && counts[m - 2] == counts[m - 3])
            return counts.back();
    }
    throw GenericityFailure("projective_index: no stable count across generic base points");
}

MultiPoly apply_mobius_cleared(const MultiPoly& f, uint32_t n,
                               const GaussianRational& a, const GaussianRational& b,
                               const GaussianRational& c, const GaussianRational& d) {
    MultiPoly p = MultiPoly::variable(VP, "p");
    MultiPoly top = p.scaled(a) + MultiPoly::constant(VP, b);
    MultiPoly bot = p.scaled(c) + MultiPoly::constant(VP, d);
    std::vector<GaussianRational> fc(n + 1);
    MultiPoly fp = f.with_vars(VP);
    for (const auto& [m, coef] : fp.terms()) fc[m[0]] = coef;
    MultiPoly acc(VP);
    std::vector<MultiPoly> top_pow{MultiPoly::constant(VP, GaussianRational(1))};
    std::vector<MultiPoly> bot_pow{MultiPoly::constant(VP, GaussianRational(1))};
    for (uint32_t k = 1; k <= n; ++k) {
        top_pow.push_back(top_pow.back() * top);
        bot_pow.push_back(bot_pow.back() * bot);
    }
    for (uint32_t k = 0; k <= n; ++k)
        if (!fc[k].is_zero()) acc += (top_pow[k] * bot_pow[n - k]).scaled(fc[k]);
    return acc;
}

BinaryForm transform_form(const BinaryForm& form, const GaussianRational& a,
                          const GaussianRational& b, const GaussianRational& c,
                          const GaussianRational& d) {
    GaussianRational det = a * d - b * c;
    if (det.is_zero()) throw std::invalid_argument("transform_form: singular matrix");
    MultiPoly img = apply_mobius_cleared(form.f, form.degree, d, -b, -c, a);
    return BinaryForm(img.scaled(det.pow((long long)form.degree).inv()), form.degree, form.weight);
}

RationalFunction compose_with_mobius(const RationalFunction& r, const GaussianRational& a,
                                     const GaussianRational& b, const GaussianRational& c,
                                     const GaussianRational& d) {
    uint32_t t = std::max(r.num().degree_in("p"), r.den().degree_in("p"));
    MultiPoly num = apply_mobius_cleared(r.num(), t, a, b, c, d);
    MultiPoly den = apply_mobius_cleared(r.den(), t, a, b, c, d);
    return reduce_fraction(num, den);
}

// ---------------------------------------------------------------------------
// AlgebraicCoefficient

AlgebraicCoefficient AlgebraicCoefficient::from_exact(GaussianRational v) {
    AlgebraicCoefficient c;
    c.exact = true;
    c.box = ComplexInterval(v);
    c.value = std::move(v);
    return c;
}

AlgebraicCoefficient AlgebraicCoefficient::from_box(ComplexInterval b,
                                                    std::optional<MultiPoly> ann) {
    AlgebraicCoefficient c;
    c.exact = false;
    c.box = std::move(b);
    c.annihilator = std::move(ann);
    return c;
}

AlgebraicCoefficient AlgebraicCoefficient::operator+(const AlgebraicCoefficient& o) const {
    if (exact && o.exact) return from_exact(value + o.value);
    return from_box(box + o.box);
}
AlgebraicCoefficient AlgebraicCoefficient::operator-(const AlgebraicCoefficient& o) const {
    if (exact && o.exact) return from_exact(value - o.value);
    return from_box(box - o.box);
}
AlgebraicCoefficient AlgebraicCoefficient::operator*(const AlgebraicCoefficient& o) const {
    if (exact && o.exact) return from_exact(value * o.value);
    return from_box(box * o.box);
}
AlgebraicCoefficient AlgebraicCoefficient::operator/(const AlgebraicCoefficient& o) const {
    if (exact && o.exact) return from_exact(value / o.value);
    return from_box(box / o.box);
}
AlgebraicCoefficient AlgebraicCoefficient::operator-() const {
    if (exact) return from_exact(-value);
    return from_box(-box, annihilator);
}

std::string AlgebraicCoefficient::to_string() const {
    if (exact) return value.to_string();
    return "~" + box.mid().to_string();
}

// ---------------------------------------------------------------------------
// Mobius

Mobius::Mobius(AlgebraicCoefficient a, AlgebraicCoefficient b,
               AlgebraicCoefficient c, AlgebraicCoefficient d)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(std::move(d)) {
    AlgebraicCoefficient det = alpha * delta - beta * gamma;
    bool zero = det.exact ? det.value.is_zero() : det.box.contains_zero();
    if (zero) throw std::invalid_argument("Mobius: determinant not certified nonzero");
}

Mobius Mobius::from_exact(GaussianRational a, GaussianRational b,
                          GaussianRational c, GaussianRational d) {
    return Mobius(AlgebraicCoefficient::from_exact(std::move(a)),
                  AlgebraicCoefficient::from_exact(std::move(b)),
                  AlgebraicCoefficient::from_exact(std::move(c)),
                  AlgebraicCoefficient::from_exact(std::move(d)));
}

Mobius Mobius::identity() {
    return from_exact(GaussianRational(1), GaussianRational(), GaussianRational(),
                      GaussianRational(1));
}

bool Mobius::is_exact() const {
    return alpha.exact && beta.exact && gamma.exact && delta.exact;
}

Mobius Mobius::canonical() const {
    const AlgebraicCoefficient* lead = nullptr;
    for (const AlgebraicCoefficient* c : {&alpha, &beta, &gamma, &delta}) {
        if (c->exact ? !c->value.is_zero() : !c->box.contains_zero()) { lead = c; break; }
    }
    if (!lead) throw std::logic_error("Mobius: all coefficients vanish");
    AlgebraicCoefficient l = *lead;
    return Mobius(alpha / l, beta / l, gamma / l, delta / l);
}

Mobius Mobius::compose(const Mobius& o) const {
    return Mobius(alpha * o.alpha + beta * o.gamma, alpha * o.beta + beta * o.delta,
                  gamma * o.alpha + delta * o.gamma, gamma * o.beta + delta * o.delta);
}

Mobius Mobius::inverse() const { return Mobius(delta, -beta, -gamma, alpha); }

std::string Mobius::to_string() const {
    auto zero = [](const AlgebraicCoefficient& c) { return c.is_zero_exact(); };
    std::string num, den;
    if (!zero(alpha)) num = alpha.to_string() + "*p";
    if (!zero(beta)) num += (num.empty() ? "" : " + ") + beta.to_string();
    if (num.empty()) num = "0";
    if (!zero(gamma)) den = gamma.to_string() + "*p";
    if (!zero(delta)) den += (den.empty() ? "" : " + ") + delta.to_string();
    if (den == "1") return num;
    return "(" + num + ")/(" + den + ")";
}

bool mobius_equivalent(const Mobius& a, const Mobius& b, uint64_t tol_bits) {
    const AlgebraicCoefficient* u[4] = {&a.alpha, &a.beta, &a.gamma, &a.delta};
    const AlgebraicCoefficient* v[4] = {&b.alpha, &b.beta, &b.gamma, &b.delta};
    Rational tol(BigInt(1), BigInt(1).shl(tol_bits));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            AlgebraicCoefficient m = *u[i] * *v[j] - *u[j] * *v[i];
            if (m.exact) {
                if (!m.value.is_zero()) return false;
            } else {
                if (!m.box.contains_zero()) return false;
                if (m.box.rad() > tol) return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// solve_symmetries

namespace {

// coefficient polynomials C_j(a, b, c) of sum_k f_k (a p + b)^k (c p + 1)^{n-k}
// (chart 2 uses the same with the substitution c -> 1, delta -> 0, i.e.
// denominator p, handled by passing den = p).
std::vector<MultiPoly> ansatz_coeffs(const std::vector<GaussianRational>& fc, uint32_t n,
                                     const std::vector<std::string>& ring, bool chart1) {
    std::vector<std::string> full = ring;
    full.push_back("p");
    MultiPoly p = MultiPoly::variable(full, "p");
    MultiPoly top = MultiPoly::variable(full, "a") * p + MultiPoly::variable(full, "b");
    MultiPoly bot = chart1
        ? MultiPoly::variable(full, "c") * p + MultiPoly::constant(full, GaussianRational(1))
        : p;
    MultiPoly acc(full);
    std::vector<MultiPoly> tp{MultiPoly::constant(full, GaussianRational(1))};
    std::vector<MultiPoly> bp{MultiPoly::constant(full, GaussianRational(1))};
    for (uint32_t k = 1; k <= n; ++k) {
        tp.push_back(tp.back() * top);
        bp.push_back(bp.back() * bot);
    }
    for (uint32_t k = 0; k <= n; ++k)
        if (!fc[k].is_zero()) acc += (tp[k] * bp[n - k]).scaled(fc[k]);
    size_t pidx = full.size() - 1;
    std::vector<MultiPoly> cj;
    for (uint32_t j = 0; j <= n; ++j)
        cj.push_back(acc.coeff_of_power(pidx, j).with_vars(ring));
    return cj;
}

AlgebraicCoefficient coeff_of(const AlgebraicValue& v) {
    if (v.exact) return AlgebraicCoefficient::from_exact(v.value);
    return AlgebraicCoefficient::from_box(v.box, v.annihilator);
}

// interval coefficients of sum_k f_k (a p + b)^k (c p + d)^(n-k)
std::vector<ComplexInterval> cleared_coeffs_iv(const std::vector<GaussianRational>& fc, uint32_t n,
                                               const ComplexInterval& a, const ComplexInterval& b,
                                               const ComplexInterval& c, const ComplexInterval& d) {
    auto binom_coeffs = [](const ComplexInterval& x, const ComplexInterval& y, uint32_t k) {
        // coefficients of (x p + y)^k in p
        std::vector<ComplexInterval> out(k + 1, ComplexInterval(GaussianRational(1)));
        std::vector<ComplexInterval> xp(k + 1, ComplexInterval(GaussianRational(1)));
        std::vector<ComplexInterval> yp(k + 1, ComplexInterval(GaussianRational(1)));
        for (uint32_t i = 1; i <= k; ++i) {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
        }
        BigInt cnk(1);
        for (uint32_t i = 0; i <= k; ++i) {
            ComplexInterval bi{GaussianRational(Rational(cnk))};
            out[i] = bi * xp[i] * yp[k - i];
            cnk = cnk * BigInt((long long)(k - i)) / BigInt((long long)(i + 1));
        }
        return out;
    };
    std::vector<ComplexInterval> total(n + 1, ComplexInterval(GaussianRational()));
    for (uint32_t k = 0; k <= n; ++k) {
        if (fc[k].is_zero()) continue;
        std::vector<ComplexInterval> tk = binom_coeffs(a, b, k);
        std::vector<ComplexInterval> bk = binom_coeffs(c, d, n - k);
        for (uint32_t i = 0; i <= k; ++i)
            for (uint32_t j = 0; j <= n - k; ++j)
                total[i + j] = total[i + j] + tk[i] * bk[j] * ComplexInterval(fc[k]);
    }
    return total;
}

} // namespace

std::vector<Mobius> solve_symmetries(const BinaryForm& form, const GroebnerConfig& cfg,
                                     uint64_t rad_bits) {
    SymmetryClass cls = classify(form);
    if (cls.tag != SymmetryTag::Finite)
        throw NotFinite("solve_symmetries: symmetry group not finite");
    uint32_t n = form.degree;
    std::vector<GaussianRational> fc = form.coeffs();
    uint32_t jstar = 0;
    for (uint32_t j = 0; j <= n; ++j)
        if (!fc[j].is_zero()) jstar = j;

    std::vector<Mobius> out;
    for (int chart = 1; chart <= 2; ++chart) {
        std::vector<std::string> ring =
            chart == 1 ? std::vector<std::string>{"a", "b", "c", "w"}
                       : std::vector<std::string>{"a", "b", "w"};
        std::vector<MultiPoly> cj = ansatz_coeffs(fc, n, ring, chart == 1);
        Ideal sys{ring, {}};
        for (uint32_t j = 0; j <= n; ++j) {
            if (j == jstar) continue;
            MultiPoly g = cj[j].scaled(fc[jstar]) - cj[jstar].scaled(fc[j]);
            if (!g.is_zero()) sys.generators.push_back(g);
        }
        MultiPoly w = MultiPoly::variable(ring, "w");
        MultiPoly sat =
            chart == 1
                ? w * (MultiPoly::variable(ring, "a") -
                       MultiPoly::variable(ring, "b") * MultiPoly::variable(ring, "c")) -
                      MultiPoly::constant(ring, GaussianRational(1))
                : w * MultiPoly::variable(ring, "b") - MultiPoly::constant(ring, GaussianRational(1));
        sys.generators.push_back(sat);
        if (sys.generators.size() == 1) {
            // no constraints besides saturation: would be positive-dimensional
            throw NotFinite("solve_symmetries: degenerate ansatz system");
        }
        std::vector<AlgebraicPoint> pts = solve_zero_dim(sys, cfg, rad_bits);
        for (const auto& pt : pts) {
            AlgebraicCoefficient a = coeff_of(pt.coords[0]);
            AlgebraicCoefficient b = coeff_of(pt.coords[1]);
            AlgebraicCoefficient c = chart == 1 ? coeff_of(pt.coords[2])
                                                : AlgebraicCoefficient::from_exact(GaussianRational(1));
            AlgebraicCoefficient d = chart == 1
                                         ? AlgebraicCoefficient::from_exact(GaussianRational(1))
                                         : AlgebraicCoefficient::from_exact(GaussianRational());
            Mobius m(a, b, c, d);
            // certify: the cleared substitution must be proportional to f
            if (m.is_exact()) {
                MultiPoly img = apply_mobius_cleared(form.f, n, m.alpha.value, m.beta.value,
                                                     m.gamma.value, m.delta.value);
                GaussianRational mu = img.coeff(Monomial{jstar}) / fc[jstar];
                if (mu.is_zero() || img != form.f.scaled(mu))
                    throw std::logic_error("solve_symmetries: exact solution failed verification");
            } else {
                std::vector<ComplexInterval> img = cleared_coeffs_iv(
                    fc, n, m.alpha.interval(), m.beta.interval(), m.gamma.interval(),
                    m.delta.interval());
                Rational tol(BigInt(1), BigInt(1).shl(64));
                for (uint32_t j = 0; j <= n; ++j) {
                    ComplexInterval resid = img[j] * ComplexInterval(fc[jstar]) -
                                            img[jstar] * ComplexInterval(fc[j]);
                    if (!resid.contains_zero() || resid.rad() > tol)
                        throw std::logic_error(
                            "solve_symmetries: interval solution failed certification");
                }
            }
            out.push_back(std::move(m));
        }
    }
    // canonical deterministic order: exact first, then by midpoint tuples
    auto key = [](const Mobius& m) {
        auto mid = [](const AlgebraicCoefficient& c) {
            return std::pair<double, double>(c.box.mid().re().to_double(),
                                             c.box.mid().im().to_double());
        };
        return std::tuple(mid(m.gamma), mid(m.alpha), mid(m.beta), mid(m.delta));
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const Mobius& x, const Mobius& y) { return key(x) < key(y); });
    return out;
}

Mobius to_linear_fractional(const RationalFunction& r) {
    MultiPoly num = r.num().with_vars(VP), den = r.den().with_vars(VP);
    if (num.degree_in("p") > 1 || den.degree_in("p") > 1)
        throw NotLinearFractional("to_linear_fractional: degree above 1 after reduction");
    GaussianRational a = num.coeff(Monomial{1}), b = num.coeff(Monomial{0});
    GaussianRational c = den.coeff(Monomial{1}), d = den.coeff(Monomial{0});
    if ((a * d - b * c).is_zero())
        throw NotLinearFractional("to_linear_fractional: singular (constant) map");
    return Mobius::from_exact(a, b, c, d);
}

uint64_t full_index(uint64_t projective_index, const BinaryForm& form, IndexMode mode) {
    uint64_t l = mode == IndexMode::Complex ? form.degree : (form.degree % 2 == 0 ? 2 : 1);
    return l * projective_index;
}

MatrixSymmetry matrix_symmetry(const BinaryForm& form, const Mobius& m) {
    uint32_t n = form.degree;
    std::vector<GaussianRational> fc = form.coeffs();
    uint32_t jstar = 0;
    for (uint32_t j = 0; j <= n; ++j)
        if (!fc[j].is_zero()) jstar = j;

    MatrixSymmetry out;
    out.mobius = m;
    out.multiplicity = n;

    AlgebraicCoefficient mu_rep;   // the scalar (gamma p + delta)^n f(m(p)) / f(p)
    if (m.is_exact()) {
        MultiPoly img = apply_mobius_cleared(form.f, n, m.alpha.value, m.beta.value,
                                             m.gamma.value, m.delta.value);
        GaussianRational mu = img.coeff(Monomial{jstar}) / fc[jstar];
        if (mu.is_zero() || img != form.f.scaled(mu))
            throw NotASymmetry("matrix_symmetry: map does not stabilize the form");
        mu_rep = AlgebraicCoefficient::from_exact(mu);
    } else {
        std::vector<ComplexInterval> img =
            cleared_coeffs_iv(fc, n, m.alpha.interval(), m.beta.interval(),
                              m.gamma.interval(), m.delta.interval());
        ComplexInterval mu = img[jstar] / ComplexInterval(fc[jstar]);
        Rational tol(BigInt(1), BigInt(1).shl(48));
        for (uint32_t j = 0; j <= n; ++j) {
            ComplexInterval resid = img[j] - mu * ComplexInterval(fc[j]);
            if (!resid.contains_zero())
                throw NotASymmetry("matrix_symmetry: certified residual excludes zero");
            if (resid.rad() > tol)
                throw NotASymmetry("matrix_symmetry: residual too wide to certify");
        }
        mu_rep = AlgebraicCoefficient::from_box(mu);
    }

    // principal n-th root of the representative scalar
    if (mu_rep.exact) {
        ComplexInterval root = principal_nth_root(mu_rep.value, n);
        if (root.is_point())
            out.mu = AlgebraicCoefficient::from_exact(root.mid());
        else
            out.mu = AlgebraicCoefficient::from_box(root);
    } else {
        const ComplexInterval& mu = mu_rep.box;
        // the principal branch must be holomorphic over the enclosure: stay
        // clear of the cut (negative real axis) and of zero
        bool off_cut = mu.re.lo.sign() > 0 || !mu.im.contains_zero();
        RealInterval nrm = mu.norm();
        if (!off_cut || nrm.lo.sign() <= 0)
            throw NotASymmetry("matrix_symmetry: scalar enclosure touches the branch cut");
        GaussianRational mid = mu.mid();
        ComplexInterval root_mid = principal_nth_root(mid, n);
        // |d mu^(1/n) / d mu| <= (1/n) L^((1-n)/n) with L = min |mu|;
        // bound L >= 2^-k and use 2^(k/2+1) as a safe overestimate
        uint64_t k = 0;
        Rational L2 = nrm.lo;
        while (L2 < Rational(1) && k < 4000) { L2 = L2 * Rational(4); k += 2; }
        Rational dbound = Rational(BigInt(1).shl(k / 2 + 1));
        Rational inflate = mu.rad() * dbound;
        ComplexInterval root{RealInterval(root_mid.re.lo - inflate, root_mid.re.hi + inflate),
                             RealInterval(root_mid.im.lo - inflate, root_mid.im.hi + inflate)};
        out.mu = AlgebraicCoefficient::from_box(root);
    }

    const AlgebraicCoefficient* rep[2][2] = {{&m.alpha, &m.beta}, {&m.gamma, &m.delta}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.entry[r][c] = *rep[r][c] / out.mu;
    return out;
}

std::vector<Mobius> exceptional_weight_filter(const BinaryForm& form,
                                              const std::vector<Mobius>& symmetries) {
    uint32_t n = form.degree;
    if (n % 2 != 0 || form.weight != -(int)(n / 2))
        throw NotExceptionalWeight("exceptional_weight_filter: weight is not -n/2 with n even");
    std::vector<GaussianRational> fc = form.coeffs();
    uint32_t jstar = 0;
    for (uint32_t j = 0; j <= n; ++j)
        if (!fc[j].is_zero()) jstar = j;

    std::vector<Mobius> kept;
    for (const Mobius& m : symmetries) {
        if (m.is_exact()) {
            MultiPoly img = apply_mobius_cleared(form.f, n, m.alpha.value, m.beta.value,
                                                 m.gamma.value, m.delta.value);
            GaussianRational mu = img.coeff(Monomial{jstar}) / fc[jstar];
            if (mu.is_zero() || img != form.f.scaled(mu))
                throw NotASymmetry("exceptional_weight_filter: not a symmetry");
            GaussianRational det = m.alpha.value * m.delta.value - m.beta.value * m.gamma.value;
            // unimodular representative satisfies mu' = mu / det^(n/2); keep iff 1
            if (mu == det.pow((long long)(n / 2))) kept.push_back(m);
        } else {
            std::vector<ComplexInterval> img =
                cleared_coeffs_iv(fc, n, m.alpha.interval(), m.beta.interval(),
                                  m.gamma.interval(), m.delta.interval());
            ComplexInterval mu = img[jstar] / ComplexInterval(fc[jstar]);
            AlgebraicCoefficient det = m.alpha * m.delta - m.beta * m.gamma;
            ComplexInterval target = det.interval().pow(n / 2);
            ComplexInterval diff = mu - target;
            if (!diff.contains_zero()) continue;         // certainly filtered out
            kept.push_back(m);                            // equality not refuted
        }
    }
    return kept;
}

} // namespace formsym
