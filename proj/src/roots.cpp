#include "formsym/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

namespace formsym {

namespace {

using CD = std::complex<double>;

double bigint_to_double(const BigInt& x, long long& exp2) {
    uint64_t bl = x.bit_length();
    if (bl <= 53) { exp2 = 0; return (double)x.to_ll(); }
    BigInt top = x.shr(bl - 53);
    exp2 = (long long)(bl - 53);
    return (double)top.to_ll();
}

CD rational_to_cd(const Rational& r) {
    if (r.is_zero()) return {0.0, 0.0};
    long long en, ed;
    double mn = bigint_to_double(r.num(), en);
    double md = bigint_to_double(r.den(), ed);
    long long e = en - ed;
    if (e > 1020) e = 1020;
    if (e < -1020) e = -1020;
    return {std::ldexp(mn / md, (int)e), 0.0};
}

CD gaussian_to_cd(const GaussianRational& z) {
    return {rational_to_cd(z.re()).real(), rational_to_cd(z.im()).real()};
}

CD horner(const std::vector<CD>& c, CD z) {
    CD acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

// Aberth-Ehrlich simultaneous iteration; returns d approximate roots.
std::vector<CD> aberth(const std::vector<CD>& c) {
    size_t d = c.size() - 1;
    std::vector<CD> dc(d);
    for (size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * (double)i;
    double lead = std::abs(c.back());
    double r = 0.0;
    for (size_t i = 0; i < d; ++i) r = std::max(r, std::abs(c[i]) / lead);
    r = 1.0 + r;
    std::vector<CD> z(d);
    for (size_t k = 0; k < d; ++k) {
        double theta = 2.0 * M_PI * (double)k / (double)d + 0.43;
        double rho = r * (0.55 + 0.4 * (double)(k % 5) / 4.0);
        z[k] = std::polar(rho, theta);
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0.0;
        for (size_t i = 0; i < d; ++i) {
            CD p = horner(c, z[i]);
            CD dp = horner(dc, z[i]);
            if (std::abs(dp) < 1e-300) { z[i] += CD(1e-8, 1e-8); continue; }
            CD ratio = p / dp;
            CD sum = 0.0;
            for (size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                CD diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = CD(1e-12, 1e-12);
                sum += 1.0 / diff;
            }
            CD denom = 1.0 - ratio * sum;
            CD corr = std::abs(denom) < 1e-300 ? ratio : ratio / denom;
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

Rational dyadic_of_double(double x, uint64_t bits) {
    // exact binary expansion of the double, then compact
    if (x == 0.0) return Rational(0);
    int e;
    double m = std::frexp(x, &e);   // x = m * 2^e, |m| in [0.5, 1)
    long long mant = (long long)std::ldexp(m, 53);
    Rational r = Rational(BigInt(mant), BigInt(1).shl(53));
    // scale by 2^e
    if (e > 0) r = Rational(r.num().shl((uint64_t)e), r.den());
    else if (e < 0) r = Rational(r.num(), r.den().shl((uint64_t)(-e)));
    return r.dyadic_below(bits);
}

GaussianRational dyadic_of_cd(CD z, uint64_t bits) {
    return {dyadic_of_double(z.real(), bits), dyadic_of_double(z.imag(), bits)};
}

} // namespace

std::vector<GaussianRational> dense_coeffs(const MultiPoly& f, const std::string& var) {
    size_t vi = f.var_index(var);
    for (size_t i = 0; i < f.vars().size(); ++i)
        if (i != vi && f.depends_on(i))
            throw std::invalid_argument("dense_coeffs: polynomial not univariate in " + var);
    uint32_t d = f.degree_in(vi);
    std::vector<GaussianRational> c(d + 1);
    for (const auto& [m, coef] : f.terms()) c[m[vi]] = coef;
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

ComplexInterval eval_interval(const std::vector<GaussianRational>& coeffs, const ComplexInterval& z) {
    ComplexInterval acc{RealInterval(Rational(0)), RealInterval(Rational(0))};
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + ComplexInterval(coeffs[i]);
    return acc;
}

namespace {

GaussianRational eval_exact(const std::vector<GaussianRational>& coeffs, const GaussianRational& z) {
    GaussianRational acc;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

std::vector<GaussianRational> derivative_coeffs(const std::vector<GaussianRational>& c) {
    std::vector<GaussianRational> d(c.size() > 1 ? c.size() - 1 : 0);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * GaussianRational((long long)i);
    return d;
}

// One interval Newton step around the box midpoint; empty optional when the
// derivative interval straddles zero.
std::optional<ComplexInterval> newton_step(const std::vector<GaussianRational>& c,
                                           const std::vector<GaussianRational>& dc,
                                           const ComplexInterval& X, uint64_t outbits) {
    GaussianRational mid = X.mid();
    ComplexInterval fm(eval_exact(c, mid));
    ComplexInterval dfX = eval_interval(dc, X);
    if (dfX.norm().contains_zero()) return std::nullopt;
    ComplexInterval N = ComplexInterval(mid) - fm / dfX;
    return N.round_out(outbits);
}

} // namespace

ComplexInterval refine_root(const std::vector<GaussianRational>& coeffs, ComplexInterval box,
                            uint64_t rad_bits) {
    std::vector<GaussianRational> dc = derivative_coeffs(coeffs);
    Rational target(BigInt(1), BigInt(1).shl(rad_bits));
    uint64_t outbits = 2 * rad_bits + 32;
    for (int iter = 0; iter < 300; ++iter) {
        if (box.rad() <= target) return box;
        auto N = newton_step(coeffs, dc, box, outbits);
        if (!N) throw RootIsolationFailure("refine_root: derivative interval hit zero");
        box = N->meet(box);
    }
    throw RootIsolationFailure("refine_root: no convergence");
}

namespace {

// Try to certify a unique root near the double approximation.
std::optional<ComplexInterval> certify_near(const std::vector<GaussianRational>& c,
                                            const std::vector<GaussianRational>& dc,
                                            CD z) {
    GaussianRational mid = dyadic_of_cd(z, 64);
    for (uint64_t rbits : {44ull, 36ull, 28ull, 20ull, 14ull}) {
        Rational rad(BigInt(1), BigInt(1).shl(rbits));
        ComplexInterval X = ComplexInterval::centered(mid, rad);
        auto N = newton_step(c, dc, X, 2 * rbits + 32);
        if (!N) continue;
        if (N->strictly_inside(X)) return N->meet(X);
    }
    return std::nullopt;
}

} // namespace

std::vector<IsolatedRoot> isolate_roots(const MultiPoly& f, const std::string& var,
                                        uint64_t rad_bits) {
    std::vector<GaussianRational> c = dense_coeffs(f, var);
    if (c.size() == 1) {
        if (c[0].is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
        return {};
    }
    std::vector<GaussianRational> dc = derivative_coeffs(c);
    size_t d = c.size() - 1;

    std::vector<CD> cd(c.size());
    double maxmag = 0.0;
    for (size_t i = 0; i < c.size(); ++i) {
        cd[i] = gaussian_to_cd(c[i]);
        maxmag = std::max(maxmag, std::abs(cd[i]));
    }
    if (maxmag > 0)
        for (auto& x : cd) x /= maxmag;

    std::vector<CD> approx = aberth(cd);

    std::vector<IsolatedRoot> roots;
    for (CD z : approx) {
        auto box = certify_near(c, dc, z);
        if (!box) throw RootIsolationFailure("isolate_roots: certification failed");
        IsolatedRoot r;
        r.box = refine_root(c, *box, rad_bits);
        // exact identification: simplest Gaussian rational in the box
        Rational sre = Rational::simplest_in(r.box.re.lo, r.box.re.hi);
        Rational sim = Rational::simplest_in(r.box.im.lo, r.box.im.hi);
        GaussianRational cand(sre, sim);
        if (eval_exact(c, cand).is_zero()) {
            r.exact = true;
            r.value = cand;
            r.box = ComplexInterval(cand);
        }
        roots.push_back(std::move(r));
    }
    if (roots.size() != d)
        throw RootIsolationFailure("isolate_roots: wrong root count");
    // pairwise disjointness; refine harder when two boxes touch
    for (int round = 0; round < 6; ++round) {
        bool disjoint = true;
        for (size_t i = 0; i < roots.size() && disjoint; ++i)
            for (size_t j = i + 1; j < roots.size() && disjoint; ++j)
                if (roots[i].box.intersects(roots[j].box)) disjoint = false;
        if (disjoint) return roots;
        rad_bits += 64;
        for (auto& r : roots)
            if (!r.exact) r.box = refine_root(c, r.box, rad_bits);
    }
    throw RootIsolationFailure("isolate_roots: boxes failed to separate");
}

ComplexInterval principal_nth_root(const GaussianRational& z, uint32_t n, uint64_t rad_bits) {
    if (z.is_zero()) throw std::invalid_argument("principal_nth_root: zero input");
    if (n == 0) throw std::invalid_argument("principal_nth_root: n = 0");
    if (n == 1) return ComplexInterval(z);
    // exact fast path: z = w^n with all parts rational is common (mu = 1 etc.)
    std::vector<GaussianRational> c(n + 1);
    c[0] = -z;
    c[n] = GaussianRational(1);
    CD zd = gaussian_to_cd(z);
    CD w0 = std::polar(std::pow(std::abs(zd), 1.0 / (double)n), std::arg(zd) / (double)n);
    if (std::abs(w0) < 1e-100)
        throw RootIsolationFailure("principal_nth_root: magnitude underflow");
    std::vector<GaussianRational> dc = derivative_coeffs(c);
    auto box = certify_near(c, dc, w0);
    if (!box) throw RootIsolationFailure("principal_nth_root: certification failed");
    ComplexInterval out = refine_root(c, *box, rad_bits);
    // branch sanity: the enclosed root must still be the principal one
    CD got = gaussian_to_cd(out.mid());
    double want = std::arg(zd) / (double)n;
    double diff = std::remainder(std::arg(got) - want, 2.0 * M_PI);
    if (std::abs(diff) > M_PI / (double)n * 0.5)
        throw RootIsolationFailure("principal_nth_root: branch drifted");
    // exact identification when the principal root is Gaussian rational
    Rational sre = Rational::simplest_in(out.re.lo, out.re.hi);
    Rational sim = Rational::simplest_in(out.im.lo, out.im.hi);
    GaussianRational cand(sre, sim);
    GaussianRational acc(1);
    for (uint32_t k = 0; k < n; ++k) acc *= cand;
    if (acc == z) return ComplexInterval(cand);
    return out;
}

} // namespace formsym
