#include "formsym/groebner.hpp"

#include <algorithm>
#include <list>
#include <map>

namespace formsym {

namespace {

struct OrdGreater {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(b, a); }
};

// working polynomial sorted descending under the active order
using WPoly = std::map<Monomial, GaussianRational, OrdGreater>;

WPoly to_wpoly(const MultiPoly& p, const MonomialOrder& ord) {
    WPoly w(OrdGreater{&ord});
    for (const auto& [m, c] : p.terms()) w.emplace(m, c);
    return w;
}

MultiPoly from_wpoly(const WPoly& w, const std::vector<std::string>& vars) {
    MultiPoly p(vars);
    for (const auto& [m, c] : w) p += MultiPoly::monomial(vars, m, c);
    return p;
}

struct Reducer {
    Monomial lm;
    GaussianRational lc;   // Gaussian integer for integer-primitive reducers
    MultiPoly poly;
};

// Normal form of f against the reducers via fraction-free elimination:
// coefficients are kept Gaussian-integral throughout (cross-multiplying by
// lc(g)/gcd as needed) and the accumulated scale is divided out at the end.
// With top_only set, reduction stops at the first irreducible leading term.
MultiPoly reduce_general(const MultiPoly& f, const std::vector<Reducer>& basis,
                         const MonomialOrder& ord, const std::vector<std::string>& vars,
                         uint64_t* budget, bool top_only) {
    if (f.is_zero()) return f.with_vars(vars);
    // clear denominators once up front
    BigInt denlcm(1);
    for (const auto& [m, c] : f.terms()) {
        denlcm = denlcm * (c.re().den() / BigInt::gcd(denlcm, c.re().den()));
        denlcm = denlcm * (c.im().den() / BigInt::gcd(denlcm, c.im().den()));
    }
    GaussianRational scale{Rational(denlcm)};
    WPoly work(OrdGreater{&ord});
    for (const auto& [m, c] : f.terms()) work.emplace(m, c * scale);
    WPoly done(OrdGreater{&ord});

    auto strip_content = [&]() {
        GaussianRational g;
        for (const auto& [m, c] : work) {
            g = g.is_zero() ? c : gaussian_int_gcd(g, c);
            if (g.norm() == Rational(1)) return;
        }
        for (const auto& [m, c] : done) {
            g = g.is_zero() ? c : gaussian_int_gcd(g, c);
            if (g.norm() == Rational(1)) return;
        }
        if (g.is_zero() || g.norm() == Rational(1)) return;
        GaussianRational inv = g.inv();
        for (auto& [m, c] : work) c *= inv;
        for (auto& [m, c] : done) c *= inv;
        scale *= inv;
    };

    int steps_since_strip = 0;
    while (!work.empty()) {
        auto lead = work.begin();
        const Reducer* hit = nullptr;
        for (const auto& g : basis) {
            if (mono_divides(g.lm, lead->first)) { hit = &g; break; }
        }
        if (!hit) {
            if (top_only) break;
            done.emplace(lead->first, lead->second);
            work.erase(lead);
            continue;
        }
        if (budget) {
            if (*budget == 0) throw ResourceLimit("groebner: reduction budget exhausted");
            --*budget;
        }
        GaussianRational c = lead->second;
        GaussianRational d = gaussian_int_gcd(c, hit->lc);
        GaussianRational mult = hit->lc / d;     // exact Gaussian integer
        GaussianRational coef = c / d;           // exact Gaussian integer
        if (!mult.is_one()) {
            for (auto& [m, x] : work) x *= mult;
            for (auto& [m, x] : done) x *= mult;
            scale *= mult;
        }
        Monomial shift = mono_div(lead->first, hit->lm);
        for (const auto& [m, gc] : hit->poly.terms()) {
            Monomial mm = mono_mul(m, shift);
            GaussianRational delta = gc * coef;
            auto it = work.find(mm);
            if (it == work.end()) {
                work.emplace(std::move(mm), -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        if (++steps_since_strip >= 8) {
            strip_content();
            steps_since_strip = 0;
        }
    }
    if (done.empty() && work.empty()) return MultiPoly(vars);
    GaussianRational unscale = scale.inv();
    MultiPoly out(vars);
    for (const auto& [m, c] : done) out += MultiPoly::monomial(vars, m, c * unscale);
    for (const auto& [m, c] : work) out += MultiPoly::monomial(vars, m, c * unscale);
    return out;
}

MultiPoly reduce_full(const MultiPoly& f, const std::vector<Reducer>& basis,
                      const MonomialOrder& ord, const std::vector<std::string>& vars,
                      uint64_t* budget) {
    return reduce_general(f, basis, ord, vars, budget, false);
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    uint32_t deg;
};

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerConfig& cfg) {
    if (ideal.generators.empty())
        return GroebnerBasis{{}, order, ideal.vars};

    uint64_t budget = cfg.max_reductions;
    std::vector<Reducer> basis;
    auto push_basis = [&](MultiPoly p) {
        p = p.integer_primitive(order);
        auto [lm, lc] = p.leading_term(order);
        basis.push_back(Reducer{lm, lc, std::move(p)});
    };

    // seed with the reduced input generators
    for (const auto& g0 : ideal.generators) {
        MultiPoly g = g0.with_vars(ideal.vars);
        g = reduce_full(g, basis, order, ideal.vars, &budget);
        if (!g.is_zero()) push_basis(std::move(g));
    }
    if (basis.empty()) return GroebnerBasis{{}, order, ideal.vars};

    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = mono_lcm(basis[i].lm, basis[j].lm);
        return Pair{i, j, l, mono_total_degree(l)};
    };
    std::list<Pair> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            pairs.push_back(make_pair(i, j));

    auto coprime = [&](size_t i, size_t j) {
        const Monomial &a = basis[i].lm, &b = basis[j].lm;
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k] && b[k]) return false;
        return true;
    };

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree, ties by the order on lcm
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->deg < best->deg ||
                (it->deg == best->deg && order.less(it->lcm, best->lcm)))
                best = it;
        }
        Pair pr = *best;
        pairs.erase(best);

        if (coprime(pr.i, pr.j)) continue;
        // chain criterion: some k with LT(k) | lcm and both (i,k), (j,k) gone
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(basis[k].lm, pr.lcm)) continue;
            bool pending = false;
            for (const auto& q : pairs) {
                if ((q.i == pr.i && q.j == k) || (q.i == k && q.j == pr.i) ||
                    (q.i == pr.j && q.j == k) || (q.i == k && q.j == pr.j)) {
                    pending = true;
                    break;
                }
            }
            if (!pending) chained = true;
        }
        if (chained) continue;

        const Reducer &gi = basis[pr.i], &gj = basis[pr.j];
        GaussianRational d = gaussian_int_gcd(gi.lc, gj.lc);
        MultiPoly spoly =
            gi.poly * MultiPoly::monomial(ideal.vars, mono_div(pr.lcm, gi.lm), gj.lc / d) -
            gj.poly * MultiPoly::monomial(ideal.vars, mono_div(pr.lcm, gj.lm), gi.lc / d);
        MultiPoly red = reduce_general(spoly, basis, order, ideal.vars, &budget, true);
        if (red.is_zero()) continue;
        if (red.total_degree() > cfg.max_degree)
            throw ResourceLimit("groebner: degree cap exceeded");
        size_t newi = basis.size();
        push_basis(std::move(red));
        if (basis.size() > cfg.max_basis)
            throw ResourceLimit("groebner: basis size cap exceeded");
        for (size_t i = 0; i < newi; ++i) pairs.push_back(make_pair(i, newi));
    }

    // minimalize: drop elements whose LT is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (mono_divides(basis[j].lm, basis[i].lm) &&
                !(basis[j].lm == basis[i].lm && j > i))
                keep[i] = false;
        }
    std::vector<Reducer> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // inter-reduce tails to the unique reduced basis
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Reducer> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = reduce_full(minimal[i].poly, others, order, ideal.vars, &budget);
        if (!r.is_zero()) reduced.push_back(r.monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return GroebnerBasis{std::move(reduced), order, ideal.vars};
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
    std::vector<Reducer> rs;
    rs.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        MultiPoly gi = g.integer_primitive(gb.order);
        auto [lm, lc] = gi.leading_term(gb.order);
        rs.push_back(Reducer{lm, lc, std::move(gi)});
    }
    return reduce_full(f.with_vars(gb.vars), rs, gb.order, gb.vars, nullptr);
}

QuotientDim quotient_dimension(const GroebnerBasis& gb) {
    size_t n = gb.vars.size();
    // constant in basis -> unit ideal -> zero quotient
    for (const auto& g : gb.basis)
        if (g.is_constant() && !g.is_zero()) return {true, 0};
    // finite iff each variable appears as a pure power among leading monomials
    std::vector<uint64_t> bound(n, 0);
    std::vector<Monomial> lms;
    for (const auto& g : gb.basis) lms.push_back(g.leading_term(gb.order).first);
    for (const auto& lm : lms) {
        size_t support = 0, where = 0;
        for (size_t i = 0; i < n; ++i)
            if (lm[i]) { ++support; where = i; }
        if (support == 1)
            bound[where] = bound[where] ? std::min<uint64_t>(bound[where], lm[where]) : lm[where];
    }
    for (size_t i = 0; i < n; ++i)
        if (bound[i] == 0) return {false, 0};
    unsigned __int128 box = 1;
    for (size_t i = 0; i < n; ++i) box *= bound[i];
    if (box > 50'000'000) throw ResourceLimit("quotient_dimension: staircase too large");
    // enumerate the staircase
    uint64_t count = 0;
    Monomial m(n, 0);
    // odometer over the box prod bound[i]
    while (true) {
        bool standard = true;
        for (const auto& lm : lms)
            if (mono_divides(lm, m)) { standard = false; break; }
        if (standard) ++count;
        size_t pos = 0;
        while (pos < n) {
            if (++m[pos] < bound[pos]) break;
            m[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return {true, count};
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, uint64_t cap) {
    QuotientDim qd = quotient_dimension(gb);
    if (!qd.finite) throw NotZeroDimensional("standard_monomials: infinite quotient");
    if (qd.count > cap) throw ResourceLimit("standard_monomials: too many");
    size_t n = gb.vars.size();
    std::vector<Monomial> lms;
    for (const auto& g : gb.basis) lms.push_back(g.leading_term(gb.order).first);
    std::vector<uint64_t> bound(n, 0);
    for (const auto& lm : lms) {
        size_t support = 0, where = 0;
        for (size_t i = 0; i < n; ++i)
            if (lm[i]) { ++support; where = i; }
        if (support == 1)
            bound[where] = bound[where] ? std::min<uint64_t>(bound[where], lm[where]) : lm[where];
    }
    std::vector<Monomial> out;
    Monomial m(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& lm : lms)
            if (mono_divides(lm, m)) { standard = false; break; }
        if (standard) out.push_back(m);
        size_t pos = 0;
        while (pos < n) {
            if (++m[pos] < bound[pos]) break;
            m[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    // sort ascending under the basis order for deterministic coordinates
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return gb.order.less(a, b);
    });
    return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const GroebnerConfig& cfg) {
    std::vector<std::string> front, back;
    for (const auto& v : ideal.vars) {
        if (std::find(drop.begin(), drop.end(), v) != drop.end()) front.push_back(v);
        else back.push_back(v);
    }
    if (front.size() != drop.size())
        throw std::invalid_argument("eliminate: drop set not within ambient variables");
    std::vector<std::string> reordered = front;
    reordered.insert(reordered.end(), back.begin(), back.end());
    Ideal re{reordered, {}};
    for (const auto& g : ideal.generators) re.generators.push_back(g.with_vars(reordered));
    GroebnerBasis gb = buchberger(re, MonomialOrder::elimination(front.size()), cfg);
    Ideal out{back, {}};
    for (const auto& g : gb.basis) {
        bool uses_front = false;
        for (size_t i = 0; i < front.size() && !uses_front; ++i)
            if (g.depends_on(i)) uses_front = true;
        if (!uses_front) out.generators.push_back(g.with_vars(back));
    }
    return out;
}

int variety_dimension(const GroebnerBasis& gb) {
    size_t n = gb.vars.size();
    for (const auto& g : gb.basis)
        if (g.is_constant() && !g.is_zero())
            throw ImproperIdeal("variety_dimension: unit ideal");
    if (gb.basis.empty()) return (int)n;
    std::vector<Monomial> lms;
    for (const auto& g : gb.basis) lms.push_back(g.leading_term(gb.order).first);
    // largest subset S of variables such that no leading monomial is
    // supported inside S
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lm : lms) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (lm[i] && !(mask & (1u << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

namespace {

// dense vector of coordinates over the standard-monomial basis
std::vector<GaussianRational> coords_of(const MultiPoly& nf, const std::vector<Monomial>& sm) {
    std::vector<GaussianRational> v(sm.size());
    for (size_t i = 0; i < sm.size(); ++i) v[i] = nf.coeff(sm[i]);
    return v;
}

} // namespace

MultiPoly minimal_polynomial(const GroebnerBasis& gb, const MultiPoly& element,
                             const std::string& tvar) {
    std::vector<Monomial> sm = standard_monomials(gb);
    size_t dim = sm.size();
    std::vector<std::string> tvars{tvar};
    if (dim == 0) return MultiPoly::constant(tvars, GaussianRational(1));

    // rows in echelon form; each row keeps its expression in powers of t
    struct Row {
        std::vector<GaussianRational> v;
        MultiPoly expr; // polynomial in tvar
        size_t pivot;
    };
    std::vector<Row> rows;
    MultiPoly elem = element.with_vars(gb.vars);
    MultiPoly power = MultiPoly::constant(gb.vars, GaussianRational(1));
    for (uint32_t k = 0; k <= dim; ++k) {
        MultiPoly nf = normal_form(power, gb);
        std::vector<GaussianRational> v = coords_of(nf, sm);
        MultiPoly expr = MultiPoly::monomial(tvars, Monomial{k}, GaussianRational(1));
        // eliminate against existing rows
        for (const auto& r : rows) {
            if (v[r.pivot].is_zero()) continue;
            GaussianRational f = v[r.pivot];
            for (size_t i = 0; i < dim; ++i) v[i] -= f * r.v[i];
            expr -= r.expr.scaled(f);
        }
        size_t piv = dim;
        for (size_t i = 0; i < dim; ++i)
            if (!v[i].is_zero()) { piv = i; break; }
        if (piv == dim) {
            // dependence found: expr(t) is the minimal polynomial (monic-ify)
            return expr.monic(MonomialOrder::lex());
        }
        GaussianRational inv = v[piv].inv();
        for (auto& x : v) x *= inv;
        expr = expr.scaled(inv);
        rows.push_back(Row{std::move(v), std::move(expr), piv});
        power = nf * elem;   // stay reduced so sizes do not blow up
    }
    throw std::logic_error("minimal_polynomial: no dependence up to quotient dimension");
}

bool is_radical_zero_dim(const GroebnerBasis& gb) {
    QuotientDim qd = quotient_dimension(gb);
    if (!qd.finite) throw NotZeroDimensional("is_radical_zero_dim: quotient not finite");
    for (const auto& v : gb.vars) {
        MultiPoly x = MultiPoly::variable(gb.vars, v);
        MultiPoly m = minimal_polynomial(gb, x, "t");
        MultiPoly g = poly_gcd(m, m.derivative("t"));
        if (!g.is_constant()) return false;
    }
    return true;
}

} // namespace formsym
