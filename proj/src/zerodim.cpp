#include "formsym/zerodim.hpp"

#include "formsym/roots.hpp"

#include <algorithm>

namespace formsym {

namespace {

MultiPoly subst_t(const MultiPoly& mt, const std::vector<std::string>& vars, const std::string& v) {
    // univariate polynomial in "t" rewritten in the ambient variable v
    return mt.substitute({{"t", MultiPoly::variable(vars, v)}});
}

std::vector<GaussianRational> nf_coords(const GroebnerBasis& gb, const MultiPoly& f,
                                        const std::vector<Monomial>& sm) {
    MultiPoly nf = normal_form(f, gb);
    std::vector<GaussianRational> v(sm.size());
    for (size_t i = 0; i < sm.size(); ++i) v[i] = nf.coeff(sm[i]);
    return v;
}

// Solve M x = rhs with square M (columns given), Gaussian elimination.
std::optional<std::vector<GaussianRational>> solve_linear(
    std::vector<std::vector<GaussianRational>> cols,
    std::vector<GaussianRational> rhs) {
    size_t n = cols.size();
    size_t m = rhs.size();
    // build augmented rows
    std::vector<std::vector<GaussianRational>> a(m, std::vector<GaussianRational>(n + 1));
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
        a[r][n] = rhs[r];
    }
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = m;
        for (size_t r = row; r < m; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == m) continue;
        std::swap(a[row], a[piv]);
        GaussianRational inv = a[row][col].inv();
        for (size_t c = col; c <= n; ++c) a[row][c] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            GaussianRational f = a[r][col];
            for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // consistency
    for (size_t r = row; r < m; ++r)
        if (!a[r][n].is_zero()) return std::nullopt;
    std::vector<GaussianRational> x(n);
    for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][n];
    return x;
}

GaussianRational eval_uni_exact(const MultiPoly& uni, const std::string& var,
                                const GaussianRational& z) {
    std::vector<GaussianRational> c = dense_coeffs(uni, var);
    GaussianRational acc;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

} // namespace

std::vector<AlgebraicPoint> solve_zero_dim(const Ideal& ideal, const GroebnerConfig& cfg,
                                           uint64_t rad_bits) {
    const std::vector<std::string>& vars = ideal.vars;
    size_t nv = vars.size();
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), cfg);
    {
        QuotientDim qd = quotient_dimension(gb);
        if (!qd.finite) throw NotZeroDimensional("solve_zero_dim: positive-dimensional system");
        if (qd.count == 0) return {};
    }

    // radicalize: adjoin squarefree parts of every variable's eliminant
    std::vector<MultiPoly> var_min(nv);
    for (int round = 0; round < 16; ++round) {
        bool changed = false;
        Ideal enlarged{vars, {}};
        for (const auto& g : gb.basis) enlarged.generators.push_back(g);
        for (size_t i = 0; i < nv; ++i) {
            MultiPoly m = minimal_polynomial(gb, MultiPoly::variable(vars, vars[i]), "t");
            MultiPoly s = squarefree_part(m, "t");
            var_min[i] = s;
            if (s.degree_in("t") != m.degree_in("t")) {
                enlarged.generators.push_back(subst_t(s, vars, vars[i]));
                changed = true;
            }
        }
        if (!changed) break;
        gb = buchberger(enlarged, MonomialOrder::grevlex(), cfg);
    }

    std::vector<Monomial> sm = standard_monomials(gb);
    size_t D = sm.size();
    if (D == 0) return {};

    // separating element: single variables first, then weighted combinations
    MultiPoly sep(vars);
    MultiPoly mt({"t"});
    bool found = false;
    for (size_t i = 0; i < nv && !found; ++i) {
        sep = MultiPoly::variable(vars, vars[i]);
        mt = minimal_polynomial(gb, sep, "t");
        if (mt.degree_in("t") == D) found = true;
    }
    for (long long j = 1; j <= 12 && !found; ++j) {
        sep = MultiPoly(vars);
        long long w = 1;
        for (size_t i = 0; i < nv; ++i) {
            sep += MultiPoly::variable(vars, vars[i]).scaled(GaussianRational(w));
            w *= j + 1;
        }
        mt = minimal_polynomial(gb, sep, "t");
        if (mt.degree_in("t") == D) found = true;
    }
    if (!found)
        throw std::runtime_error("solve_zero_dim: no separating element found");

    // parametrize coordinates: x_i = h_i(sep) mod ideal
    std::vector<std::vector<GaussianRational>> powers(D);
    {
        MultiPoly pw = MultiPoly::constant(vars, GaussianRational(1));
        for (size_t j = 0; j < D; ++j) {
            MultiPoly nf = normal_form(pw, gb);
            powers[j].resize(D);
            for (size_t k = 0; k < D; ++k) powers[j][k] = nf.coeff(sm[k]);
            pw = nf * sep;
        }
    }
    std::vector<std::vector<GaussianRational>> h(nv);   // dense coeffs of h_i in t
    for (size_t i = 0; i < nv; ++i) {
        auto sol = solve_linear(powers, nf_coords(gb, MultiPoly::variable(vars, vars[i]), sm));
        if (!sol)
            throw std::runtime_error("solve_zero_dim: coordinate not in k[sep] (unexpected for radical ideal)");
        h[i] = *sol;
    }

    std::vector<IsolatedRoot> troots = isolate_roots(mt, "t", rad_bits);

    // per-variable certified root boxes of the eliminants, for exactness checks
    std::vector<std::vector<IsolatedRoot>> var_roots(nv);
    for (size_t i = 0; i < nv; ++i) var_roots[i] = isolate_roots(var_min[i], "t", rad_bits);

    Rational target(BigInt(1), BigInt(1).shl(rad_bits > 10 ? rad_bits - 10 : rad_bits));
    std::vector<AlgebraicPoint> out;
    for (auto& tr : troots) {
        AlgebraicPoint pt;
        pt.coords.resize(nv);
        if (tr.exact) {
            for (size_t i = 0; i < nv; ++i) {
                GaussianRational v;
                for (size_t j = h[i].size(); j-- > 0;) v = v * tr.value + h[i][j];
                pt.coords[i].exact = true;
                pt.coords[i].value = v;
                pt.coords[i].box = ComplexInterval(v);
                pt.coords[i].annihilator = var_min[i];
            }
            out.push_back(std::move(pt));
            continue;
        }
        // interval coordinates; refine tau until every coordinate is tight
        ComplexInterval tau = tr.box;
        std::vector<GaussianRational> mtc = dense_coeffs(mt, "t");
        uint64_t bits = rad_bits;
        for (int tries = 0; tries < 12; ++tries) {
            bool tight = true;
            for (size_t i = 0; i < nv && tight; ++i) {
                ComplexInterval ci = eval_interval(h[i], tau);
                if (ci.rad() > target) tight = false;
            }
            if (tight) break;
            bits += 64;
            tau = refine_root(mtc, tau, bits);
        }
        for (size_t i = 0; i < nv; ++i) {
            ComplexInterval ci = eval_interval(h[i], tau);
            pt.coords[i].box = ci;
            pt.coords[i].annihilator = var_min[i];
            // exact when the box isolates an exact eliminant root
            const IsolatedRoot* hit = nullptr;
            int hits = 0;
            for (const auto& vr : var_roots[i])
                if (vr.box.intersects(ci)) { ++hits; hit = &vr; }
            if (hits == 1 && hit->exact) {
                pt.coords[i].exact = true;
                pt.coords[i].value = hit->value;
                pt.coords[i].box = ComplexInterval(hit->value);
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace formsym
