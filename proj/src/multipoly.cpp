#include "formsym/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace formsym {

uint32_t mono_total_degree(const Monomial& m) {
    uint32_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw std::domain_error("mono_div: not divisible");
        r[i] = a[i] - b[i];
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    auto lex_less = [](const Monomial& x, const Monomial& y, size_t from, size_t to) {
        for (size_t i = from; i < to; ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    };
    auto deg = [](const Monomial& x, size_t from, size_t to) {
        uint32_t d = 0;
        for (size_t i = from; i < to; ++i) d += x[i];
        return d;
    };
    auto grevlex_less = [&](const Monomial& x, const Monomial& y, size_t from, size_t to) -> int {
        uint32_t dx = deg(x, from, to), dy = deg(y, from, to);
        if (dx != dy) return dx < dy ? 1 : -1;
        // reverse lex: larger is the one with SMALLER exponent in the last
        // position where they differ
        for (size_t i = to; i-- > from;)
            if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
        return 0;
    };
    size_t n = a.size();
    switch (kind) {
    case OrderKind::Lex:
        return lex_less(a, b, 0, n);
    case OrderKind::GrLex: {
        uint32_t da = deg(a, 0, n), db = deg(b, 0, n);
        if (da != db) return da < db;
        return lex_less(a, b, 0, n);
    }
    case OrderKind::GrevLex: {
        int c = grevlex_less(a, b, 0, n);
        return c > 0;
    }
    case OrderKind::ElimBlock: {
        int c = grevlex_less(a, b, 0, front);
        if (c) return c > 0;
        c = grevlex_less(a, b, front, n);
        return c > 0;
    }
    }
    return false;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Monomial(p.vars_.size(), 0)] = std::move(c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    MultiPoly p(vars);
    Monomial m(vars.size(), 0);
    m[p.var_index(name)] = 1;
    p.terms_[m] = GaussianRational(1);
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Monomial m, GaussianRational c) {
    MultiPoly p(std::move(vars));
    if (m.size() != p.vars_.size()) throw std::invalid_argument("monomial: exponent size mismatch");
    if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
    return p;
}

size_t MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw std::invalid_argument("unknown variable: " + name);
}

bool MultiPoly::has_var(const std::string& name) const {
    for (const auto& v : vars_)
        if (v == name) return true;
    return false;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_total_degree(terms_.begin()->first) == 0;
}

GaussianRational MultiPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational();
    if (!is_constant()) throw std::domain_error("constant_value: nonconstant polynomial");
    return terms_.begin()->second;
}

uint32_t MultiPoly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
    return d;
}

uint32_t MultiPoly::degree_in(size_t vidx) const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[vidx]);
    return d;
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> merged = a.vars_;
    for (const auto& v : b.vars_)
        if (std::find(merged.begin(), merged.end(), v) == merged.end())
            merged.push_back(v);
    a = a.with_vars(merged);
    b = b.with_vars(merged);
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& newvars) const {
    MultiPoly r(newvars);
    std::vector<size_t> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
        if (it == newvars.end()) {
            if (depends_on(i)) throw std::invalid_argument("with_vars: dropped used variable " + vars_[i]);
            where[i] = SIZE_MAX;
        } else {
            where[i] = (size_t)(it - newvars.begin());
        }
    }
    for (const auto& [m, c] : terms_) {
        Monomial nm(newvars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (m[i]) nm[where[i]] = m[i];
        r.terms_[nm] = c;
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (vars_ != o.vars_) {
        MultiPoly a = *this, b = o;
        align(a, b);
        return a + b;
    }
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars_ != o.vars_) {
        MultiPoly a = *this, b = o;
        align(a, b);
        return a * b;
    }
    MultiPoly r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ == o.vars_) return terms_ == o.terms_;
    MultiPoly a = *this, b = o;
    align(a, b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
    MultiPoly acc = constant(vars_, GaussianRational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    size_t vi = var_index(var);
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[vi] == 0) continue;
        Monomial nm = m;
        uint32_t e = nm[vi]--;
        r.add_term(nm, c * GaussianRational((long long)e));
    }
    return r;
}

GaussianRational MultiPoly::evaluate(const std::map<std::string, GaussianRational>& assignment) const {
    std::vector<GaussianRational> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end()) {
            if (depends_on(i)) throw std::invalid_argument("evaluate: missing assignment for " + vars_[i]);
            vals[i] = GaussianRational();
        } else {
            vals[i] = it->second;
        }
    }
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= vals[i].pow(m[i]);
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
    std::vector<const MultiPoly*> img(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it == images.end()) {
            if (depends_on(i)) throw std::invalid_argument("substitute: missing image for " + vars_[i]);
        } else {
            img[i] = &it->second;
        }
    }
    std::vector<std::string> out_vars;
    for (const auto& [k, v] : images) { out_vars = v.vars(); break; }
    MultiPoly total(out_vars);
    // cache powers per variable
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (const auto& [m, c] : terms_) {
        MultiPoly t = constant(out_vars, c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(out_vars, GaussianRational(1)));
            while (pw.size() <= m[i]) pw.push_back(pw.back() * *img[i]);
            t *= pw[m[i]];
        }
        total += t;
    }
    return total;
}

std::pair<Monomial, GaussianRational> MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

GaussianRational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

MultiPoly MultiPoly::coeff_of_power(size_t vidx, uint32_t k) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[vidx] != k) continue;
        Monomial nm = m;
        nm[vidx] = 0;
        r.terms_[nm] = c;
    }
    return r;
}

MultiPoly MultiPoly::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_term(ord).second.inv());
}

MultiPoly MultiPoly::integer_primitive(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    // clear denominators
    BigInt l(1);
    for (const auto& [m, c] : terms_) {
        l = l * (c.re().den() / BigInt::gcd(l, c.re().den()));
        l = l * (c.im().den() / BigInt::gcd(l, c.im().den()));
    }
    MultiPoly r = scaled(GaussianRational(Rational(l)));
    // divide by Gaussian-integer content
    GaussianRational g;
    for (const auto& [m, c] : r.terms_) {
        g = g.is_zero() ? c : gaussian_int_gcd(g, c);
        if (g.norm() == Rational(1)) break;
    }
    if (!g.is_one()) r = r.scaled(g.inv());
    // canonical unit: rotate so the leading coefficient has arg in [0, pi/2)
    GaussianRational lc = r.leading_term(ord).second;
    for (int k = 0; k < 3 && !(lc.re().sign() > 0 && lc.im().sign() >= 0); ++k) {
        r = r.scaled(GaussianRational::i());
        lc = lc * GaussianRational::i();
    }
    return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
    MultiPoly a = *this, b = d;
    align(a, b);
    MonomialOrder ord = MonomialOrder::grevlex();
    MultiPoly q(a.vars());
    auto [lmb, lcb] = b.leading_term(ord);
    while (!a.is_zero()) {
        auto [lma, lca] = a.leading_term(ord);
        if (!mono_divides(lmb, lma)) throw std::domain_error("exact_div: not divisible");
        MultiPoly t = monomial(a.vars(), mono_div(lma, lmb), lca / lcb);
        q += t;
        a -= t * b;
    }
    return q;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    // grlex descending for readability
    std::vector<const std::pair<const Monomial, GaussianRational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::grlex();
    std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) { return ord.less(y->first, x->first); });
    std::string s;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string cs;
        bool unit_coeff = (c.is_one() || (-c).is_one()) && !mono.empty();
        if (unit_coeff) {
            cs = c.is_one() ? "" : "-";
        } else {
            bool needs_parens = !c.im().is_zero() && !c.re().is_zero() && !mono.empty();
            cs = c.to_string();
            if (needs_parens) cs = "(" + cs + ")";
            if (!mono.empty()) cs += "*";
        }
        std::string term = cs + mono;
        if (s.empty()) {
            s = term;
        } else if (!term.empty() && term[0] == '-') {
            s += term;
        } else {
            s += "+" + term;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// gcd / resultant via univariate views and the subresultant PRS

namespace {

// polynomial in one chosen variable with MultiPoly coefficients (free of it)
std::vector<MultiPoly> uni_coeffs(const MultiPoly& f, size_t vidx) {
    uint32_t d = f.degree_in(vidx);
    std::vector<MultiPoly> cs;
    cs.reserve(d + 1);
    for (uint32_t k = 0; k <= d; ++k) cs.push_back(f.coeff_of_power(vidx, k));
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return cs;
}

MultiPoly uni_assemble(const std::vector<MultiPoly>& cs, const MultiPoly& like, size_t vidx) {
    MultiPoly v = MultiPoly::variable(like.vars(), like.vars()[vidx]);
    MultiPoly r(like.vars());
    for (size_t k = cs.size(); k-- > 0;)
        r = r * v + cs[k].with_vars(like.vars());
    return r;
}

int uni_deg(const std::vector<MultiPoly>& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero()) return (int)i;
    return -1;
}

bool uni_is_zero(const std::vector<MultiPoly>& f) { return uni_deg(f) < 0; }

std::vector<MultiPoly> uni_scale(const std::vector<MultiPoly>& f, const MultiPoly& c) {
    std::vector<MultiPoly> r = f;
    for (auto& x : r) x = x * c;
    return r;
}

std::vector<MultiPoly> uni_exact_div_coeffs(const std::vector<MultiPoly>& f, const MultiPoly& c) {
    std::vector<MultiPoly> r = f;
    for (auto& x : r)
        if (!x.is_zero()) x = x.exact_div(c);
    return r;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
std::vector<MultiPoly> uni_prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
    int db = uni_deg(b);
    const MultiPoly& lb = b[db];
    int da = uni_deg(a);
    int steps = da - db + 1;
    while (true) {
        da = uni_deg(a);
        if (da < db) break;
        // a = lb*a - la*x^(da-db)*b
        const MultiPoly la = a[da];
        std::vector<MultiPoly> next(a.size(), MultiPoly(a[0].vars()));
        for (int i = 0; i <= da; ++i)
            if (!a[i].is_zero()) next[i] = a[i] * lb;
        for (int i = 0; i <= db; ++i)
            if (!b[i].is_zero()) next[i + da - db] -= la * b[i];
        next.resize(da + 1);
        while (next.size() > 1 && next.back().is_zero()) next.pop_back();
        a = std::move(next);
        --steps;
        if (uni_is_zero(a)) break;
    }
    // match the exact prem definition when the loop ran fewer times
    for (; steps > 0; --steps) a = uni_scale(a, lb);
    return a;
}

MultiPoly content_of(const std::vector<MultiPoly>& cs) {
    MultiPoly g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

} // namespace

MultiPoly poly_gcd(MultiPoly a, MultiPoly b) {
    if (a.is_zero() && b.is_zero()) return a;
    MultiPoly::align(a, b);
    MonomialOrder grlex = MonomialOrder::grlex();
    if (a.is_zero()) return b.monic(grlex);
    if (b.is_zero()) return a.monic(grlex);
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.vars(), GaussianRational(1));
    // main variable: last one either polynomial uses
    size_t vidx = SIZE_MAX;
    for (size_t i = a.vars().size(); i-- > 0;) {
        if (a.depends_on(i) || b.depends_on(i)) { vidx = i; break; }
    }
    std::vector<MultiPoly> fa = uni_coeffs(a, vidx), fb = uni_coeffs(b, vidx);
    MultiPoly ca = content_of(fa), cb = content_of(fb);
    MultiPoly cont = poly_gcd(ca, cb);
    fa = uni_exact_div_coeffs(fa, ca);
    fb = uni_exact_div_coeffs(fb, cb);
    if (uni_deg(fa) < uni_deg(fb)) std::swap(fa, fb);
    // subresultant PRS on primitive parts
    MultiPoly one = MultiPoly::constant(a.vars(), GaussianRational(1));
    MultiPoly g = one, h = one;
    while (true) {
        int d = uni_deg(fa) - uni_deg(fb);
        std::vector<MultiPoly> r = uni_prem(fa, fb);
        if (uni_is_zero(r)) break;
        if (uni_deg(r) == 0) {
            // gcd of the primitive parts is trivial
            return cont.monic(grlex);
        }
        fa = fb;
        // divide r by g*h^d
        MultiPoly div = g * h.pow((uint32_t)d);
        fb = uni_exact_div_coeffs(r, div);
        g = fa[uni_deg(fa)];
        if (d >= 1) {
            MultiPoly gp = g.pow((uint32_t)d);
            h = d == 1 ? gp : gp.exact_div(h.pow((uint32_t)(d - 1)));
        }
    }
    std::vector<MultiPoly> res = fb;
    MultiPoly c = content_of(res);
    res = uni_exact_div_coeffs(res, c);
    MultiPoly pp = uni_assemble(res, a, vidx);
    return (cont * pp).monic(grlex);
}

MultiPoly resultant(MultiPoly a, MultiPoly b, const std::string& v) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero input");
    MultiPoly::align(a, b);
    size_t vidx = a.var_index(v);
    std::vector<MultiPoly> fa = uni_coeffs(a, vidx), fb = uni_coeffs(b, vidx);
    int da = uni_deg(fa), db = uni_deg(fb);
    MultiPoly one = MultiPoly::constant(a.vars(), GaussianRational(1));
    if (da == 0 && db == 0) return one;
    if (da == 0) return fa[0].pow((uint32_t)db);
    if (db == 0) return fb[0].pow((uint32_t)da);
    bool negate = false;
    if (da < db) {
        std::swap(fa, fb);
        std::swap(da, db);
        negate = (da % 2) && (db % 2);
    }
    // subresultant resultant (Cohen, alg. 3.3.7 shape)
    MultiPoly g = one, h = one, sign = one;
    if (negate) sign = -sign;
    while (true) {
        da = uni_deg(fa);
        db = uni_deg(fb);
        int d = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        std::vector<MultiPoly> r = uni_prem(fa, fb);
        fa = fb;
        MultiPoly div = g * h.pow((uint32_t)d);
        if (uni_is_zero(r)) {
            if (uni_deg(fa) > 0) return MultiPoly(a.vars()); // common factor: resultant 0
            throw std::logic_error("resultant: unexpected PRS termination");
        }
        fb = uni_exact_div_coeffs(r, div);
        g = fa[uni_deg(fa)];
        if (d >= 1) {
            MultiPoly gp = g.pow((uint32_t)d);
            h = d == 1 ? gp : gp.exact_div(h.pow((uint32_t)(d - 1)));
        }
        if (uni_deg(fb) == 0) {
            // final: h' = lc(fb)^deg(fa) / h^(deg(fa)-1)
            int dfa = uni_deg(fa);
            MultiPoly num = fb[0].pow((uint32_t)dfa);
            MultiPoly res = dfa >= 1 ? num.exact_div(h.pow((uint32_t)(dfa - 1))) : num * h;
            return sign * res;
        }
    }
}

MultiPoly squarefree_part(const MultiPoly& f, const std::string& v) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero input");
    MultiPoly df = f.derivative(v);
    if (df.is_zero()) return f.monic(MonomialOrder::grlex());
    MultiPoly g = poly_gcd(f, df);
    return f.exact_div(g).monic(MonomialOrder::grlex());
}

} // namespace formsym
