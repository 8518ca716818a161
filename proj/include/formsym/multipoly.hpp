#ifndef FORMSYM_MULTIPOLY_HPP
#define FORMSYM_MULTIPOLY_HPP

#include "formsym/gaussian.hpp"

#include <map>
#include <string>
#include <vector>

namespace formsym {

using Monomial = std::vector<uint32_t>;

uint32_t mono_total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);   // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);   // a / b, requires divisibility
Monomial mono_lcm(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, GrLex, GrevLex, ElimBlock };

// Total monomial order. ElimBlock compares the first `front` variables by
// graded-revlex first, then the rest; it eliminates the front block.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    size_t front = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grlex() { return {OrderKind::GrLex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elimination(size_t front_vars) { return {OrderKind::ElimBlock, front_vars}; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool equal_kind(const MonomialOrder& o) const { return kind == o.kind && front == o.front; }
};

// Multivariate polynomial over Q(i). Canonical: no zero coefficients stored,
// exponent vectors all sized to the variable list.
class MultiPoly {
public:
    MultiPoly() {}
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, GaussianRational c);
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, Monomial m, GaussianRational c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    size_t var_index(const std::string& name) const;   // throws if absent
    bool has_var(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussianRational constant_value() const;   // requires is_constant (zero ok)

    uint32_t total_degree() const;
    uint32_t degree_in(size_t vidx) const;
    uint32_t degree_in(const std::string& name) const { return degree_in(var_index(name)); }
    bool depends_on(size_t vidx) const { return degree_in(vidx) > 0; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly scaled(const GaussianRational& c) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(uint32_t e) const;
    MultiPoly derivative(const std::string& var) const;
    GaussianRational evaluate(const std::map<std::string, GaussianRational>& assignment) const;
    // Substitute every variable by a polynomial; all images must share one
    // variable list, which becomes the result's list.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;
    // Reinterpret over a different variable list (must contain all used vars).
    MultiPoly with_vars(const std::vector<std::string>& newvars) const;

    std::pair<Monomial, GaussianRational> leading_term(const MonomialOrder& ord) const;
    GaussianRational coeff(const Monomial& m) const;
    // Coefficient of v^k viewed as a univariate polynomial in v.
    MultiPoly coeff_of_power(size_t vidx, uint32_t k) const;

    // Leading coefficient scaled to 1 under the given order.
    MultiPoly monic(const MonomialOrder& ord) const;
    // Scale by a nonzero rational and a unit of Z[i] so that coefficients are
    // Gaussian integers with unit content and the leading coefficient (under
    // ord) has re > 0, im >= 0 (or re = 0, im > 0).
    MultiPoly integer_primitive(const MonomialOrder& ord) const;

    // Exact division; throws std::domain_error when not divisible.
    MultiPoly exact_div(const MultiPoly& d) const;

    std::string to_string() const;

    static void align(MultiPoly& a, MultiPoly& b);

private:
    std::vector<std::string> vars_;
    std::map<Monomial, GaussianRational> terms_;

    void add_term(const Monomial& m, const GaussianRational& c);
    friend MultiPoly poly_gcd(MultiPoly a, MultiPoly b);
};

// gcd normalized to leading coefficient 1 (grlex); gcd(0,0) = 0.
MultiPoly poly_gcd(MultiPoly a, MultiPoly b);
// Resultant with respect to v via the subresultant PRS.
MultiPoly resultant(MultiPoly a, MultiPoly b, const std::string& v);
// f / gcd(f, df/dv), monic-normalized.
MultiPoly squarefree_part(const MultiPoly& f, const std::string& v);

} // namespace formsym

#endif
