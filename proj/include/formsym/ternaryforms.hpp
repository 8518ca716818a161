#ifndef FORMSYM_TERNARYFORMS_HPP
#define FORMSYM_TERNARYFORMS_HPP

#include "formsym/ratfunc.hpp"

#include <array>
#include <stdexcept>

namespace formsym {

struct HessianDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankTooHigh : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inhomogeneous ternary form f(p,q) of declared homogeneous degree n >= 3.
struct TernaryForm {
    MultiPoly f;
    uint32_t degree;
    TernaryForm(MultiPoly poly, uint32_t n);
};

// Polynomial in the jet variables u00..u04 (u00 standing for u itself) times
// a tracked fractional power of u and an integer weight.
struct WeightedFunction {
    MultiPoly body;        // over jet variables; no fractional powers inside
    Rational u_exponent;
    int weight;
};

// Homogeneous form of the given degree in (mu, eta) whose coefficients are
// polynomials in the abstract coefficient variables Q20..Q04.
struct BinaryCoForm {
    MultiPoly poly;        // over {mu, eta, Q20, Q11, ..., Q04}
    uint32_t degree;       // homogeneous (mu, eta)-degree
    int weight;
    uint32_t jet_order;    // total derivative order carried by each Q-monomial
};

// A named relative invariant as a polynomial in the abstract Q variables.
struct RelativeInvariant {
    std::string name;
    MultiPoly q_poly;
    int weight;
    uint32_t jet_order;
};

struct TernaryInvariants {
    std::array<RationalFunction, 8> I;   // I1..I8 restricted to the form, reduced
};

// The names of the jet variables in canonical order.
const std::vector<std::string>& jet_vars();
// The abstract Q-coefficient variable names (with mu, eta in front).
const std::vector<std::string>& coform_vars();

// Q_{k,l} for 0 <= k+l <= 4: the listed mixed formulas, the general pure
// formulas, and Q_{3,1} as the p<->q swap of the listed Q_{1,3} companion.
WeightedFunction q_function(uint32_t k, uint32_t l, uint32_t n);

// Substitute u00 = f, u_{k,l} = the corresponding partial derivative; the
// fractional power is returned unresolved for the caller's ledger.
std::pair<RationalFunction, Rational> restrict_weighted(const WeightedFunction& wf,
                                                        const TernaryForm& form);

BinaryCoForm co_form(uint32_t k, uint32_t n);

BinaryCoForm coform_mul(const BinaryCoForm& a, const BinaryCoForm& b);

// Raw omega-process transvectant (no normalization constant).
BinaryCoForm transvectant(const BinaryCoForm& a, const BinaryCoForm& b, uint32_t r);

// d2, d3, i, j, M1..M5 via the transvectant recipes with the back-solved
// normalization constants, as polynomials in the abstract Q variables.
std::vector<RelativeInvariant> relative_invariants(uint32_t n);

// All twelve restricted Q-polynomials keyed by Q-variable name.
std::map<std::string, MultiPoly> restricted_q_values(const TernaryForm& form);

// I1..I8 restricted to the form, fully reduced; HessianDegenerate when the
// restricted d2 vanishes identically.
TernaryInvariants absolute_invariants(const TernaryForm& form);

} // namespace formsym

#endif
