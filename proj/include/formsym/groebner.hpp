#ifndef FORMSYM_GROEBNER_HPP
#define FORMSYM_GROEBNER_HPP

#include "formsym/multipoly.hpp"

#include <optional>
#include <stdexcept>

namespace formsym {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ImproperIdeal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotZeroDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ideal {
    std::vector<std::string> vars;
    std::vector<MultiPoly> generators;
};

struct GroebnerConfig {
    size_t max_basis = 4000;
    uint32_t max_degree = 200;        // total-degree cap on any reduced S-polynomial
    uint64_t max_reductions = 50'000'000;
};

struct GroebnerBasis {
    std::vector<MultiPoly> basis;     // reduced: monic, pairwise irreducible, sorted by LT
    MonomialOrder order;
    std::vector<std::string> vars;
};

// Unique reduced Groebner basis of the ideal for the given order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerConfig& cfg = {});

// Unique remainder of multivariate division by the (reduced) basis.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

struct QuotientDim {
    bool finite;
    uint64_t count;   // meaningful when finite
};
QuotientDim quotient_dimension(const GroebnerBasis& gb);

// All monomials not divisible by any leading monomial (finite case only).
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, uint64_t cap = 2'000'000);

// Generators of the elimination ideal after dropping the given variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const GroebnerConfig& cfg = {});

// Krull dimension from the initial ideal (maximal independent variable sets).
int variety_dimension(const GroebnerBasis& gb);

// Minimal polynomial (monic, in variable tvar) of `element` in the quotient
// ring; requires a finite quotient.
MultiPoly minimal_polynomial(const GroebnerBasis& gb, const MultiPoly& element,
                             const std::string& tvar);

// Squarefree-eliminant criterion: true iff the minimal polynomial of every
// variable is squarefree (for zero-dimensional ideals this decides radicality).
bool is_radical_zero_dim(const GroebnerBasis& gb);

} // namespace formsym

#endif
