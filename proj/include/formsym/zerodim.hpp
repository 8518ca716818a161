#ifndef FORMSYM_ZERODIM_HPP
#define FORMSYM_ZERODIM_HPP

#include "formsym/groebner.hpp"
#include "formsym/interval.hpp"

namespace formsym {

// Value of one coordinate of a solution: exact Gaussian rational when
// identified, otherwise a certified enclosure. `annihilator` is a squarefree
// univariate polynomial (in "t") vanishing at the value.
struct AlgebraicValue {
    bool exact = false;
    GaussianRational value;
    ComplexInterval box;
    MultiPoly annihilator;
};

struct AlgebraicPoint {
    std::vector<AlgebraicValue> coords;   // parallel to the ideal's variables
};

// All solutions of a zero-dimensional system over Q(i), via radicalization,
// a separating element, and certified root isolation of its minimal
// polynomial. Throws NotZeroDimensional when the variety is not finite.
std::vector<AlgebraicPoint> solve_zero_dim(const Ideal& ideal,
                                           const GroebnerConfig& cfg = {},
                                           uint64_t rad_bits = 140);

} // namespace formsym

#endif
