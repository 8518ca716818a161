#ifndef FORMSYM_ROOTS_HPP
#define FORMSYM_ROOTS_HPP

#include "formsym/interval.hpp"
#include "formsym/multipoly.hpp"

#include <stdexcept>

namespace formsym {

struct RootIsolationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IsolatedRoot {
    ComplexInterval box;        // certified to contain exactly one root
    bool exact = false;
    GaussianRational value;     // set when exact
};

// Dense coefficient list (ascending powers) of a univariate polynomial.
std::vector<GaussianRational> dense_coeffs(const MultiPoly& f, const std::string& var);

// Horner evaluation over complex intervals with exact rational coefficients.
ComplexInterval eval_interval(const std::vector<GaussianRational>& coeffs, const ComplexInterval& z);

// All complex roots of a squarefree univariate polynomial over Q(i), each in
// a certified disjoint box of radius <= 2^-rad_bits. Q(i)-rational roots are
// identified exactly. Throws RootIsolationFailure when certification fails.
std::vector<IsolatedRoot> isolate_roots(const MultiPoly& f, const std::string& var,
                                        uint64_t rad_bits = 130);

// Certified principal n-th root of an exact nonzero Gaussian rational
// (argument of the result lies in (-pi/n, pi/n]).
ComplexInterval principal_nth_root(const GaussianRational& z, uint32_t n, uint64_t rad_bits = 130);

// Refine a certified unique-root box of f by interval Newton until the radius
// is at most 2^-rad_bits. The input box must already contract under Newton.
ComplexInterval refine_root(const std::vector<GaussianRational>& coeffs, ComplexInterval box,
                            uint64_t rad_bits);

} // namespace formsym

#endif
