#ifndef FORMSYM_BINARYFORMS_HPP
#define FORMSYM_BINARYFORMS_HPP

#include "formsym/interval.hpp"
#include "formsym/ratfunc.hpp"
#include "formsym/groebner.hpp"

#include <optional>

namespace formsym {

struct HessianZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotASymmetry : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotLinearFractional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotExceptionalWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GenericityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inhomogeneous binary form: f(p) with declared homogeneous degree n >= deg f.
struct BinaryForm {
    MultiPoly f;        // univariate in "p"
    uint32_t degree;    // n
    int weight = 0;
    BinaryForm(MultiPoly poly, uint32_t n, int k = 0);
    std::vector<GaussianRational> coeffs() const;   // a_0..a_n
};

struct CovariantSet {
    MultiPoly H, T, U;
};

struct InvariantPair {
    RationalFunction J, K;
};

enum class SymmetryTag { TwoDimensional, OneDimensional, Finite };

struct SymmetryClass {
    SymmetryTag tag;
    bool maximal_class = false;
};

// Exact Gaussian rational or a certified enclosure, optionally with a
// squarefree annihilating polynomial (univariate in "t").
struct AlgebraicCoefficient {
    bool exact = true;
    GaussianRational value;
    ComplexInterval box;
    std::optional<MultiPoly> annihilator;

    AlgebraicCoefficient() : box(GaussianRational()) {}
    static AlgebraicCoefficient from_exact(GaussianRational v);
    static AlgebraicCoefficient from_box(ComplexInterval b,
                                         std::optional<MultiPoly> ann = std::nullopt);

    const ComplexInterval& interval() const { return box; }
    bool is_zero_exact() const { return exact && value.is_zero(); }

    AlgebraicCoefficient operator+(const AlgebraicCoefficient& o) const;
    AlgebraicCoefficient operator-(const AlgebraicCoefficient& o) const;
    AlgebraicCoefficient operator*(const AlgebraicCoefficient& o) const;
    AlgebraicCoefficient operator/(const AlgebraicCoefficient& o) const;
    AlgebraicCoefficient operator-() const;

    std::string to_string() const;
};

// Projective linear-fractional map p -> (alpha p + beta)/(gamma p + delta).
// The stored representative is kept as constructed; canonical() rescales the
// first nonzero coefficient to 1 (used for equality and deduplication).
struct Mobius {
    AlgebraicCoefficient alpha, beta, gamma, delta;

    Mobius() {}
    Mobius(AlgebraicCoefficient a, AlgebraicCoefficient b,
           AlgebraicCoefficient c, AlgebraicCoefficient d);
    static Mobius from_exact(GaussianRational a, GaussianRational b,
                             GaussianRational c, GaussianRational d);
    static Mobius identity();

    bool is_exact() const;
    Mobius canonical() const;
    Mobius compose(const Mobius& o) const;   // this after o
    Mobius inverse() const;
    std::string to_string() const;
};

// Same projective map up to scalar, decided exactly for exact inputs and by
// interval separation otherwise (true = certainly equal within tolerance).
bool mobius_equivalent(const Mobius& a, const Mobius& b, uint64_t tol_bits = 64);

struct MatrixSymmetry {
    Mobius mobius;
    AlgebraicCoefficient mu;          // principal n-th root of the rep scalar
    AlgebraicCoefficient entry[2][2]; // representative / mu
    uint32_t multiplicity;            // l of the full complex index
};

enum class IndexMode { Complex, Real };

CovariantSet covariants(const BinaryForm& form);
InvariantPair invariants_jk(const BinaryForm& form);
SymmetryClass classify(const BinaryForm& form);

// Eq1 = A(p)B(P) - A(P)B(p), Eq2 = C(P)D(p) - C(p)D(P), expanded in (p, P).
std::pair<MultiPoly, MultiPoly> symmetry_equations(const BinaryForm& form);

uint32_t index_bound(const BinaryForm& form);

// Number of Moebius symmetries, by counting distinct common roots of the
// symmetry equations at generic rational base points (3 stable probes).
uint32_t projective_index(const BinaryForm& form, const GroebnerConfig& cfg = {});

// Explicit symmetry group via the coefficient-matching ansatz in two charts.
std::vector<Mobius> solve_symmetries(const BinaryForm& form, const GroebnerConfig& cfg = {},
                                     uint64_t rad_bits = 140);

Mobius to_linear_fractional(const RationalFunction& r);

uint64_t full_index(uint64_t projective_index, const BinaryForm& form, IndexMode mode);

MatrixSymmetry matrix_symmetry(const BinaryForm& form, const Mobius& m);

std::vector<Mobius> exceptional_weight_filter(const BinaryForm& form,
                                              const std::vector<Mobius>& symmetries);

// sum_k a_k (alpha p + beta)^k (gamma p + delta)^(n-k): the denominator-cleared
// substitution of a Moebius map into the degree-n form.
MultiPoly apply_mobius_cleared(const MultiPoly& f, uint32_t n,
                               const GaussianRational& a, const GaussianRational& b,
                               const GaussianRational& c, const GaussianRational& d);

// Image form f_bar with f(p) = (gamma p + delta)^n f_bar((alpha p+beta)/(gamma p+delta)).
BinaryForm transform_form(const BinaryForm& form, const GaussianRational& a,
                          const GaussianRational& b, const GaussianRational& c,
                          const GaussianRational& d);

// J or K composed with the Moebius map (exact coefficients), fully reduced.
RationalFunction compose_with_mobius(const RationalFunction& r, const GaussianRational& a,
                                     const GaussianRational& b, const GaussianRational& c,
                                     const GaussianRational& d);

} // namespace formsym

#endif
