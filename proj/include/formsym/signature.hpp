#ifndef FORMSYM_SIGNATURE_HPP
#define FORMSYM_SIGNATURE_HPP

#include "formsym/binaryforms.hpp"
#include "formsym/groebner.hpp"
#include "formsym/ternaryforms.hpp"

namespace formsym {

struct NameMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SignatureVariety {
    std::vector<std::string> invariant_names;
    std::vector<MultiPoly> generators;      // integer-primitive, over the name variables
    int dimension;
};

struct SymmetryCount {
    uint64_t count;
    std::pair<Rational, Rational> probe;
    bool radical_verified;
};

enum class Equivalence { Equivalent, Inequivalent, Inconclusive };
enum class EquivMode { Complex, Real };

// Elimination ideal of { N_j - I_j D_j , 1 - w * lcm(D_j) } after dropping the
// curve variables and w. When every invariant is constant the signature is a
// point and its defining linear ideal is returned directly.
Ideal signature_ideal(const std::vector<RationalFunction>& invariants,
                      const std::vector<std::string>& names,
                      const GroebnerConfig& cfg = {});

// Variety dimension of the (proper) signature ideal.
int signature_dimension(const Ideal& ideal, const GroebnerConfig& cfg = {});

SignatureVariety make_signature_variety(const std::vector<RationalFunction>& invariants,
                                        const std::vector<std::string>& names,
                                        const GroebnerConfig& cfg = {});

// Exact number of projective symmetries: substitute the probe, saturate by
// the denominators, demand a zero-dimensional radical system and count.
SymmetryCount symmetry_count(const std::vector<RationalFunction>& invariants,
                             const std::pair<Rational, Rational>& probe,
                             const GroebnerConfig& cfg = {});

// The documented probe sequence, retrying on division-by-zero and
// non-zero-dimensional failures.
extern const std::vector<std::pair<Rational, Rational>> kSignatureProbes;
SymmetryCount symmetry_count_auto(const std::vector<RationalFunction>& invariants,
                                  const GroebnerConfig& cfg = {},
                                  std::vector<std::string>* diagnostics = nullptr);

Equivalence equivalence_test(const SignatureVariety& a, const SignatureVariety& b,
                             EquivMode mode = EquivMode::Complex,
                             const GroebnerConfig& cfg = {});

struct SumPowersReport {
    uint32_t n;
    bool i6_minus_i8;
    bool i3_plus_i4_minus_i7;
    bool i2_plus_5i7_minus_16;
    bool quartic_relation;
    bool I1_matches;
    bool I5_matches;
    bool all() const {
        return i6_minus_i8 && i3_plus_i4_minus_i7 && i2_plus_5i7_minus_16 && quartic_relation &&
               I1_matches && I5_matches;
    }
};

// Verifies the four signature relations of the sum-of-powers family as exact
// rational-function identities in (P, Q) = (p^n, q^n).
SumPowersReport sum_of_powers_conditions(uint32_t n);

// Signature variety of a binary form in the (J, K) plane; a single point for
// forms with a one-dimensional symmetry group.
SignatureVariety binary_signature(const BinaryForm& form, const GroebnerConfig& cfg = {});

} // namespace formsym

#endif
