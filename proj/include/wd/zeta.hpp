#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wd/ratmat.hpp"
#include "wd/wd_module.hpp"

namespace wd {

// Independently supplied 2-dimensional local factors with the residue degrees
// to apply before tensoring. The factors may start over different residue
// fields; after restriction they must agree.
struct ConjugateFamily {
    std::vector<SSModule> factors;
    std::vector<long> residue_degrees;
};

// restrict each factor by its residue degree, then tensor them all; the
// result has dimension 2^r.
SSModule build_R(const ConjugateFamily& fam);

struct Lemma42Result {
    bool hypotheses_hold;
    bool conclusion_holds;
};

// Hypotheses: v1 (x) v2 pure of weight 2 and both exterior squares pure of
// weight 2. Conclusion: both v_i pure of weight 1. The implication is a
// theorem; this is the checker the enumeration harness drives.
Lemma42Result lemma42_check(const SSModule& v1, const SSModule& v2);

struct Lemma42Scan {
    long pairs = 0;
    long hypothesis_instances = 0;
    long violations = 0;
};

// Exhaustive scan of the implication over all ordered pairs of 2-dimensional
// shapes with half-integer exponents in [-2, 3] and angle zero: one Jordan
// block V_{alpha,1} or a pair of characters.
Lemma42Scan lemma42_scan(const ResidueCard& q);

// Permutations as image arrays: sigma[i] is the image of i (0-based).
using Perm = std::vector<long>;

Perm perm_identity(long r);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
// Cycle notation, 1-based, e.g. "(1 2)(3 4)"; fixed points may be omitted.
Perm perm_from_cycles(const std::string& text, long r);
std::vector<Perm> all_perms(long r);

// Kronecker product of the 2x2 factors in the fixed order.
RatMat rb_connected(const std::vector<RatMat>& gs);

// The 2^r x 2^r operator permuting tensor factors: slot i of the output is
// slot sigma^{-1}(i) of the input. Fixes e_1 (x) ... (x) e_1 pointwise and
// satisfies rb_galois(s) rb_connected(g) rb_galois(s)^{-1}
//   = rb_connected(permute_factors(g, s)).
RatMat rb_galois(const Perm& sigma);

std::vector<RatMat> permute_factors(const std::vector<RatMat>& gs, const Perm& sigma);

// 2^r-dimensional module with its automorphic multiplicity (an input).
struct TensorParameter {
    SSModule module;
    long multiplicity;
};

struct PurityVerdict {
    bool pure;
    std::string witness;
};

// One-dimensional component: the module must be isotypic for a single
// weight-j monomial with no nilpotent part.
PurityVerdict theorem2_isotypic(const SSModule& a, const Rational& j);

// Tensor component: purity of the underlying 2^r-dimensional module
// (multiplicity only rescales the direct sum, which cannot change purity).
PurityVerdict theorem2_tensor(const TensorParameter& tp, const Rational& j);

// det(1 - T Phi | ker N)^{-1}: one linear factor per indecomposable block,
// with inverse root the bottom eigenvalue q^{-t} alpha.
struct LocalLFactor {
    std::vector<std::pair<WeilMonomial, long>> inverse_roots;

    long degree() const;
    // "(1 - zeta:a/b q^{e} T)^{-1}" per factor, multiplicity by repetition.
    std::string to_string() const;

    bool operator==(const LocalLFactor&) const = default;
};

LocalLFactor local_l_factor(const SSModule& a);

} // namespace wd
