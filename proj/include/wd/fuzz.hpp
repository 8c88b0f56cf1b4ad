#pragma once

#include <cstdint>

#include "wd/concrete.hpp"
#include "wd/expr.hpp"
#include "wd/json_io.hpp"
#include "wd/rng.hpp"

namespace wd {

struct RunConfig {
    std::uint64_t seed = 1;
    long iterations = 1000;
    long cap = 12;
    Rational weight = 0;
    bool json_output = false;

    void validate() const {
        if (iterations < 1) throw Error("iterations must be at least 1");
        if (cap < 1 || cap > 64) throw Error("dimension cap must lie in [1, 64]");
    }
};

// Sampling grids: exponents are quarter-integers in [-2, 2] (weights are then
// half-integers in [-4, 4]); angles come from a fixed small set of reduced
// fractions.
WeilMonomial random_monomial(Rng& rng);
Rational random_half_integer_weight(Rng& rng);

SSModule random_module(Rng& rng, const ResidueCard& q, long dim_cap);
SSModule random_pure_module(Rng& rng, const ResidueCard& q, const Rational& j, long dim_cap);

// Integer matrix with determinant +-1 (a product of elementary operations).
RatMat random_unimodular(Rng& rng, long n);

// Chains with random piece dimensions and random small-integer n_maps.
GradedModule random_graded_module(Rng& rng, const ResidueCard& q, long dim_cap);

// realize(a) conjugated by a random graded basis change; to_ss is unchanged.
GradedModule conjugated_realization(Rng& rng, const SSModule& a);

Expr random_expr(Rng& rng, long depth);

struct Prop3Outcome {
    long iterations = 0;
    long pure_graded_instances = 0;
    long violations = 0;
    long kernel_failures = 0;
    std::vector<Json> counterexamples;
};

// The filtration harness: sample (module, stable filtration) pairs, check the
// kernel inequality on every pair, and check purity of the total module
// whenever all graded pieces are pure of one common weight. With `mutate` the
// purity predicate is deliberately broken (purity plus indecomposability) to
// demonstrate that the harness can see injected bugs.
Prop3Outcome run_prop3(const RunConfig& cfg, const ResidueCard& q, bool mutate);

struct TensorOracleOutcome {
    long iterations = 0;
    long mismatches = 0;
    std::vector<Json> failures;
};

// Random block pairs pushed through the symbolic tensor and through the
// matrix-level route realize -> tensor_concrete -> to_ss; results must match.
TensorOracleOutcome run_tensor_oracle(const RunConfig& cfg, const ResidueCard& q);

} // namespace wd
