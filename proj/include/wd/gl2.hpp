#pragma once

#include <optional>
#include <vector>

#include "wd/wd_module.hpp"

namespace wd {

enum class GL2Kind { supercuspidal, steinberg_twist, principal_series };

// Local GL(2) parameter. Supercuspidal keeps its 2-dimensional irreducible
// abstract (only the common eigenvalue weight matters downstream); the
// Steinberg twist is psi (x) V_{q^{1/2},1}; principal series is psi1 + psi2.
class GL2Param {
public:
    static GL2Param supercuspidal(ResidueCard q, Rational lambda_weight) {
        return GL2Param(GL2Kind::supercuspidal, std::move(q), std::move(lambda_weight), {}, {});
    }
    static GL2Param steinberg(ResidueCard q, WeilMonomial psi) {
        return GL2Param(GL2Kind::steinberg_twist, std::move(q), 0, std::move(psi), {});
    }
    static GL2Param principal_series(ResidueCard q, WeilMonomial psi1, WeilMonomial psi2) {
        return GL2Param(GL2Kind::principal_series, std::move(q), 0, std::move(psi1),
                        std::move(psi2));
    }

    GL2Kind kind() const noexcept { return kind_; }
    const ResidueCard& q() const noexcept { return q_; }
    const Rational& lambda_weight() const;
    const WeilMonomial& psi() const;
    const WeilMonomial& psi1() const;
    const WeilMonomial& psi2() const;

    bool operator==(const GL2Param&) const = default;

private:
    GL2Param(GL2Kind kind, ResidueCard q, Rational lw, WeilMonomial p1, WeilMonomial p2)
        : kind_(kind), q_(std::move(q)), lambda_weight_(std::move(lw)), psi1_(std::move(p1)),
          psi2_(std::move(p2)) {}

    GL2Kind kind_;
    ResidueCard q_;
    Rational lambda_weight_;
    WeilMonomial psi1_, psi2_;
};

// Complementary-series parameter t in [0, 1/2) (0 means tempered) plus the
// weight of the classifying character datum.
struct UnitarityData {
    Rational t;
    Rational psi_weight;
};

Rational central_character_weight(const GL2Param& p);
// The determinant character, when it is an explicit monomial (not for the
// abstract supercuspidal).
std::optional<WeilMonomial> central_character(const GL2Param& p);

// Throws UnitarityError when the central character is not unitary or the
// principal series falls outside the unitary dual.
UnitarityData classify_unitary(const GL2Param& p);

// Every constituent character has weight zero.
bool is_ramanujan(const GL2Param& p);

GL2Param twist(const GL2Param& p, const WeilMonomial& chi);

// Semistable module attached to the parameter. The supercuspidal case returns
// a representative shadow: two weight-matched characters with the fixed angle
// convention zeta = 0, 1/2 (the abstract datum determines only the weight).
SSModule parameter_module(const GL2Param& p);

struct Prop5Result {
    long twisted_weight;
    Rational lambda_weight;
};

// Interval argument: the twisted weight w + i is an integer in the open
// interval (i + lo, i + hi); with (lo, hi) = (-1/2, 1/2) this forces w = 0.
// Requires hi - lo <= 1; throws if no integer lies in the shifted interval.
Prop5Result prop5_weight_deduce(long i, const Rational& lo, const Rational& hi);

struct RamanujanDeduction {
    bool ok;
    std::vector<long> admissible;
};

// Integers k with |k - 2| / 4 < bound_exp; ok iff both l and m qualify.
RamanujanDeduction ramanujan_deduce(long l, long m, const Rational& bound_exp);

// Weight of a square Weil number is unchanged by base change q -> q^f.
Rational weil_square_descent(const Rational& alpha_sq_weight, long f);

struct EigenvalueBookkeeping {
    WeilMonomial a, b, c, d;
    bool product_relation_ok;
    // a * b * (gamma delta)^{-1}, the square of the first factor's eigenvalue.
    WeilMonomial alpha_squared;
};

// The four products a = alpha gamma, b = alpha delta, c = beta gamma,
// d = beta delta; the product relation asks gamma delta to be a root of unity
// times q (weight 2).
EigenvalueBookkeeping tensor_eigenvalue_bookkeeping(const WeilMonomial& alpha,
                                                    const WeilMonomial& beta,
                                                    const WeilMonomial& gamma,
                                                    const WeilMonomial& delta);

} // namespace wd
