#include "wd/gl2.hpp"

namespace wd {

const Rational& GL2Param::lambda_weight() const {
    if (kind_ != GL2Kind::supercuspidal) throw Error("lambda_weight on non-supercuspidal");
    return lambda_weight_;
}

const WeilMonomial& GL2Param::psi() const {
    if (kind_ != GL2Kind::steinberg_twist) throw Error("psi on non-Steinberg parameter");
    return psi1_;
}

const WeilMonomial& GL2Param::psi1() const {
    if (kind_ != GL2Kind::principal_series) throw Error("psi1 on non-principal-series");
    return psi1_;
}

const WeilMonomial& GL2Param::psi2() const {
    if (kind_ != GL2Kind::principal_series) throw Error("psi2 on non-principal-series");
    return psi2_;
}

Rational central_character_weight(const GL2Param& p) {
    switch (p.kind()) {
    case GL2Kind::supercuspidal: return 2 * p.lambda_weight();
    case GL2Kind::steinberg_twist: return 2 * p.psi().weight();
    case GL2Kind::principal_series: return p.psi1().weight() + p.psi2().weight();
    }
    throw Error("unreachable");
}

std::optional<WeilMonomial> central_character(const GL2Param& p) {
    switch (p.kind()) {
    case GL2Kind::supercuspidal: return std::nullopt;
    case GL2Kind::steinberg_twist: return p.psi() * p.psi();
    case GL2Kind::principal_series: return p.psi1() * p.psi2();
    }
    throw Error("unreachable");
}

UnitarityData classify_unitary(const GL2Param& p) {
    Rational cw = central_character_weight(p);
    if (cw != 0)
        throw UnitarityError("central character is not unitary (weight " + rational_to_string(cw) +
                             ")");
    switch (p.kind()) {
    case GL2Kind::supercuspidal: return {Rational(0), p.lambda_weight()};
    case GL2Kind::steinberg_twist: return {Rational(0), p.psi().weight()};
    case GL2Kind::principal_series: {
        Rational w1 = p.psi1().weight();
        if (w1 != -p.psi2().weight())
            throw UnitarityError("principal-series character weights are not opposite");
        Rational t = abs(w1) / 2;
        if (t >= make_rational(1, 2))
            throw UnitarityError("parameter t=" + rational_to_string(t) +
                                 " lies outside the unitary range [0, 1/2)");
        // weight of the unitary character left after stripping |.|^{+-t}
        return {t, w1 >= 0 ? Rational(w1 - 2 * t) : Rational(w1 + 2 * t)};
    }
    }
    throw Error("unreachable");
}

bool is_ramanujan(const GL2Param& p) {
    switch (p.kind()) {
    case GL2Kind::supercuspidal: return p.lambda_weight() == 0;
    case GL2Kind::steinberg_twist: return p.psi().weight() == 0;
    case GL2Kind::principal_series:
        return p.psi1().weight() == 0 && p.psi2().weight() == 0;
    }
    throw Error("unreachable");
}

GL2Param twist(const GL2Param& p, const WeilMonomial& chi) {
    switch (p.kind()) {
    case GL2Kind::supercuspidal:
        return GL2Param::supercuspidal(p.q(), p.lambda_weight() + chi.weight());
    case GL2Kind::steinberg_twist: return GL2Param::steinberg(p.q(), p.psi() * chi);
    case GL2Kind::principal_series:
        return GL2Param::principal_series(p.q(), p.psi1() * chi, p.psi2() * chi);
    }
    throw Error("unreachable");
}

SSModule parameter_module(const GL2Param& p) {
    switch (p.kind()) {
    case GL2Kind::supercuspidal: {
        Rational e = p.lambda_weight() / 2;
        SSModule one = SSModule::block(p.q(), WeilMonomial(e, Rational(0)), 0);
        SSModule two = SSModule::block(p.q(), WeilMonomial(e, make_rational(1, 2)), 0);
        return direct_sum(one, two);
    }
    case GL2Kind::steinberg_twist:
        return SSModule::block(p.q(), p.psi() * WeilMonomial(make_rational(1, 2), Rational(0)), 1);
    case GL2Kind::principal_series:
        return direct_sum(SSModule::block(p.q(), p.psi1(), 0),
                          SSModule::block(p.q(), p.psi2(), 0));
    }
    throw Error("unreachable");
}

Prop5Result prop5_weight_deduce(long i, const Rational& lo, const Rational& hi) {
    if (hi - lo > 1)
        throw Error("interval of length " + rational_to_string(hi - lo) +
                    " exceeds the unitary-dual constraint");
    Rational shifted_lo = lo + i;
    Rational shifted_hi = hi + i;
    Integer n = rational_floor(shifted_lo) + 1;
    if (!(Rational(n) > shifted_lo && Rational(n) < shifted_hi))
        throw Error("no integer twisted weight in (" + rational_to_string(shifted_lo) + ", " +
                    rational_to_string(shifted_hi) + ")");
    long tw = to_long(n);
    return {tw, Rational(tw) - i};
}

RamanujanDeduction ramanujan_deduce(long l, long m, const Rational& bound_exp) {
    if (bound_exp <= 0) throw Error("bound exponent must be positive");
    RamanujanDeduction out;
    // |k - 2| < 4 * bound_exp, k integer.
    Rational lo = 2 - 4 * bound_exp;
    Rational hi = 2 + 4 * bound_exp;
    for (Integer k = rational_floor(lo); Rational(k) < hi; ++k) {
        if (Rational(k) > lo && Rational(k) < hi) out.admissible.push_back(to_long(k));
    }
    auto admits = [&](long x) {
        for (long k : out.admissible)
            if (k == x) return true;
        return false;
    };
    out.ok = admits(l) && admits(m);
    return out;
}

Rational weil_square_descent(const Rational& alpha_sq_weight, long f) {
    if (f < 1) throw Error("extension degree must be positive");
    return alpha_sq_weight;
}

EigenvalueBookkeeping tensor_eigenvalue_bookkeeping(const WeilMonomial& alpha,
                                                    const WeilMonomial& beta,
                                                    const WeilMonomial& gamma,
                                                    const WeilMonomial& delta) {
    EigenvalueBookkeeping out;
    out.a = alpha * gamma;
    out.b = alpha * delta;
    out.c = beta * gamma;
    out.d = beta * delta;
    WeilMonomial prod = gamma * delta;
    out.product_relation_ok = prod.weight() == 2;
    out.alpha_squared = out.a * out.b * prod.inverse();
    return out;
}

} // namespace wd
