#pragma once

#include <gmpxx.h>

#include <string>

#include "wd/error.hpp"

namespace wd {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Integer rational_floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Representative of x mod 1 in [0, 1).
inline Rational mod_one(const Rational& x) {
    return x - Rational(rational_floor(x));
}

// "p" or "p/r"; used for the e and zeta fields of serialized eigenvalues.
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& text);

// Checked narrowing for multiplicities and dimensions read from JSON.
long to_long(const Integer& x);

inline Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

} // namespace wd
