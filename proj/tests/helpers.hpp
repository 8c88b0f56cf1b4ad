#pragma once

#include "wd/wd_module.hpp"

namespace wdt {

inline wd::Rational rat(long n, long d = 1) { return wd::make_rational(n, d); }

// Monomial zeta:zn/zd q^{en/ed}.
inline wd::WeilMonomial wm(long en, long ed = 1, long zn = 0, long zd = 1) {
    return wd::WeilMonomial(rat(en, ed), rat(zn, zd));
}

inline wd::ResidueCard q2() { return wd::ResidueCard(2); }

inline wd::SSModule blk(long en, long ed, long zn, long zd, long t, long mult = 1) {
    return wd::SSModule::block(q2(), wm(en, ed, zn, zd), t, mult);
}

} // namespace wdt
