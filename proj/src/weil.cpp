#include "wd/weil.hpp"

#include <climits>
#include <cstdlib>

namespace wd {

std::string rational_to_string(const Rational& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) s += "/" + x.get_den().get_str();
    return s;
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0) throw Error("malformed rational literal '" + text + "'");
    if (r.get_den() == 0) throw Error("rational with zero denominator '" + text + "'");
    r.canonicalize();
    return r;
}

long to_long(const Integer& x) {
    if (!x.fits_slong_p()) throw Error("integer out of range: " + x.get_str());
    return x.get_si();
}

WeilMonomial WeilMonomial::pow(long k) const {
    return WeilMonomial(k * e_, k * zeta_);
}

std::vector<WeilMonomial> WeilMonomial::roots(long f) const {
    if (f < 1) throw Error("root order must be positive");
    std::vector<WeilMonomial> out;
    out.reserve(static_cast<std::size_t>(f));
    for (long k = 0; k < f; ++k) out.emplace_back(e_, (zeta_ + k) / f);
    return out;
}

std::string WeilMonomial::to_string() const {
    return "zeta:" + rational_to_string(zeta_) + " q^" + rational_to_string(e_);
}

WeilMonomial WeilMonomial::from_string(const std::string& text) {
    const std::string zp = "zeta:";
    auto z = text.find(zp);
    auto sp = text.find(' ');
    if (z != 0 || sp == std::string::npos) throw Error("malformed eigenvalue '" + text + "'");
    auto qp = text.find("q^", sp);
    if (qp == std::string::npos) throw Error("malformed eigenvalue '" + text + "'");
    Rational zeta = rational_from_string(text.substr(zp.size(), sp - zp.size()));
    Rational e = rational_from_string(text.substr(qp + 2));
    return WeilMonomial(e, zeta);
}

} // namespace wd
