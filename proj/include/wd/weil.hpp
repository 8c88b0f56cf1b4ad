#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wd/rational.hpp"

namespace wd {

// Cardinality of the residue field a module lives over. Always >= 2.
class ResidueCard {
public:
    explicit ResidueCard(Integer q) : q_(std::move(q)) {
        if (q_ < 2) throw Error("residue cardinality must be at least 2");
    }
    explicit ResidueCard(long q) : ResidueCard(Integer(q)) {}

    const Integer& value() const noexcept { return q_; }

    // Residue cardinality of the degree-f extension.
    ResidueCard extend(long f) const {
        if (f < 1) throw Error("extension degree must be positive");
        return ResidueCard(integer_pow(q_, static_cast<unsigned long>(f)));
    }

    bool operator==(const ResidueCard&) const = default;

private:
    Integer q_;
};

// An eigenvalue zeta * q^e with zeta a root of unity of angle `zeta` (a
// rational in [0,1), i.e. zeta = exp(2*pi*i*zeta)) and e rational. The
// absolute value is q^e, so the weight is 2e. Monomials form a group under
// multiplication; q itself is not stored and mismatches are detected by the
// module types that carry it.
class WeilMonomial {
public:
    WeilMonomial() : e_(0), zeta_(0) {}
    WeilMonomial(Rational e, Rational zeta) : e_(std::move(e)), zeta_(mod_one(zeta)) {}

    static WeilMonomial q_power(Rational e) { return WeilMonomial(std::move(e), Rational(0)); }
    static WeilMonomial one() { return WeilMonomial(); }

    const Rational& e() const noexcept { return e_; }
    const Rational& zeta() const noexcept { return zeta_; }
    Rational weight() const { return 2 * e_; }

    WeilMonomial operator*(const WeilMonomial& other) const {
        return WeilMonomial(e_ + other.e_, zeta_ + other.zeta_);
    }
    WeilMonomial inverse() const { return WeilMonomial(-e_, -zeta_); }
    WeilMonomial pow(long k) const;

    // All f preimages under restrict_scalars(f): same exponent, the f angles
    // whose f-th multiple is this angle.
    std::vector<WeilMonomial> roots(long f) const;

    // Multiplies |.| by q^{-m}, fixing the root of unity.
    WeilMonomial tate_twist(long m) const { return WeilMonomial(e_ - m, zeta_); }

    // Image under restriction to the degree-f extension: the eigenvalue of
    // Phi^f is zeta^f (q^f)^e, so the exponent relative to the new card q^f
    // is unchanged (weights are preserved) and only the angle multiplies.
    WeilMonomial restrict_scalars(long f) const {
        if (f < 1) throw Error("extension degree must be positive");
        return WeilMonomial(e_, f * zeta_);
    }

    bool operator==(const WeilMonomial&) const = default;
    std::strong_ordering operator<=>(const WeilMonomial& other) const {
        if (int c = cmp(e_, other.e_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (int c = cmp(zeta_, other.zeta_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "zeta:a/b q^e", e.g. "zeta:1/2 q^-3/2".
    std::string to_string() const;
    static WeilMonomial from_string(const std::string& text);

private:
    Rational e_;
    Rational zeta_;
};

} // namespace wd
