#include "wd/jordan.hpp"

namespace wd {

bool is_nilpotent(const RatMat& n) {
    if (!n.is_square()) return false;
    RatMat p = n;
    for (long k = 1; k <= n.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * n;
    }
    return p.is_zero() || n.rows() == 0;
}

bool is_unipotent(const RatMat& u) {
    if (!u.is_square()) return false;
    return is_nilpotent(u - RatMat::identity(u.rows()));
}

JordanChevalley jordan_chevalley(const RatMat& m) {
    if (!m.is_square()) throw Error("decomposition of non-square matrix");
    long n = m.rows();
    Poly p = charpoly(m);
    if (p.empty() || p[0] == 0) throw SingularMatrixError("matrix is singular");
    Poly sf = poly_divexact(p, poly_gcd(p, poly_derivative(p)));
    Poly sfd = poly_derivative(sf);
    // Newton iteration S <- S - sf(S) sf'(S)^{-1}; quadratic convergence, and
    // sf'(S) stays invertible because sf is squarefree.
    RatMat s = m;
    for (long iter = 0; iter <= n + 1; ++iter) {
        RatMat val = poly_eval(sf, s);
        if (val.is_zero()) {
            auto sinv = inverse(s);
            if (!sinv) throw SingularMatrixError("semisimple part is singular");
            RatMat u = *sinv * m;
            return {std::move(s), std::move(u)};
        }
        auto dinv = inverse(poly_eval(sfd, s));
        if (!dinv) throw Error("derivative became singular in Newton iteration");
        s = s - val * *dinv;
    }
    throw Error("Newton iteration failed to converge");
}

RatMat unipotent_log(const RatMat& u) {
    if (!is_unipotent(u)) throw Error("matrix is not unipotent");
    long n = u.rows();
    RatMat x = u - RatMat::identity(n);
    RatMat acc(n, n);
    RatMat p = x;
    for (long k = 1; k <= n && !p.is_zero(); ++k) {
        Rational c = make_rational(k % 2 == 1 ? 1 : -1, k);
        acc = acc + p * c;
        p = p * x;
    }
    return acc;
}

RatMat nilpotent_exp(const RatMat& n) {
    if (!is_nilpotent(n)) throw Error("matrix is not nilpotent");
    long d = n.rows();
    RatMat acc = RatMat::identity(d);
    RatMat p = RatMat::identity(d);
    Rational fact = 1;
    for (long k = 1; k <= d; ++k) {
        p = p * n;
        if (p.is_zero()) break;
        fact *= k;
        acc = acc + p * (1 / fact);
    }
    return acc;
}

} // namespace wd
