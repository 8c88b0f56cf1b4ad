#include "wd/ratmat.hpp"

#include <sstream>

namespace wd {

RatMat RatMat::identity(long n) {
    RatMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    RatMat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
    RatMat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in *");
    RatMat r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

RatMat RatMat::operator*(const Rational& s) const {
    RatMat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RatMat RatMat::hstack(const RatMat& o) const {
    if (rows_ != o.rows_) throw Error("matrix shape mismatch in hstack");
    RatMat r(rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (long j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

RatMat RatMat::column(long j) const {
    RatMat r(rows_, 1);
    for (long i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
    return r;
}

std::string RatMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

RatMat kronecker(const RatMat& a, const RatMat& b) {
    RatMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i1 = 0; i1 < a.rows(); ++i1)
        for (long j1 = 0; j1 < a.cols(); ++j1) {
            const Rational& x = a(i1, j1);
            if (x == 0) continue;
            for (long i2 = 0; i2 < b.rows(); ++i2)
                for (long j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
        }
    return r;
}

long rank(const RatMat& m) {
    long rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators row by row; rank is invariant under row scaling.
    std::vector<std::vector<Integer>> w(static_cast<std::size_t>(rows),
                                        std::vector<Integer>(static_cast<std::size_t>(cols)));
    for (long i = 0; i < rows; ++i) {
        Integer l = 1;
        for (long j = 0; j < cols; ++j) {
            Integer d = m(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (long j = 0; j < cols; ++j) {
            Rational x = m(i, j) * Rational(l);
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.get_num();
        }
    }
    // Bareiss: every division below is exact over the integers.
    Integer prev = 1;
    long r = 0;
    for (long col = 0; col < cols && r < rows; ++col) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(r)]);
        auto& pr = w[static_cast<std::size_t>(r)];
        for (long i = r + 1; i < rows; ++i) {
            auto& wi = w[static_cast<std::size_t>(i)];
            for (long j = col + 1; j < cols; ++j) {
                Integer num = pr[static_cast<std::size_t>(col)] * wi[static_cast<std::size_t>(j)] -
                              wi[static_cast<std::size_t>(col)] * pr[static_cast<std::size_t>(j)];
                mpz_divexact(wi[static_cast<std::size_t>(j)].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            wi[static_cast<std::size_t>(col)] = 0;
        }
        prev = pr[static_cast<std::size_t>(col)];
        ++r;
    }
    return r;
}

RatMat rref(const RatMat& m, std::vector<long>* pivots) {
    RatMat w = m;
    long rows = w.rows(), cols = w.cols();
    long r = 0;
    for (long col = 0; col < cols && r < rows; ++col) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (w(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < cols; ++j) std::swap(w(piv, j), w(r, j));
        Rational inv = 1 / w(r, col);
        for (long j = col; j < cols; ++j) w(r, j) *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || w(i, col) == 0) continue;
            Rational f = w(i, col);
            for (long j = col; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return w;
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    long n = m.rows();
    std::vector<long> piv;
    RatMat w = rref(m.hstack(RatMat::identity(n)), &piv);
    if (static_cast<long>(piv.size()) != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
    RatMat r(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) r(i, j) = w(i, n + j);
    return r;
}

std::optional<RatMat> solve(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || b.cols() != 1) throw Error("matrix shape mismatch in solve");
    std::vector<long> piv;
    RatMat w = rref(a.hstack(b), &piv);
    for (long p : piv)
        if (p == a.cols()) return std::nullopt;
    RatMat x(a.cols(), 1);
    for (std::size_t k = 0; k < piv.size(); ++k) x(piv[k], 0) = w(static_cast<long>(k), a.cols());
    return x;
}

RatMat column_space(const RatMat& m) {
    std::vector<long> piv;
    RatMat w = rref(m.transpose(), &piv);
    long r = static_cast<long>(piv.size());
    RatMat basis(r, m.rows());
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < m.rows(); ++j) basis(i, j) = w(i, j);
    return basis.transpose();
}

bool in_span(const RatMat& basis, const RatMat& v) {
    if (basis.rows() != v.rows() || v.cols() != 1) throw Error("matrix shape mismatch in in_span");
    if (v.is_zero()) return true;
    return rank(basis) == rank(basis.hstack(v));
}

bool span_contains(const RatMat& b, const RatMat& a) {
    if (b.rows() != a.rows()) throw Error("matrix shape mismatch in span_contains");
    if (a.cols() == 0 || a.is_zero()) return true;
    return rank(b) == rank(b.hstack(a));
}

Poly poly_normalize(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * p[k]);
    return poly_normalize(std::move(d));
}

Poly poly_monic(const Poly& p) {
    Poly q = poly_normalize(p);
    if (q.empty()) return q;
    Rational lead = q.back();
    for (auto& c : q) c /= lead;
    return q;
}

static Poly poly_mod(Poly a, const Poly& b) {
    a = poly_normalize(std::move(a));
    if (b.empty()) throw Error("polynomial division by zero");
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
        a = poly_normalize(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_normalize(std::move(a));
    b = poly_normalize(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    Poly r = poly_normalize(a);
    Poly d = poly_normalize(b);
    if (d.empty()) throw Error("polynomial division by zero");
    Poly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
    while (r.size() >= d.size()) {
        Rational f = r.back() / d.back();
        std::size_t off = r.size() - d.size();
        q[off] = f;
        for (std::size_t k = 0; k < d.size(); ++k) r[off + k] -= f * d[k];
        r = poly_normalize(std::move(r));
        if (r.empty()) break;
    }
    if (!r.empty()) throw Error("inexact polynomial division");
    return poly_normalize(std::move(q));
}

RatMat poly_eval(const Poly& p, const RatMat& m) {
    if (!m.is_square()) throw Error("polynomial of non-square matrix");
    long n = m.rows();
    RatMat acc(n, n);
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * m;
        for (long i = 0; i < n; ++i) acc(i, i) += p[k];
    }
    return acc;
}

Poly charpoly(const RatMat& m) {
    if (!m.is_square()) throw Error("characteristic polynomial of non-square matrix");
    long n = m.rows();
    Poly c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1;
    RatMat acc = RatMat::identity(n);
    for (long k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational tr = 0;
        for (long i = 0; i < n; ++i) tr += acc(i, i);
        Rational ck = -tr / k;
        c[static_cast<std::size_t>(n - k)] = ck;
        for (long i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return c;
}

} // namespace wd
