#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wd/rational.hpp"

namespace wd {

// Dense rational matrix, desk scale. Row-major storage.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }
    RatMat(long rows, long cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(rows * cols))
            throw Error("matrix entry count mismatch");
    }

    static RatMat identity(long n);

    long rows() const noexcept { return rows_; }
    long cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(long i, long j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rational& operator()(long i, long j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator*(const Rational& s) const;
    bool operator==(const RatMat&) const = default;

    RatMat transpose() const;
    bool is_zero() const;

    // Columns of `o` appended on the right.
    RatMat hstack(const RatMat& o) const;
    RatMat column(long j) const;

    std::string to_string() const;

private:
    long rows_, cols_;
    std::vector<Rational> a_;
};

RatMat kronecker(const RatMat& a, const RatMat& b);

// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
long rank(const RatMat& m);

// Reduced row echelon form; pivot column indices appended to `pivots` if given.
RatMat rref(const RatMat& m, std::vector<long>* pivots = nullptr);

std::optional<RatMat> inverse(const RatMat& m);

// One solution x of a x = b (b a column vector), if the system is consistent.
std::optional<RatMat> solve(const RatMat& a, const RatMat& b);

// Canonical basis of the column space (rref of the transpose, transposed back).
// Equal spans have equal canonical bases.
RatMat column_space(const RatMat& m);

// Whether v (a column) lies in the span of the columns of basis.
bool in_span(const RatMat& basis, const RatMat& v);

// Whether every column of a lies in the span of the columns of b.
bool span_contains(const RatMat& b, const RatMat& a);

// Polynomials as coefficient vectors, constant term first; empty means zero.
using Poly = std::vector<Rational>;

Poly poly_normalize(Poly p);
Poly poly_derivative(const Poly& p);
Poly poly_monic(const Poly& p);
// Monic gcd via the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b);
// Quotient of an exact division; throws if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);
RatMat poly_eval(const Poly& p, const RatMat& m);

// Monic characteristic polynomial by the Faddeev–LeVerrier recurrence.
Poly charpoly(const RatMat& m);

} // namespace wd
