#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wd/weil.hpp"

namespace wd {

// V_{alpha,t}: the (t+1)-dimensional indecomposable with top Frobenius
// eigenvalue alpha, eigenvalue list {q^{-i} alpha : 0 <= i <= t}, and a single
// Jordan chain for N. Pure of weight j exactly when weight(alpha) = j + t.
struct Indecomposable {
    WeilMonomial alpha;
    long t = 0;

    long dimension() const noexcept { return t + 1; }

    bool operator==(const Indecomposable&) const = default;
    std::strong_ordering operator<=>(const Indecomposable& o) const {
        if (auto c = alpha <=> o.alpha; c != 0) return c;
        return t <=> o.t;
    }
};

// Frobenius-semisimple semistable module: a multiset of indecomposables over a
// fixed residue cardinality, stored sorted so equality is syntactic.
class SSModule {
public:
    using Part = std::pair<Indecomposable, long>;

    explicit SSModule(ResidueCard q) : q_(std::move(q)) {}
    SSModule(ResidueCard q, std::vector<Part> parts);

    static SSModule block(ResidueCard q, WeilMonomial alpha, long t, long mult = 1) {
        return SSModule(std::move(q), {{Indecomposable{std::move(alpha), t}, mult}});
    }

    const ResidueCard& q() const noexcept { return q_; }
    const std::vector<Part>& parts() const noexcept { return parts_; }

    long dimension() const;
    // Number of indecomposable summands = dim ker N.
    long block_count() const;
    bool is_empty() const noexcept { return parts_.empty(); }

    // Eigenvalue multiset: every block (alpha,t) contributes one occurrence of
    // each q^{-i} alpha, 0 <= i <= t.
    std::map<WeilMonomial, long> eigenvalues() const;

    bool operator==(const SSModule&) const = default;
    std::string to_string() const;

private:
    ResidueCard q_;
    std::vector<Part> parts_;
};

SSModule direct_sum(const SSModule& a, const SSModule& b);
SSModule tensor(const SSModule& a, const SSModule& b);
SSModule dual(const SSModule& a);
SSModule tate_twist(const SSModule& a, long m);
SSModule restrict(const SSModule& a, long f);
// Lambda^2 of a 2-dimensional module (the determinant character).
SSModule exterior_square_2dim(const SSModule& a);

bool is_pure(const SSModule& a, const Rational& j);
// The unique j with is_pure(a, j), when one exists; nullopt for the empty
// module (vacuously pure of every weight) and for impure modules.
std::optional<Rational> purity_weight(const SSModule& a);

// Dimensions of the monodromy weight grading of a module pure of weight j:
// block (alpha,t) contributes 1 to each index j+t, j+t-2, ..., j-t.
// Throws PurityError naming an offending block if the module is not pure.
std::map<Rational, long> weight_filtration(const SSModule& a, const Rational& j);

// Whether the product of all eigenvalues has weight j * dim.
bool det_weight_check(const SSModule& a, const Rational& j);

} // namespace wd
