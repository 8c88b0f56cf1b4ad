#pragma once

#include <map>
#include <vector>

#include "wd/ratmat.hpp"
#include "wd/rng.hpp"
#include "wd/wd_module.hpp"

namespace wd {

// Matrix-level module: Frobenius acts semisimply with eigenvalue alpha on the
// piece U_alpha, and N is given by one matrix per piece mapping U_alpha into
// U_{q^{-1} alpha}. The eigenvalue-shift relation rho N rho^{-1} = q^{-1} N
// holds structurally, and N is automatically nilpotent.
class GradedModule {
public:
    explicit GradedModule(ResidueCard q) : q_(std::move(q)) {}

    // dims: piece dimensions (all positive); maps: for each alpha whose
    // downshift q^{-1} alpha is also a piece, a matrix U_alpha -> U_{q^{-1} alpha}.
    // Missing matrices for such alpha are filled in as zero.
    GradedModule(ResidueCard q, std::map<WeilMonomial, long> dims,
                 std::map<WeilMonomial, RatMat> maps);

    const ResidueCard& q() const noexcept { return q_; }
    const std::map<WeilMonomial, long>& dims() const noexcept { return dims_; }
    const std::map<WeilMonomial, RatMat>& maps() const noexcept { return maps_; }

    long dimension() const;
    long piece_dim(const WeilMonomial& alpha) const;
    // The matrix of N out of U_alpha, or a 0-row matrix when q^{-1} alpha is
    // not a piece (N kills U_alpha entirely).
    RatMat map_out_of(const WeilMonomial& alpha) const;

    static WeilMonomial down(const WeilMonomial& alpha) { return alpha.tate_twist(1); }
    static WeilMonomial up(const WeilMonomial& alpha) { return alpha.tate_twist(-1); }

private:
    ResidueCard q_;
    std::map<WeilMonomial, long> dims_;
    std::map<WeilMonomial, RatMat> maps_;
};

// Canonical realization: one Jordan chain per block copy, subdiagonal 1s.
GradedModule realize(const SSModule& a);

// Jordan-type extraction per eigenvalue chain, from ranks of composite maps.
SSModule to_ss(const GradedModule& g);

GradedModule tensor_concrete(const GradedModule& g1, const GradedModule& g2);

// dim ker N = number of indecomposable summands.
long b_of(const GradedModule& g);

// Graded subspace: a canonical column basis per piece (pieces with trivial
// intersection omitted). Canonical bases make equality of spans syntactic.
class GradedSubspace {
public:
    GradedSubspace() = default;

    const std::map<WeilMonomial, RatMat>& bases() const noexcept { return bases_; }
    long dimension() const;
    long piece_dim(const WeilMonomial& alpha) const;
    RatMat basis_of(const WeilMonomial& alpha, long ambient_dim) const;

    bool operator==(const GradedSubspace&) const = default;

    // Span of the given generators, closed under every n_map of g.
    static GradedSubspace stable_span(const GradedModule& g,
                                      const std::map<WeilMonomial, RatMat>& generators);
    static GradedSubspace full(const GradedModule& g);

    bool contains(const GradedSubspace& other) const;
    bool is_stable(const GradedModule& g) const;

private:
    std::map<WeilMonomial, RatMat> bases_;
};

// Strictly increasing chain of proper nonzero N-stable graded subspaces; the
// implicit endpoints 0 and V are not stored.
struct StableFiltration {
    std::vector<GradedSubspace> steps;
};

bool filtration_valid(const GradedModule& g, const StableFiltration& f);

// Random stable filtration with at most `steps` graded pieces, built by
// closing random vectors under N and validating stability.
StableFiltration sample_filtration(const GradedModule& g, Rng& rng, long steps);

// Successive quotients, bottom step first; their dimensions sum to dim(g).
std::vector<GradedModule> graded_pieces(const GradedModule& g, const StableFiltration& f);

} // namespace wd
