#include "wd/zeta.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace wd {

SSModule build_R(const ConjugateFamily& fam) {
    if (fam.factors.empty()) throw Error("family must have at least one factor");
    if (fam.factors.size() != fam.residue_degrees.size())
        throw Error("factor and residue-degree counts differ");
    for (const auto& v : fam.factors)
        if (v.dimension() != 2)
            throw Error("family factor of dimension " + std::to_string(v.dimension()) +
                        ", expected 2");
    SSModule acc = restrict(fam.factors[0], fam.residue_degrees[0]);
    for (std::size_t i = 1; i < fam.factors.size(); ++i)
        acc = tensor(acc, restrict(fam.factors[i], fam.residue_degrees[i]));
    long expected = 1L << fam.factors.size();
    if (acc.dimension() != expected) throw Error("tensor dimension mismatch");
    return acc;
}

Lemma42Result lemma42_check(const SSModule& v1, const SSModule& v2) {
    if (v1.dimension() != 2 || v2.dimension() != 2)
        throw Error("both modules must be 2-dimensional");
    Rational two(2);
    bool hyp = is_pure(tensor(v1, v2), two) && is_pure(exterior_square_2dim(v1), two) &&
               is_pure(exterior_square_2dim(v2), two);
    Rational one(1);
    bool concl = is_pure(v1, one) && is_pure(v2, one);
    return {hyp, concl};
}

Lemma42Scan lemma42_scan(const ResidueCard& q) {
    std::vector<SSModule> shapes;
    std::vector<Rational> grid;
    for (long k = -4; k <= 6; ++k) grid.push_back(make_rational(k, 2));
    Rational zero(0);
    for (const Rational& e : grid)
        shapes.push_back(SSModule::block(q, WeilMonomial(e, zero), 1, 1));
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i; j < grid.size(); ++j)
            shapes.push_back(direct_sum(SSModule::block(q, WeilMonomial(grid[i], zero), 0, 1),
                                        SSModule::block(q, WeilMonomial(grid[j], zero), 0, 1)));
    Lemma42Scan scan;
    for (const SSModule& a : shapes)
        for (const SSModule& b : shapes) {
            ++scan.pairs;
            Lemma42Result r = lemma42_check(a, b);
            if (r.hypotheses_hold) {
                ++scan.hypothesis_instances;
                if (!r.conclusion_holds) ++scan.violations;
            }
        }
    return scan;
}

Perm perm_identity(long r) {
    Perm p(static_cast<std::size_t>(r));
    for (long i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

static void check_perm(const Perm& p) {
    std::set<long> seen;
    for (long v : p) {
        if (v < 0 || v >= static_cast<long>(p.size()) || !seen.insert(v).second)
            throw Error("malformed permutation");
    }
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw Error("permutation size mismatch");
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[static_cast<std::size_t>(a[i])] = static_cast<long>(i);
    return out;
}

Perm perm_from_cycles(const std::string& text, long r) {
    Perm p = perm_identity(r);
    std::vector<char> seen(static_cast<std::size_t>(r), 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw Error("expected '(' in cycle notation");
        ++i;
        std::vector<long> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw Error("expected entry in cycle notation");
            long v = std::stol(text.substr(start, i - start));
            if (v < 1 || v > r) throw Error("cycle entry " + std::to_string(v) + " out of range");
            if (seen[static_cast<std::size_t>(v - 1)])
                throw Error("repeated entry in cycle notation");
            seen[static_cast<std::size_t>(v - 1)] = 1;
            cycle.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            long from = cycle[k];
            long to = cycle[(k + 1) % cycle.size()];
            p[static_cast<std::size_t>(from)] = to;
        }
        skip_ws();
    }
    check_perm(p);
    return p;
}

std::vector<Perm> all_perms(long r) {
    Perm p = perm_identity(r);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

RatMat rb_connected(const std::vector<RatMat>& gs) {
    RatMat acc = RatMat::identity(1);
    for (const auto& g : gs) {
        if (g.rows() != 2 || g.cols() != 2) throw Error("factors must be 2x2");
        acc = kronecker(acc, g);
    }
    return acc;
}

RatMat rb_galois(const Perm& sigma) {
    check_perm(sigma);
    long r = static_cast<long>(sigma.size());
    long dim = 1L << r;
    Perm inv = perm_inverse(sigma);
    RatMat m(dim, dim);
    for (long src = 0; src < dim; ++src) {
        long dst = 0;
        // Bit r-1-i of an index is the basis choice in factor i.
        for (long i = 0; i < r; ++i) {
            long bit = (src >> (r - 1 - inv[static_cast<std::size_t>(i)])) & 1;
            dst |= bit << (r - 1 - i);
        }
        m(dst, src) = 1;
    }
    return m;
}

std::vector<RatMat> permute_factors(const std::vector<RatMat>& gs, const Perm& sigma) {
    check_perm(sigma);
    if (gs.size() != sigma.size()) throw Error("factor and permutation sizes differ");
    Perm inv = perm_inverse(sigma);
    std::vector<RatMat> out;
    out.reserve(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i)
        out.push_back(gs[static_cast<std::size_t>(inv[i])]);
    return out;
}

PurityVerdict theorem2_isotypic(const SSModule& a, const Rational& j) {
    for (const auto& [blk, mult] : a.parts()) {
        if (blk.t != 0)
            return {false, "nilpotent block V(" + blk.alpha.to_string() +
                               ", t=" + std::to_string(blk.t) + ") in isotypic data"};
        if (!(blk.alpha == a.parts()[0].first.alpha))
            return {false, "mixed eigenvalues " + a.parts()[0].first.alpha.to_string() + " and " +
                               blk.alpha.to_string()};
        if (blk.alpha.weight() != j)
            return {false, "eigenvalue " + blk.alpha.to_string() + " has weight " +
                               rational_to_string(blk.alpha.weight()) + ", expected " +
                               rational_to_string(j)};
    }
    return {true, ""};
}

PurityVerdict theorem2_tensor(const TensorParameter& tp, const Rational& j) {
    if (tp.multiplicity < 1) throw Error("multiplicity must be positive");
    long d = tp.module.dimension();
    if (d < 1 || (d & (d - 1)) != 0)
        throw Error("tensor parameter of dimension " + std::to_string(d) +
                    " is not a power of two");
    for (const auto& [blk, mult] : tp.module.parts())
        if (blk.alpha.weight() != j + blk.t)
            return {false, "block V(" + blk.alpha.to_string() + ", t=" + std::to_string(blk.t) +
                               ") is not pure of weight " + rational_to_string(j)};
    return {true, ""};
}

long LocalLFactor::degree() const {
    long d = 0;
    for (const auto& [root, mult] : inverse_roots) d += mult;
    return d;
}

std::string LocalLFactor::to_string() const {
    if (inverse_roots.empty()) return "1";
    std::string s;
    for (const auto& [root, mult] : inverse_roots)
        for (long k = 0; k < mult; ++k) {
            if (!s.empty()) s += " ";
            s += "(1 - zeta:" + rational_to_string(root.zeta()) + " q^{" +
                 rational_to_string(root.e()) + "} T)^{-1}";
        }
    return s;
}

LocalLFactor local_l_factor(const SSModule& a) {
    std::map<WeilMonomial, long> roots;
    for (const auto& [blk, mult] : a.parts()) roots[blk.alpha.tate_twist(blk.t)] += mult;
    LocalLFactor out;
    out.inverse_roots.assign(roots.begin(), roots.end());
    return out;
}

} // namespace wd
