#include "wd/concrete.hpp"

#include <algorithm>

namespace wd {

GradedModule::GradedModule(ResidueCard q, std::map<WeilMonomial, long> dims,
                           std::map<WeilMonomial, RatMat> maps)
    : q_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
    for (const auto& [alpha, d] : dims_)
        if (d <= 0) throw Error("graded piece with non-positive dimension");
    for (const auto& [alpha, m] : maps_) {
        auto src = dims_.find(alpha);
        auto dst = dims_.find(down(alpha));
        if (src == dims_.end() || dst == dims_.end())
            throw Error("n_map attached to a missing piece");
        if (m.rows() != dst->second || m.cols() != src->second)
            throw Error("n_map shape mismatch at " + alpha.to_string());
    }
    for (const auto& [alpha, d] : dims_) {
        auto dst = dims_.find(down(alpha));
        if (dst != dims_.end() && !maps_.count(alpha))
            maps_.emplace(alpha, RatMat(dst->second, d));
    }
}

long GradedModule::dimension() const {
    long total = 0;
    for (const auto& [alpha, d] : dims_) total += d;
    return total;
}

long GradedModule::piece_dim(const WeilMonomial& alpha) const {
    auto it = dims_.find(alpha);
    return it == dims_.end() ? 0 : it->second;
}

RatMat GradedModule::map_out_of(const WeilMonomial& alpha) const {
    auto it = maps_.find(alpha);
    if (it != maps_.end()) return it->second;
    return RatMat(piece_dim(down(alpha)), piece_dim(alpha));
}

GradedModule realize(const SSModule& a) {
    std::map<WeilMonomial, long> dims = a.eigenvalues();
    std::map<WeilMonomial, RatMat> maps;
    for (const auto& [alpha, d] : dims) {
        auto dst = dims.find(GradedModule::down(alpha));
        if (dst != dims.end()) maps.emplace(alpha, RatMat(dst->second, d));
    }
    std::map<WeilMonomial, long> used;
    for (const auto& [blk, mult] : a.parts())
        for (long copy = 0; copy < mult; ++copy) {
            std::vector<long> slot(static_cast<std::size_t>(blk.t + 1));
            for (long i = 0; i <= blk.t; ++i)
                slot[static_cast<std::size_t>(i)] = used[blk.alpha.tate_twist(i)]++;
            for (long i = 0; i < blk.t; ++i)
                maps.at(blk.alpha.tate_twist(i))(slot[static_cast<std::size_t>(i + 1)],
                                                 slot[static_cast<std::size_t>(i)]) = 1;
        }
    return GradedModule(a.q(), std::move(dims), std::move(maps));
}

SSModule to_ss(const GradedModule& g) {
    std::vector<SSModule::Part> parts;
    for (const auto& [top, dtop] : g.dims()) {
        if (g.dims().count(GradedModule::up(top))) continue;
        // Walk the chain top, q^{-1} top, q^{-2} top, ...
        std::vector<WeilMonomial> pos{top};
        while (g.dims().count(GradedModule::down(pos.back())))
            pos.push_back(GradedModule::down(pos.back()));
        long L = static_cast<long>(pos.size()) - 1;
        // R[i][k] = rank of the composite U_{pos[i]} -> U_{pos[i+k]}.
        std::vector<std::vector<long>> R(pos.size());
        for (long i = 0; i <= L; ++i) {
            auto& row = R[static_cast<std::size_t>(i)];
            long di = g.piece_dim(pos[static_cast<std::size_t>(i)]);
            row.push_back(di);
            RatMat comp = RatMat::identity(di);
            for (long k = 1; i + k <= L; ++k) {
                comp = g.map_out_of(pos[static_cast<std::size_t>(i + k - 1)]) * comp;
                row.push_back(rank(comp));
            }
        }
        auto rk = [&](long i, long k) -> long {
            if (i < 0 || k < 0 || i > L || i + k > L) return 0;
            return R[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        };
        long chain_dim = 0;
        for (long i = 0; i <= L; ++i)
            for (long k = 0; i + k <= L; ++k) {
                long c = (rk(i, k) - rk(i, k + 1)) - (rk(i - 1, k + 1) - rk(i - 1, k + 2));
                if (c < 0) throw Error("inconsistent rank data in Jordan-type extraction");
                if (c > 0) {
                    parts.push_back({{pos[static_cast<std::size_t>(i)], k}, c});
                    chain_dim += c * (k + 1);
                }
            }
        long expect = 0;
        for (const auto& p : pos) expect += g.piece_dim(p);
        if (chain_dim != expect) throw Error("Jordan-type extraction lost dimensions");
    }
    return SSModule(g.q(), std::move(parts));
}

GradedModule tensor_concrete(const GradedModule& g1, const GradedModule& g2) {
    if (!(g1.q() == g2.q()))
        throw QMismatchError("tensor of graded modules over different residue fields");
    // Within the product piece for gamma, the (alpha, beta) pairs with
    // alpha*beta = gamma are laid out in lexicographic order, Kronecker-style
    // inside each pair.
    struct Pair {
        WeilMonomial a, b;
        long offset, da, db;
    };
    std::map<WeilMonomial, std::vector<Pair>> layout;
    std::map<WeilMonomial, long> dims;
    for (const auto& [alpha, da] : g1.dims())
        for (const auto& [beta, db] : g2.dims()) {
            WeilMonomial gamma = alpha * beta;
            layout[gamma].push_back({alpha, beta, dims[gamma], da, db});
            dims[gamma] += da * db;
        }
    auto find_offset = [&](const WeilMonomial& gamma, const WeilMonomial& a,
                           const WeilMonomial& b) -> long {
        for (const auto& p : layout.at(gamma))
            if (p.a == a && p.b == b) return p.offset;
        throw Error("tensor layout lookup failed");
    };
    std::map<WeilMonomial, RatMat> maps;
    for (const auto& [gamma, pairs] : layout) {
        WeilMonomial dgamma = GradedModule::down(gamma);
        if (!dims.count(dgamma)) continue;
        RatMat M(dims.at(dgamma), dims.at(gamma));
        for (const auto& p : pairs) {
            if (g1.dims().count(GradedModule::down(p.a))) {
                RatMat blk = kronecker(g1.map_out_of(p.a), RatMat::identity(p.db));
                long ro = find_offset(dgamma, GradedModule::down(p.a), p.b);
                for (long i = 0; i < blk.rows(); ++i)
                    for (long j = 0; j < blk.cols(); ++j) M(ro + i, p.offset + j) += blk(i, j);
            }
            if (g2.dims().count(GradedModule::down(p.b))) {
                RatMat blk = kronecker(RatMat::identity(p.da), g2.map_out_of(p.b));
                long ro = find_offset(dgamma, p.a, GradedModule::down(p.b));
                for (long i = 0; i < blk.rows(); ++i)
                    for (long j = 0; j < blk.cols(); ++j) M(ro + i, p.offset + j) += blk(i, j);
            }
        }
        maps.emplace(gamma, std::move(M));
    }
    return GradedModule(g1.q(), std::move(dims), std::move(maps));
}

long b_of(const GradedModule& g) {
    long b = 0;
    for (const auto& [alpha, d] : g.dims()) b += d - rank(g.map_out_of(alpha));
    return b;
}

long GradedSubspace::dimension() const {
    long d = 0;
    for (const auto& [alpha, basis] : bases_) d += basis.cols();
    return d;
}

long GradedSubspace::piece_dim(const WeilMonomial& alpha) const {
    auto it = bases_.find(alpha);
    return it == bases_.end() ? 0 : it->second.cols();
}

RatMat GradedSubspace::basis_of(const WeilMonomial& alpha, long ambient_dim) const {
    auto it = bases_.find(alpha);
    return it == bases_.end() ? RatMat(ambient_dim, 0) : it->second;
}

GradedSubspace GradedSubspace::stable_span(const GradedModule& g,
                                           const std::map<WeilMonomial, RatMat>& generators) {
    GradedSubspace s;
    for (const auto& [alpha, gen] : generators) {
        if (gen.rows() != g.piece_dim(alpha)) throw Error("generator shape mismatch");
        RatMat cs = column_space(gen);
        if (cs.cols() > 0) s.bases_[alpha] = cs;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        auto snapshot = s.bases_;
        for (const auto& [alpha, basis] : snapshot) {
            RatMat n = g.map_out_of(alpha);
            if (n.rows() == 0) continue;
            RatMat img = n * basis;
            if (img.is_zero()) continue;
            WeilMonomial d = GradedModule::down(alpha);
            RatMat existing = s.basis_of(d, n.rows());
            RatMat combined = column_space(existing.hstack(img));
            if (combined.cols() > existing.cols()) {
                s.bases_[d] = combined;
                changed = true;
            }
        }
    }
    return s;
}

GradedSubspace GradedSubspace::full(const GradedModule& g) {
    GradedSubspace s;
    for (const auto& [alpha, d] : g.dims()) s.bases_[alpha] = RatMat::identity(d);
    return s;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
    for (const auto& [alpha, basis] : other.bases_) {
        auto it = bases_.find(alpha);
        if (it == bases_.end()) return false;
        if (!span_contains(it->second, basis)) return false;
    }
    return true;
}

bool GradedSubspace::is_stable(const GradedModule& g) const {
    for (const auto& [alpha, basis] : bases_) {
        if (basis.rows() != g.piece_dim(alpha) || rank(basis) != basis.cols()) return false;
        RatMat n = g.map_out_of(alpha);
        if (n.rows() == 0) continue;
        RatMat img = n * basis;
        if (!span_contains(basis_of(GradedModule::down(alpha), n.rows()), img)) return false;
    }
    return true;
}

bool filtration_valid(const GradedModule& g, const StableFiltration& f) {
    const GradedSubspace* prev = nullptr;
    for (const auto& step : f.steps) {
        if (!step.is_stable(g)) return false;
        long d = step.dimension();
        if (d == 0 || d >= g.dimension()) return false;
        if (prev && (!step.contains(*prev) || d <= prev->dimension())) return false;
        prev = &step;
    }
    return true;
}

StableFiltration sample_filtration(const GradedModule& g, Rng& rng, long steps) {
    StableFiltration f;
    if (g.dimension() == 0 || steps <= 1) return f;
    std::vector<WeilMonomial> pieces;
    for (const auto& [alpha, d] : g.dims()) pieces.push_back(alpha);
    GradedSubspace cur;
    for (long s = 1; s < steps; ++s) {
        std::map<WeilMonomial, RatMat> gens;
        for (const auto& [alpha, basis] : cur.bases()) gens.emplace(alpha, basis);
        long extra = 1 + rng.below(2);
        for (long k = 0; k < extra; ++k) {
            const WeilMonomial& alpha = rng.pick(pieces);
            RatMat v(g.piece_dim(alpha), 1);
            bool nonzero = false;
            for (long i = 0; i < v.rows(); ++i) {
                v(i, 0) = rng.range(-2, 2);
                nonzero = nonzero || v(i, 0) != 0;
            }
            if (!nonzero) v(rng.below(v.rows()), 0) = 1;
            auto it = gens.find(alpha);
            if (it == gens.end())
                gens.emplace(alpha, v);
            else
                it->second = it->second.hstack(v);
        }
        GradedSubspace next = GradedSubspace::stable_span(g, gens);
        if (next.dimension() >= g.dimension()) break;
        if (next.dimension() == cur.dimension()) continue;
        f.steps.push_back(next);
        cur = next;
    }
    if (!filtration_valid(g, f)) throw Error("sampled filtration failed validation");
    return f;
}

std::vector<GradedModule> graded_pieces(const GradedModule& g, const StableFiltration& f) {
    if (!filtration_valid(g, f)) throw Error("invalid filtration");
    std::vector<GradedSubspace> chain;
    chain.emplace_back();
    chain.insert(chain.end(), f.steps.begin(), f.steps.end());
    chain.push_back(GradedSubspace::full(g));

    std::vector<GradedModule> out;
    for (std::size_t step = 0; step + 1 < chain.size(); ++step) {
        const GradedSubspace& below_sub = chain[step];
        const GradedSubspace& above = chain[step + 1];
        // Representatives: columns of the upper basis independent modulo the
        // lower one; the induced N is read off in those coordinates.
        std::map<WeilMonomial, RatMat> reps;
        std::map<WeilMonomial, long> dims_q;
        for (const auto& [alpha, d] : g.dims()) {
            RatMat lower = below_sub.basis_of(alpha, d);
            RatMat upper = above.basis_of(alpha, d);
            RatMat acc = lower;
            RatMat r(d, 0);
            long base_rank = rank(acc);
            for (long c = 0; c < upper.cols(); ++c) {
                RatMat v = upper.column(c);
                RatMat grown = acc.hstack(v);
                if (rank(grown) > base_rank) {
                    acc = std::move(grown);
                    ++base_rank;
                    r = r.hstack(v);
                }
            }
            if (r.cols() > 0) {
                reps[alpha] = r;
                dims_q[alpha] = r.cols();
            }
        }
        std::map<WeilMonomial, RatMat> maps_q;
        for (const auto& [alpha, r] : reps) {
            WeilMonomial d = GradedModule::down(alpha);
            auto dn = reps.find(d);
            if (dn == reps.end()) continue;
            RatMat n = g.map_out_of(alpha);
            RatMat lower_d = below_sub.basis_of(d, g.piece_dim(d));
            RatMat basis = lower_d.hstack(dn->second);
            RatMat M(dn->second.cols(), r.cols());
            for (long c = 0; c < r.cols(); ++c) {
                auto x = solve(basis, n * r.column(c));
                if (!x) throw Error("quotient image escaped the filtration step");
                for (long i = 0; i < M.rows(); ++i) M(i, c) = (*x)(lower_d.cols() + i, 0);
            }
            maps_q.emplace(alpha, std::move(M));
        }
        out.emplace_back(g.q(), std::move(dims_q), std::move(maps_q));
    }
    return out;
}

} // namespace wd
