#include "wd/wd_module.hpp"

#include <algorithm>
#include <sstream>

namespace wd {

SSModule::SSModule(ResidueCard q, std::vector<Part> parts) : q_(std::move(q)) {
    std::sort(parts.begin(), parts.end());
    for (auto& [blk, mult] : parts) {
        if (mult < 0) throw Error("negative multiplicity");
        if (blk.t < 0) throw Error("negative block length");
        if (mult == 0) continue;
        if (!parts_.empty() && parts_.back().first == blk)
            parts_.back().second += mult;
        else
            parts_.emplace_back(blk, mult);
    }
}

long SSModule::dimension() const {
    long d = 0;
    for (const auto& [blk, mult] : parts_) d += blk.dimension() * mult;
    return d;
}

long SSModule::block_count() const {
    long b = 0;
    for (const auto& [blk, mult] : parts_) b += mult;
    return b;
}

std::map<WeilMonomial, long> SSModule::eigenvalues() const {
    std::map<WeilMonomial, long> m;
    for (const auto& [blk, mult] : parts_)
        for (long i = 0; i <= blk.t; ++i) m[blk.alpha.tate_twist(i)] += mult;
    return m;
}

std::string SSModule::to_string() const {
    std::ostringstream os;
    os << "q=" << q_.value() << ":";
    if (parts_.empty()) os << " 0";
    for (const auto& [blk, mult] : parts_) {
        os << " V(" << blk.alpha.to_string() << ", t=" << blk.t << ")";
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

static void check_same_q(const SSModule& a, const SSModule& b) {
    if (!(a.q() == b.q()))
        throw QMismatchError("modules over different residue fields: q=" + a.q().value().get_str() +
                             " vs q=" + b.q().value().get_str());
}

SSModule direct_sum(const SSModule& a, const SSModule& b) {
    check_same_q(a, b);
    std::vector<SSModule::Part> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return SSModule(a.q(), std::move(parts));
}

SSModule tensor(const SSModule& a, const SSModule& b) {
    check_same_q(a, b);
    // Clebsch-Gordan on blocks:
    // V_{alpha,s} (x) V_{beta,t} = sum_{k=0..min(s,t)} V_{q^{-k} alpha beta, s+t-2k}.
    std::vector<SSModule::Part> parts;
    for (const auto& [x, mx] : a.parts())
        for (const auto& [y, my] : b.parts()) {
            WeilMonomial prod = x.alpha * y.alpha;
            for (long k = 0; k <= std::min(x.t, y.t); ++k)
                parts.push_back({{prod.tate_twist(k), x.t + y.t - 2 * k}, mx * my});
        }
    return SSModule(a.q(), std::move(parts));
}

SSModule dual(const SSModule& a) {
    std::vector<SSModule::Part> parts;
    for (const auto& [blk, mult] : a.parts())
        parts.push_back({{blk.alpha.inverse().tate_twist(-blk.t), blk.t}, mult});
    return SSModule(a.q(), std::move(parts));
}

SSModule tate_twist(const SSModule& a, long m) {
    std::vector<SSModule::Part> parts;
    for (const auto& [blk, mult] : a.parts())
        parts.push_back({{blk.alpha.tate_twist(m), blk.t}, mult});
    return SSModule(a.q(), std::move(parts));
}

SSModule restrict(const SSModule& a, long f) {
    std::vector<SSModule::Part> parts;
    for (const auto& [blk, mult] : a.parts())
        parts.push_back({{blk.alpha.restrict_scalars(f), blk.t}, mult});
    return SSModule(a.q().extend(f), std::move(parts));
}

SSModule exterior_square_2dim(const SSModule& a) {
    if (a.dimension() != 2)
        throw Error("exterior square requires a 2-dimensional module, got dimension " +
                    std::to_string(a.dimension()));
    const auto& parts = a.parts();
    if (parts.size() == 1 && parts[0].first.t == 1) {
        const WeilMonomial& alpha = parts[0].first.alpha;
        return SSModule::block(a.q(), (alpha * alpha).tate_twist(1), 0);
    }
    // Two characters (possibly one entry of multiplicity 2).
    WeilMonomial prod;
    for (const auto& [blk, mult] : parts)
        for (long i = 0; i < mult; ++i) prod = prod * blk.alpha;
    return SSModule::block(a.q(), prod, 0);
}

bool is_pure(const SSModule& a, const Rational& j) {
    for (const auto& [blk, mult] : a.parts())
        if (blk.alpha.weight() != j + blk.t) return false;
    return true;
}

std::optional<Rational> purity_weight(const SSModule& a) {
    if (a.is_empty()) return std::nullopt;
    Rational j = a.parts()[0].first.alpha.weight() - a.parts()[0].first.t;
    return is_pure(a, j) ? std::optional<Rational>(j) : std::nullopt;
}

std::map<Rational, long> weight_filtration(const SSModule& a, const Rational& j) {
    std::map<Rational, long> gr;
    for (const auto& [blk, mult] : a.parts()) {
        if (blk.alpha.weight() != j + blk.t)
            throw PurityError("block V(" + blk.alpha.to_string() + ", t=" + std::to_string(blk.t) +
                              ") is not pure of weight " + rational_to_string(j));
        for (long d = 0; d <= blk.t; ++d) gr[j + blk.t - 2 * d] += mult;
    }
    return gr;
}

bool det_weight_check(const SSModule& a, const Rational& j) {
    Rational total = 0;
    for (const auto& [blk, mult] : a.parts())
        total += mult * (blk.dimension() * blk.alpha.weight() - blk.t * blk.dimension());
    return total == j * a.dimension();
}

} // namespace wd
