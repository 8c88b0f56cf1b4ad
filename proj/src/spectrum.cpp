#include "wd/spectrum.hpp"

#include <algorithm>
#include <vector>

namespace wd {

WeightedSpectrum::WeightedSpectrum(ResidueCard q, std::map<WeilMonomial, long> mult)
    : q_(std::move(q)) {
    for (auto& [alpha, m] : mult) {
        if (m < 0) throw Error("negative multiplicity in spectrum");
        if (m > 0) mult_.emplace(alpha, m);
    }
}

long WeightedSpectrum::mult(const WeilMonomial& alpha) const {
    auto it = mult_.find(alpha);
    return it == mult_.end() ? 0 : it->second;
}

long WeightedSpectrum::total_mass() const {
    long total = 0;
    for (const auto& [alpha, m] : mult_) total += m;
    return total;
}

WeightedSpectrum spectrum_of(const SSModule& a) {
    return WeightedSpectrum(a.q(), a.eigenvalues());
}

long delta(const WeightedSpectrum& s, const WeilMonomial& alpha) {
    return s.mult(alpha) - s.mult(alpha.tate_twist(-1));
}

std::optional<std::string> wm_purity_witness(const WeightedSpectrum& s, const Rational& j) {
    for (const auto& [alpha, m] : s.support()) {
        Rational w = alpha.weight();
        if (w > j && s.mult(alpha.tate_twist(1)) < m)
            return "condition (i) fails at " + alpha.to_string() + ": m(q^-1 a)=" +
                   std::to_string(s.mult(alpha.tate_twist(1))) + " < m(a)=" + std::to_string(m);
        Rational s_alpha = w - j;
        WeilMonomial reflected(j - alpha.e(), alpha.zeta());
        if (s.mult(reflected) != m)
            return "condition (ii) fails at " + alpha.to_string() +
                   ": m=" + std::to_string(m) + " but reflection " + reflected.to_string() +
                   " has m=" + std::to_string(s.mult(reflected));
        if (w >= j && delta(s, alpha) > 0 && !is_integer(s_alpha))
            return "condition (iii) fails at " + alpha.to_string() + ": delta=" +
                   std::to_string(delta(s, alpha)) + " > 0 but s_a=" + rational_to_string(s_alpha) +
                   " is not an integer";
    }
    return std::nullopt;
}

bool is_wm_pure(const WeightedSpectrum& s, const Rational& j) {
    return !wm_purity_witness(s, j).has_value();
}

long b_spectrum(const WeightedSpectrum& s, const Rational& j) {
    long b = 0;
    for (const auto& [alpha, m] : s.support())
        if (alpha.weight() >= j) b += delta(s, alpha);
    return b;
}

SSModule canonical_module(const WeightedSpectrum& s, const Rational& j) {
    if (auto witness = wm_purity_witness(s, j))
        throw WmPurityError("spectrum is not wm-pure of weight " + rational_to_string(j) + ": " +
                            *witness);
    std::vector<SSModule::Part> parts;
    for (const auto& [alpha, m] : s.support()) {
        if (alpha.weight() < j) continue;
        long d = delta(s, alpha);
        if (d <= 0) continue;
        Rational s_alpha = alpha.weight() - j;
        parts.push_back({{alpha, to_long(s_alpha.get_num())}, d});
    }
    SSModule out(s.q(), std::move(parts));
    if (!(spectrum_of(out) == s))
        throw WmPurityError("spectrum is not realizable by a pure module of weight " +
                            rational_to_string(j));
    return out;
}

namespace {

// dim ker N^k for k = 1, 2, ... up to nilpotency order.
std::vector<long> kernel_profile(const SSModule& a) {
    std::vector<long> out;
    for (long k = 1;; ++k) {
        long d = 0;
        bool deeper = false;
        for (const auto& [blk, mult] : a.parts()) {
            d += mult * std::min(blk.t + 1, k);
            if (blk.t + 1 > k) deeper = true;
        }
        out.push_back(d);
        if (!deeper) break;
    }
    return out;
}

} // namespace

bool purity_via_counting(const SSModule& a, const Rational& j) {
    WeightedSpectrum s = spectrum_of(a);
    if (!is_wm_pure(s, j)) return false;
    // dim ker N alone cannot separate V_{alpha,1} + V_{q^-1 alpha,1} from the
    // pure V_{alpha,2} + V_{q^-1 alpha,0}; comparing dim ker N^k for every k
    // against the canonical module does.
    return kernel_profile(a) == kernel_profile(canonical_module(s, j));
}

} // namespace wd
