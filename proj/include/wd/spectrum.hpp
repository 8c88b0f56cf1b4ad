#pragma once

#include <map>
#include <optional>
#include <string>

#include "wd/wd_module.hpp"

namespace wd {

// Eigenvalue multiplicity data (W, m): finitely many monomials with positive
// multiplicities over a fixed residue cardinality.
class WeightedSpectrum {
public:
    explicit WeightedSpectrum(ResidueCard q) : q_(std::move(q)) {}
    WeightedSpectrum(ResidueCard q, std::map<WeilMonomial, long> mult);

    const ResidueCard& q() const noexcept { return q_; }
    const std::map<WeilMonomial, long>& support() const noexcept { return mult_; }

    long mult(const WeilMonomial& alpha) const;
    long total_mass() const;

    bool operator==(const WeightedSpectrum&) const = default;

private:
    ResidueCard q_;
    std::map<WeilMonomial, long> mult_;
};

WeightedSpectrum spectrum_of(const SSModule& a);

// m(alpha) - m(q alpha), absent keys read as zero.
long delta(const WeightedSpectrum& s, const WeilMonomial& alpha);

// The multiplicity purity conditions at weight j, with s_alpha = weight(alpha) - j:
//   (i)  m(q^{-1} alpha) >= m(alpha) whenever weight(alpha) > j;
//   (ii) m(alpha) = m(q^{-s_alpha} alpha) for every alpha;
//   (iii) s_alpha is an integer whenever weight(alpha) >= j and delta(alpha) > 0
//         (the block tops of any realization; fractional-gap spectra that pass
//         (i) and (ii) are not spectra of pure modules).
// Returns a violation description, or nullopt when wm-pure.
std::optional<std::string> wm_purity_witness(const WeightedSpectrum& s, const Rational& j);

bool is_wm_pure(const WeightedSpectrum& s, const Rational& j);

// Sum of delta over W+ = {alpha : weight(alpha) >= j}.
long b_spectrum(const WeightedSpectrum& s, const Rational& j);

// The unique pure-of-weight-j module with spectrum s: direct sum over
// alpha in W+ of V_{alpha, s_alpha} with multiplicity delta(alpha).
// Throws WmPurityError (naming condition and witness) if s is not wm-pure.
SSModule canonical_module(const WeightedSpectrum& s, const Rational& j);

// Purity detected purely by counting dimensions: wm-purity of the spectrum
// plus dim ker N^k == dim ker N^k of the canonical module for every k >= 1
// (k = 1 alone is block_count == b_spectrum, which impure modules can also
// attain). Agrees with is_pure on every module.
bool purity_via_counting(const SSModule& a, const Rational& j);

} // namespace wd
