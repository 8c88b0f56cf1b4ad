#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wd {

// Deterministic RNG: mt19937_64 output mapped by explicit arithmetic only, so
// the same seed gives the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish in [0, n); modulo bias is irrelevant at our tiny ranges.
    long below(long n) {
        if (n <= 0) return 0;
        return static_cast<long>(next() % static_cast<std::uint64_t>(n));
    }

    // Inclusive range.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    bool one_in(long n) { return below(n) == 0; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<long>(v.size())))];
    }

private:
    std::mt19937_64 eng_;
};

} // namespace wd
