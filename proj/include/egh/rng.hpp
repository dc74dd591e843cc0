#pragma once

#include "egh/scalar.hpp"

#include <cstdint>

namespace egh {

// Deterministic across platforms; used to derive per-step seeds and uniform
// draws without touching implementation-defined <random> distributions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
    splitmix64(s);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

    // dyadic uniform in [0, 1); exactly representable in both scalar modes
    double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class S>
    S unit() {
        if constexpr (scalar_traits<S>::exact) {
            const auto bits = next() >> 11;
            Rational r(static_cast<long long>(bits));
            BigInt den = 1;
            den <<= 53;
            return r / Rational(den);
        } else {
            return unit_double();
        }
    }

private:
    std::uint64_t state_;
};

} // namespace egh
